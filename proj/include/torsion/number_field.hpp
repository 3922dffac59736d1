#pragma once

#include "torsion/poly_q.hpp"

#include <vector>

namespace torsion {

/// Residue class in Q[x]/(g) with g monic. The modulus is carried by value,
/// so an element is self-describing; binary operations require equal moduli
/// and throw FieldMismatch otherwise.
class NumberFieldElement {
public:
    /// The class of rep modulo `modulus`; the modulus is made monic.
    NumberFieldElement(UniPolyQ modulus, const UniPolyQ& rep);
    /// Rational constant in the field defined by `modulus`.
    NumberFieldElement(UniPolyQ modulus, const Rational& c);

    /// Class of x in Q[x]/(modulus).
    static NumberFieldElement generator(const UniPolyQ& modulus);
    /// The trivial field Q = Q[x]/(x).
    static NumberFieldElement rational(const Rational& c);

    const UniPolyQ& modulus() const { return modulus_; }
    const UniPolyQ& rep() const { return rep_; }
    int field_degree() const { return modulus_.degree(); }

    bool is_zero() const { return rep_.is_zero(); }
    bool is_one() const { return rep_ == UniPolyQ::constant(1); }
    bool is_rational() const { return rep_.degree() <= 0; }
    Rational constant_term() const { return rep_[0]; }

    NumberFieldElement zero() const { return {modulus_, Rational(0)}; }
    NumberFieldElement one() const { return {modulus_, Rational(1)}; }
    NumberFieldElement lift(const Rational& c) const { return {modulus_, c}; }

    /// Multiplicative inverse via extended Euclid in Q[x]. Throws
    /// NotInvertible if gcd(rep, modulus) != 1, which can only happen for a
    /// reducible modulus.
    NumberFieldElement inverse() const;
    NumberFieldElement pow(unsigned long e) const;

    /// Matrix of multiplication by this element on the power basis.
    std::vector<std::vector<Rational>> multiplication_matrix() const;
    /// Norm to Q (determinant of the multiplication matrix).
    Rational norm() const;
    /// Trace to Q.
    Rational trace() const;
    /// Monic minimal polynomial over Q, found from the first linear
    /// dependency among 1, a, a^2, ...
    UniPolyQ minimal_polynomial() const;

    std::string to_string() const;

    NumberFieldElement& operator+=(const NumberFieldElement& o);
    NumberFieldElement& operator-=(const NumberFieldElement& o);
    NumberFieldElement& operator*=(const NumberFieldElement& o);

    friend NumberFieldElement operator+(NumberFieldElement a, const NumberFieldElement& b) { return a += b; }
    friend NumberFieldElement operator-(NumberFieldElement a, const NumberFieldElement& b) { return a -= b; }
    friend NumberFieldElement operator*(NumberFieldElement a, const NumberFieldElement& b) { return a *= b; }
    friend NumberFieldElement operator/(const NumberFieldElement& a, const NumberFieldElement& b) {
        return a * b.inverse();
    }
    friend NumberFieldElement operator-(const NumberFieldElement& a);
    friend NumberFieldElement operator*(NumberFieldElement a, const Rational& c);

    friend bool operator==(const NumberFieldElement& a, const NumberFieldElement& b) {
        return a.modulus_ == b.modulus_ && a.rep_ == b.rep_;
    }

    bool same_field(const NumberFieldElement& o) const { return modulus_ == o.modulus_; }

private:
    void reduce();
    void check_field(const NumberFieldElement& o) const;
    UniPolyQ modulus_;
    UniPolyQ rep_;
};

/// f(x0), reduced modulo the field of x0.
NumberFieldElement poly_eval_in_field(const UniPolyQ& f, const NumberFieldElement& x0);

NumberFieldElement nf_invert(const NumberFieldElement& a);

/// Determinant over Q by fraction-free (Bareiss) elimination on the
/// cleared-denominator matrix.
Rational determinant(std::vector<std::vector<Rational>> m);

}  // namespace torsion
