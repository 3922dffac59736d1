#pragma once

#include "torsion/poly_z.hpp"
#include "torsion/rational.hpp"

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace torsion {

/// Dense univariate polynomial over Q. Index i holds the coefficient of
/// x^i; the leading coefficient is nonzero unless the polynomial is zero.
/// Products and exact quotients are computed on the primitive integer parts.
class UniPolyQ {
public:
    UniPolyQ() = default;
    explicit UniPolyQ(std::vector<Rational> coeffs);
    UniPolyQ(std::initializer_list<Rational> coeffs);
    static UniPolyQ constant(const Rational& c);
    static UniPolyQ x();
    /// c * x^k
    static UniPolyQ monomial(const Rational& c, unsigned k);
    static UniPolyQ from_zpoly(const ZPoly& f);

    /// Human format: "x^3 - 2*x + 1", also "3x^4+6x^2-1", "1/2*x - 3/4".
    static UniPolyQ parse(std::string_view text);

    const std::vector<Rational>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    Rational lc() const { return c_.empty() ? Rational(0) : c_.back(); }
    Rational operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

    /// "3*x^4 + 6*x^2 - 1"
    std::string to_string() const;

    UniPolyQ monic() const;
    UniPolyQ derivative() const;
    Rational eval(const Rational& x) const;
    /// f(c*x)
    UniPolyQ scale_variable(const Rational& c) const;

    /// Splits f = content * prim with prim in Z[x] primitive and lc(prim) > 0.
    void to_primitive(Rational& content, ZPoly& prim) const;
    /// True iff every coefficient is an integer.
    bool is_integral() const;

    UniPolyQ& operator+=(const UniPolyQ& o);
    UniPolyQ& operator-=(const UniPolyQ& o);
    UniPolyQ& operator*=(const Rational& c);

    friend UniPolyQ operator+(UniPolyQ a, const UniPolyQ& b) { return a += b; }
    friend UniPolyQ operator-(UniPolyQ a, const UniPolyQ& b) { return a -= b; }
    friend UniPolyQ operator-(const UniPolyQ& a);
    friend UniPolyQ operator*(const UniPolyQ& a, const UniPolyQ& b);
    friend UniPolyQ operator*(UniPolyQ a, const Rational& c) { return a *= c; }
    friend UniPolyQ operator*(const Rational& c, UniPolyQ a) { return a *= c; }
    friend bool operator==(const UniPolyQ& a, const UniPolyQ& b) { return a.c_ == b.c_; }

private:
    void trim();
    std::vector<Rational> c_;
};

UniPolyQ poly_add(const UniPolyQ& a, const UniPolyQ& b);
UniPolyQ poly_mul(const UniPolyQ& a, const UniPolyQ& b);
/// Throws InexactDivision unless b divides a.
UniPolyQ poly_exact_div(const UniPolyQ& a, const UniPolyQ& b);
/// Euclidean division over Q; b nonzero.
void poly_divmod(const UniPolyQ& a, const UniPolyQ& b, UniPolyQ& q, UniPolyQ& r);
/// Monic gcd over Q (zero iff both inputs are zero).
UniPolyQ poly_gcd(const UniPolyQ& a, const UniPolyQ& b);
UniPolyQ poly_pow(const UniPolyQ& a, unsigned e);
/// p(q(x))
UniPolyQ poly_compose(const UniPolyQ& p, const UniPolyQ& q);

/// Ordering used for deterministic factor lists: degree first, then
/// coefficients compared from the constant term upwards.
bool poly_less(const UniPolyQ& a, const UniPolyQ& b);

}  // namespace torsion
