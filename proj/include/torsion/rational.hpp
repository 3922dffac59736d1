#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace torsion {

using Integer = mpz_class;

/// Exact rational number in canonical form: gcd(|num|, den) = 1, den > 0,
/// zero is 0/1. Backed by GMP's mpq.
class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}  // NOLINT: implicit by design of arithmetic code
    Rational(const Integer& v) : v_(v) {}  // NOLINT
    /// Throws ZeroDenominator when den == 0.
    Rational(const Integer& num, const Integer& den);

    /// Accepts "a", "a/b", with optional sign and surrounding spaces.
    static Rational parse(std::string_view text);

    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational inverse() const;
    Rational abs() const;

    std::string to_string() const { return v_.get_str(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

/// Canonical reduced form of num/den.
Rational rat_normalize(const Integer& num, const Integer& den);

Rational pow(const Rational& base, unsigned long e);

/// Squarefree integer c with r = c * s^2 for a rational s. Factors by trial
/// division followed by Pollard rho; a cofactor that resists rho within the
/// iteration budget is kept whole, so the result is squarefree whenever the
/// cofactor is.
Integer squarefree_part(const Rational& r);

/// Exact rational square root, if r is a square.
bool rational_sqrt(const Rational& r, Rational& root);

}  // namespace torsion
