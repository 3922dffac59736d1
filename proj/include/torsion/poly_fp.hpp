#pragma once

#include "torsion/rational.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace torsion {

/// Dense polynomial over F_p, p a prime below 2^32. Coefficients are kept
/// reduced into [0, p) and trimmed so that the leading coefficient is
/// nonzero (the zero polynomial has no coefficients).
class UniPolyFp {
public:
    using Coeffs = std::vector<std::uint64_t>;

    UniPolyFp() = default;
    UniPolyFp(std::uint64_t p, Coeffs coeffs);
    UniPolyFp(std::uint64_t p, const std::vector<long long>& signed_coeffs);
    static UniPolyFp x(std::uint64_t p);
    static UniPolyFp constant(std::uint64_t p, std::uint64_t c);

    std::uint64_t modulus() const { return p_; }
    const Coeffs& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::uint64_t lc() const { return c_.empty() ? 0 : c_.back(); }
    std::uint64_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

    std::string to_string() const;

    friend bool operator==(const UniPolyFp& a, const UniPolyFp& b) {
        return a.p_ == b.p_ && a.c_ == b.c_;
    }

private:
    std::uint64_t p_ = 2;
    Coeffs c_;
};

UniPolyFp operator+(const UniPolyFp& a, const UniPolyFp& b);
UniPolyFp operator-(const UniPolyFp& a, const UniPolyFp& b);
UniPolyFp operator*(const UniPolyFp& a, const UniPolyFp& b);
UniPolyFp operator%(const UniPolyFp& a, const UniPolyFp& b);
UniPolyFp operator/(const UniPolyFp& a, const UniPolyFp& b);

UniPolyFp monic(const UniPolyFp& f);
UniPolyFp derivative(const UniPolyFp& f);
/// Monic gcd (zero if both inputs are zero).
UniPolyFp gcd(const UniPolyFp& a, const UniPolyFp& b);
/// base^e mod m.
UniPolyFp powmod(const UniPolyFp& base, const Integer& e, const UniPolyFp& m);

/// Raw coefficient-vector kernels shared by UniPolyFp and the factorizer.
namespace fp {

using Vec = std::vector<std::uint64_t>;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inverse(std::uint64_t a, std::uint64_t p);

void trim(Vec& f);
Vec add(const Vec& a, const Vec& b, std::uint64_t p);
Vec sub(const Vec& a, const Vec& b, std::uint64_t p);
Vec mul(const Vec& a, const Vec& b, std::uint64_t p);
Vec scale(const Vec& a, std::uint64_t c, std::uint64_t p);
/// Quotient and remainder; b nonzero.
void divmod(const Vec& a, const Vec& b, std::uint64_t p, Vec& q, Vec& r);
Vec rem(const Vec& a, const Vec& b, std::uint64_t p);
Vec monic(const Vec& f, std::uint64_t p);
Vec gcd(Vec a, Vec b, std::uint64_t p);
/// Extended gcd: s*a + t*b = g (g monic).
void xgcd(const Vec& a, const Vec& b, std::uint64_t p, Vec& g, Vec& s, Vec& t);
Vec derivative(const Vec& f, std::uint64_t p);
Vec mulmod(const Vec& a, const Vec& b, const Vec& m, std::uint64_t p);
Vec powmod(const Vec& base, const Integer& e, const Vec& m, std::uint64_t p);
Vec powmod(const Vec& base, std::uint64_t e, const Vec& m, std::uint64_t p);

bool is_prime(std::uint64_t n);

}  // namespace fp
}  // namespace torsion
