#include "torsion/poly_fp.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace torsion {
namespace fp {

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - q * nt);
        std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    if (r != 1) throw std::domain_error("inverse of zero mod p");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

void trim(Vec& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Vec add(const Vec& a, const Vec& b, std::uint64_t p) {
    Vec r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t s = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
        r[i] = s >= p ? s - p : s;
    }
    trim(r);
    return r;
}

Vec sub(const Vec& a, const Vec& b, std::uint64_t p) {
    Vec r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        r[i] = x >= y ? x - y : x + p - y;
    }
    trim(r);
    return r;
}

Vec mul(const Vec& a, const Vec& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Vec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        const std::uint64_t ai = a[i];
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + ai * b[j]) % p;
    }
    trim(r);
    return r;
}

Vec scale(const Vec& a, std::uint64_t c, std::uint64_t p) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c % p;
    trim(r);
    return r;
}

void divmod(const Vec& a, const Vec& b, std::uint64_t p, Vec& q, Vec& r) {
    assert(!b.empty());
    r = a;
    q.clear();
    if (a.size() < b.size()) return;
    const std::size_t db = b.size() - 1;
    const std::uint64_t inv = inverse(b.back(), p);
    q.assign(a.size() - db, 0);
    for (std::size_t k = a.size(); k-- > db;) {
        const std::uint64_t c = r[k] * inv % p;
        q[k - db] = c;
        if (c == 0) continue;
        const std::uint64_t neg = p - c;
        for (std::size_t j = 0; j <= db; ++j) r[k - db + j] = (r[k - db + j] + neg * b[j]) % p;
    }
    r.resize(db);
    trim(r);
    trim(q);
}

Vec rem(const Vec& a, const Vec& b, std::uint64_t p) {
    Vec q, r;
    divmod(a, b, p, q, r);
    return r;
}

Vec monic(const Vec& f, std::uint64_t p) {
    if (f.empty() || f.back() == 1) return f;
    return scale(f, inverse(f.back(), p), p);
}

Vec gcd(Vec a, Vec b, std::uint64_t p) {
    while (!b.empty()) {
        Vec r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, p);
}

void xgcd(const Vec& a, const Vec& b, std::uint64_t p, Vec& g, Vec& s, Vec& t) {
    Vec r0 = a, r1 = b, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
    while (!r1.empty()) {
        Vec q, r;
        divmod(r0, r1, p, q, r);
        Vec s2 = sub(s0, mul(q, s1, p), p);
        Vec t2 = sub(t0, mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.empty()) {
        g = {};
        s = {};
        t = {};
        return;
    }
    const std::uint64_t inv = inverse(r0.back(), p);
    g = scale(r0, inv, p);
    s = scale(s0, inv, p);
    t = scale(t0, inv, p);
}

Vec derivative(const Vec& f, std::uint64_t p) {
    if (f.size() <= 1) return {};
    Vec r(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = f[i] * (i % p) % p;
    trim(r);
    return r;
}

Vec mulmod(const Vec& a, const Vec& b, const Vec& m, std::uint64_t p) {
    return rem(mul(a, b, p), m, p);
}

Vec powmod(const Vec& base, const Integer& e, const Vec& m, std::uint64_t p) {
    Vec result = rem(Vec{1}, m, p);
    Vec b = rem(base, m, p);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return result;
    for (std::size_t i = bits; i-- > 0;) {
        result = mulmod(result, result, m, p);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(result, b, m, p);
    }
    return result;
}

Vec powmod(const Vec& base, std::uint64_t e, const Vec& m, std::uint64_t p) {
    Vec result = rem(Vec{1}, m, p);
    Vec b = rem(base, m, p);
    while (e) {
        if (e & 1) result = mulmod(result, b, m, p);
        e >>= 1;
        if (e) b = mulmod(b, b, m, p);
    }
    return result;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull})
        if (n % d == 0) return n == d;
    for (std::uint64_t d = 17; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

}  // namespace fp

UniPolyFp::UniPolyFp(std::uint64_t p, Coeffs coeffs) : p_(p), c_(std::move(coeffs)) {
    if (p < 2 || p >= (1ull << 32)) throw std::invalid_argument("modulus must be a prime below 2^32");
    for (auto& c : c_) c %= p_;
    fp::trim(c_);
}

UniPolyFp::UniPolyFp(std::uint64_t p, const std::vector<long long>& signed_coeffs) : p_(p) {
    if (p < 2 || p >= (1ull << 32)) throw std::invalid_argument("modulus must be a prime below 2^32");
    const auto sp = static_cast<long long>(p);
    c_.reserve(signed_coeffs.size());
    for (long long c : signed_coeffs) c_.push_back(static_cast<std::uint64_t>(((c % sp) + sp) % sp));
    fp::trim(c_);
}

UniPolyFp UniPolyFp::x(std::uint64_t p) { return UniPolyFp(p, Coeffs{0, 1}); }

UniPolyFp UniPolyFp::constant(std::uint64_t p, std::uint64_t c) { return UniPolyFp(p, Coeffs{c}); }

std::string UniPolyFp::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c_[i] != 1) os << c_[i];
        if (i > 0 && c_[i] != 1) os << '*';
        if (i == 1) os << 'x';
        else if (i > 1) os << "x^" << i;
    }
    os << " (mod " << p_ << ')';
    return os.str();
}

namespace {
void check_same(const UniPolyFp& a, const UniPolyFp& b) {
    if (a.modulus() != b.modulus()) throw std::invalid_argument("mixed moduli");
}
}  // namespace

UniPolyFp operator+(const UniPolyFp& a, const UniPolyFp& b) {
    check_same(a, b);
    return UniPolyFp(a.modulus(), fp::add(a.coeffs(), b.coeffs(), a.modulus()));
}

UniPolyFp operator-(const UniPolyFp& a, const UniPolyFp& b) {
    check_same(a, b);
    return UniPolyFp(a.modulus(), fp::sub(a.coeffs(), b.coeffs(), a.modulus()));
}

UniPolyFp operator*(const UniPolyFp& a, const UniPolyFp& b) {
    check_same(a, b);
    return UniPolyFp(a.modulus(), fp::mul(a.coeffs(), b.coeffs(), a.modulus()));
}

UniPolyFp operator%(const UniPolyFp& a, const UniPolyFp& b) {
    check_same(a, b);
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    return UniPolyFp(a.modulus(), fp::rem(a.coeffs(), b.coeffs(), a.modulus()));
}

UniPolyFp operator/(const UniPolyFp& a, const UniPolyFp& b) {
    check_same(a, b);
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    fp::Vec q, r;
    fp::divmod(a.coeffs(), b.coeffs(), a.modulus(), q, r);
    return UniPolyFp(a.modulus(), std::move(q));
}

UniPolyFp monic(const UniPolyFp& f) { return UniPolyFp(f.modulus(), fp::monic(f.coeffs(), f.modulus())); }

UniPolyFp derivative(const UniPolyFp& f) {
    return UniPolyFp(f.modulus(), fp::derivative(f.coeffs(), f.modulus()));
}

UniPolyFp gcd(const UniPolyFp& a, const UniPolyFp& b) {
    check_same(a, b);
    return UniPolyFp(a.modulus(), fp::gcd(a.coeffs(), b.coeffs(), a.modulus()));
}

UniPolyFp powmod(const UniPolyFp& base, const Integer& e, const UniPolyFp& m) {
    check_same(base, m);
    return UniPolyFp(m.modulus(), fp::powmod(base.coeffs(), e, m.coeffs(), m.modulus()));
}

}  // namespace torsion
