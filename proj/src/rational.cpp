#include "torsion/rational.hpp"

#include "torsion/errors.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <vector>

namespace torsion {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw ZeroDenominator();
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty rational");
    auto valid_int = [](std::string_view t) {
        std::size_t i = 0;
        if (i < t.size() && (t[i] == '+' || t[i] == '-')) ++i;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto to_int = [](std::string t) {
        if (!t.empty() && t[0] == '+') t.erase(0, 1);
        return Integer(t, 10);
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!valid_int(s)) throw ParseError("not a rational: '" + std::string(text) + "'");
        return Rational(to_int(s));
    }
    std::string n = s.substr(0, slash), d = s.substr(slash + 1);
    if (!valid_int(n) || !valid_int(d))
        throw ParseError("not a rational: '" + std::string(text) + "'");
    return Rational(to_int(n), to_int(d));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ZeroDenominator();
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw ZeroDenominator();
    return Rational(mpq_class(1) / v_);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_.get_str(); }

Rational rat_normalize(const Integer& num, const Integer& den) { return Rational(num, den); }

Rational pow(const Rational& base, unsigned long e) {
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), e);
    return Rational(n, d);
}

namespace {

Integer pollard_brent(const Integer& n, unsigned long c) {
    auto f = [&](const Integer& x) {
        Integer y = x * x + c;
        mpz_mod(y.get_mpz_t(), y.get_mpz_t(), n.get_mpz_t());
        return y;
    };
    Integer y = 2, x, q = 1, g = 1, ys;
    const unsigned long m = 128;
    unsigned long r = 1;
    const unsigned long budget = 1ul << 22;
    unsigned long spent = 0;
    while (g == 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) y = f(y);
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            unsigned long lim = std::min(m, r - k);
            for (unsigned long i = 0; i < lim; ++i) {
                y = f(y);
                Integer diff = x - y;
                q = (q * abs(diff)) % n;
            }
            g = gcd(q, n);
            k += m;
        }
        r *= 2;
        spent += r;
        if (spent > budget) return n;
    }
    if (g == n) {
        do {
            ys = f(ys);
            g = gcd(Integer(abs(x - ys)), n);
        } while (g == 1);
    }
    return g;
}

// Appends prime factors (with multiplicity) of n > 1; unfactorable
// composites are appended as-is.
void factor_into(const Integer& n, std::vector<Integer>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        out.push_back(n);
        return;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        Integer s;
        mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
        factor_into(s, out);
        factor_into(s, out);
        return;
    }
    for (unsigned long c = 1; c < 8; ++c) {
        Integer g = pollard_brent(n, c);
        if (g != n && g != 1) {
            factor_into(g, out);
            factor_into(Integer(n / g), out);
            return;
        }
    }
    out.push_back(n);
}

}  // namespace

Integer squarefree_part(const Rational& r) {
    if (r.is_zero()) return 0;
    Integer n = abs(r.num() * r.den());
    Integer result = r.sign();
    for (unsigned long p = 2; p < 100000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        if (e & 1) result *= p;
    }
    if (n == 1) return result;
    std::vector<Integer> primes;
    factor_into(n, primes);
    std::sort(primes.begin(), primes.end());
    for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        if ((j - i) & 1) result *= primes[i];
        i = j;
    }
    return result;
}

bool rational_sqrt(const Rational& r, Rational& root) {
    if (r.sign() < 0) return false;
    Integer n = r.num(), d = r.den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    Integer sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    root = Rational(sn, sd);
    return true;
}

}  // namespace torsion
