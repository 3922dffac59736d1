#include "torsion/factor_fp.hpp"

#include <algorithm>
#include <stdexcept>

namespace torsion {
namespace fp {

namespace {

// c(x) = sum a_{ip} x^{ip}  ->  sum a_{ip} x^i, valid because a^p = a in F_p.
Vec pth_root(const Vec& c, std::uint64_t p) {
    Vec r;
    for (std::size_t i = 0; i < c.size(); i += p) r.push_back(c[i]);
    trim(r);
    return r;
}

bool is_one(const Vec& f) { return f.size() == 1 && f[0] == 1; }

Vec exact_quotient(const Vec& a, const Vec& b, std::uint64_t p) {
    Vec q, r;
    divmod(a, b, p, q, r);
    return q;
}

}  // namespace

std::vector<std::pair<Vec, unsigned>> squarefree_decomposition(const Vec& f, std::uint64_t p) {
    std::vector<std::pair<Vec, unsigned>> out;
    if (f.size() <= 1) return out;
    Vec c = gcd(f, derivative(f, p), p);
    Vec w = exact_quotient(f, c, p);
    unsigned i = 1;
    while (!is_one(w)) {
        Vec y = gcd(w, c, p);
        Vec z = exact_quotient(w, y, p);
        if (z.size() > 1) out.emplace_back(monic(z, p), i);
        ++i;
        w = std::move(y);
        c = exact_quotient(c, w, p);
    }
    if (!is_one(c)) {
        for (auto& [g, m] : squarefree_decomposition(pth_root(c, p), p))
            out.emplace_back(std::move(g), m * static_cast<unsigned>(p));
    }
    return out;
}

std::vector<std::pair<Vec, int>> distinct_degree(const Vec& f0, std::uint64_t p) {
    std::vector<std::pair<Vec, int>> out;
    Vec f = f0;
    const Vec x{0, 1};
    Vec h = rem(x, f, p);
    for (int d = 1; 2 * d <= static_cast<int>(f.size()) - 1; ++d) {
        h = powmod(h, p, f, p);
        Vec g = gcd(sub(h, x, p), f, p);
        if (g.size() > 1) {
            out.emplace_back(g, d);
            f = exact_quotient(f, g, p);
            h = rem(h, f, p);
        }
    }
    if (f.size() > 1) out.emplace_back(f, static_cast<int>(f.size()) - 1);
    return out;
}

std::vector<Vec> equal_degree(const Vec& f, int d, std::uint64_t p, std::mt19937_64& rng) {
    const int n = static_cast<int>(f.size()) - 1;
    if (n == d) return {f};
    std::uniform_int_distribution<std::uint64_t> coef(0, p - 1);
    Integer half = 0;
    if (p != 2) {
        mpz_ui_pow_ui(half.get_mpz_t(), p, static_cast<unsigned long>(d));
        half = (half - 1) / 2;
    }
    for (;;) {
        Vec a(n);
        for (auto& c : a) c = coef(rng);
        trim(a);
        if (a.size() <= 1) continue;
        Vec g = gcd(a, f, p);
        if (g.size() == 1) {
            Vec b;
            if (p == 2) {
                // Absolute trace to F_2: a + a^2 + ... + a^(2^(d-1)).
                Vec t = rem(a, f, p), sq = t;
                for (int i = 1; i < d; ++i) {
                    sq = mulmod(sq, sq, f, p);
                    t = add(t, sq, p);
                }
                b = t;
            } else {
                b = sub(powmod(a, half, f, p), Vec{1}, p);
            }
            g = gcd(b, f, p);
        }
        if (g.size() > 1 && g.size() < f.size()) {
            auto left = equal_degree(g, d, p, rng);
            auto right = equal_degree(exact_quotient(f, g, p), d, p, rng);
            left.insert(left.end(), right.begin(), right.end());
            return left;
        }
    }
}

std::vector<int> factor_degrees(const Vec& f, std::uint64_t p) {
    std::vector<int> degs;
    for (const auto& [g, d] : distinct_degree(f, p)) {
        const int count = (static_cast<int>(g.size()) - 1) / d;
        degs.insert(degs.end(), count, d);
    }
    std::sort(degs.begin(), degs.end());
    return degs;
}

bool less(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<Vec> factor_squarefree(const Vec& f, std::uint64_t p, std::mt19937_64& rng) {
    std::vector<Vec> out;
    for (const auto& [g, d] : distinct_degree(f, p)) {
        auto parts = equal_degree(g, d, p, rng);
        out.insert(out.end(), parts.begin(), parts.end());
    }
    std::sort(out.begin(), out.end(), less);
    return out;
}

}  // namespace fp

std::vector<FpFactor> factor_fp(const UniPolyFp& f, std::uint64_t seed) {
    if (f.is_zero()) throw std::invalid_argument("factor_fp: zero polynomial");
    const std::uint64_t p = f.modulus();
    std::mt19937_64 rng(seed);
    std::vector<FpFactor> out;
    const fp::Vec m = fp::monic(f.coeffs(), p);
    for (const auto& [part, mult] : fp::squarefree_decomposition(m, p))
        for (auto& g : fp::factor_squarefree(part, p, rng)) out.push_back({UniPolyFp(p, std::move(g)), mult});
    std::sort(out.begin(), out.end(), [](const FpFactor& a, const FpFactor& b) {
        if (a.factor.coeffs() != b.factor.coeffs()) return fp::less(a.factor.coeffs(), b.factor.coeffs());
        return a.multiplicity < b.multiplicity;
    });
    return out;
}

bool is_irreducible_fp(const UniPolyFp& f) {
    const int n = f.degree();
    if (n < 1) return false;
    if (n == 1) return true;
    const std::uint64_t p = f.modulus();
    const fp::Vec m = fp::monic(f.coeffs(), p);
    const fp::Vec x{0, 1};
    auto frob_power = [&](int k) {
        fp::Vec h = fp::rem(x, m, p);
        for (int i = 0; i < k; ++i) h = fp::powmod(h, p, m, p);
        return h;
    };
    if (fp::sub(frob_power(n), fp::rem(x, m, p), p).size() != 0) return false;
    for (int q = 2; q <= n; ++q) {
        if (n % q != 0 || !fp::is_prime(static_cast<std::uint64_t>(q))) continue;
        fp::Vec g = fp::gcd(fp::sub(frob_power(n / q), x, p), m, p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace torsion
