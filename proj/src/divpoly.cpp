#include "torsion/divpoly.hpp"

#include "torsion/errors.hpp"

namespace torsion {

const UniPolyQ& DivPolyCache::psi_locked(unsigned n) {
    if (auto it = psi_.find(n); it != psi_.end()) return it->second;
    const Rational& a = curve_.a();
    const Rational& b = curve_.b();
    UniPolyQ r;
    switch (n) {
    case 0: break;
    case 1: r = UniPolyQ::constant(1); break;
    case 2: r = UniPolyQ::constant(2); break;
    case 3: r = UniPolyQ{-a * a, 12 * b, 6 * a, Rational(0), Rational(3)}; break;
    case 4:
        r = UniPolyQ{-8 * b * b - a * a * a, -4 * a * b, -5 * a * a, 20 * b, 5 * a, Rational(0), Rational(1)} *
            Rational(4);
        break;
    default: {
        const unsigned m = n / 2;
        const UniPolyQ y2 = curve_.two_division();
        // std::map references stay valid across inserts.
        const UniPolyQ& fm2 = psi_locked(m + 2);
        const UniPolyQ& fm1 = psi_locked(m + 1);
        const UniPolyQ& f0 = psi_locked(m);
        const UniPolyQ& fmm1 = psi_locked(m - 1);
        if (n % 2 == 1) {
            UniPolyQ s = fm2 * poly_pow(f0, 3), t = fmm1 * poly_pow(fm1, 3);
            if (m % 2 == 0) s = s * y2 * y2; else t = t * y2 * y2;
            r = s - t;
        } else {
            const UniPolyQ& fmm2 = psi_locked(m - 2);
            r = f0 * Rational::parse("1/2") * (fm2 * fmm1 * fmm1 - fmm2 * fm1 * fm1);
        }
    }
    }
    return psi_.emplace(n, std::move(r)).first->second;
}

const UniPolyQ& DivPolyCache::primitive_locked(unsigned n) {
    if (auto it = prim_.find(n); it != prim_.end()) return it->second;
    UniPolyQ r;
    if (n == 2) {
        r = curve_.two_division();
    } else {
        UniPolyQ den = UniPolyQ::constant(1);
        for (unsigned d = 3; d < n; ++d)
            if (n % d == 0) den = den * primitive_locked(d);
        r = poly_exact_div(psi_locked(n), den);
    }
    return prim_.emplace(n, std::move(r)).first->second;
}

UniPolyQ DivPolyCache::psi(unsigned n) {
    std::lock_guard lock(mu_);
    return psi_locked(n);
}

UniPolyQ DivPolyCache::primitive(unsigned n) {
    if (n < 2) throw MathError("primitive division polynomial needs n >= 2");
    std::lock_guard lock(mu_);
    return primitive_locked(n);
}

UniPolyQ psi(const Curve& e, unsigned n) { return DivPolyCache(e).psi(n); }

UniPolyQ primitive_divpoly(const Curve& e, unsigned n) { return DivPolyCache(e).primitive(n); }

int psi_degree(unsigned n) {
    if (n == 0) return -1;
    const int k = static_cast<int>(n);
    return n % 2 ? (k * k - 1) / 2 : (k * k - 4) / 2;
}

int primitive_degree(unsigned n) {
    if (n == 2) return 3;
    long num = static_cast<long>(n) * n, den = 1;
    unsigned m = n;
    for (unsigned p = 2; p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        num *= static_cast<long>(p) * p - 1;
        den *= static_cast<long>(p) * p;
    }
    return static_cast<int>(num / den / 2);
}

std::optional<unsigned> exact_order_of_x(DivPolyCache& cache, const NumberFieldElement& x0, unsigned n_max) {
    for (unsigned n = 2; n <= n_max; ++n)
        if (poly_eval_in_field(cache.primitive(n), x0).is_zero()) return n;
    return std::nullopt;
}

std::optional<unsigned> exact_order_of_x(const Curve& e, const NumberFieldElement& x0, unsigned n_max) {
    DivPolyCache cache(e);
    return exact_order_of_x(cache, x0, n_max);
}

}  // namespace torsion
