#include "torsion/factor_q.hpp"

#include "torsion/errors.hpp"

#include <algorithm>
#include <numeric>

namespace torsion {

UniPolyQ FactorizationQ::expand() const {
    UniPolyQ r = UniPolyQ::constant(content);
    for (const auto& [g, m] : factors) r = r * poly_pow(g, m);
    return r;
}

std::vector<int> FactorizationQ::degrees() const {
    std::vector<int> d;
    for (const auto& [g, m] : factors) d.insert(d.end(), m, g.degree());
    return d;
}

namespace {

using Bits = std::vector<char>;
using detail::good_prime;
using detail::subset_sums;

ZPoly mulmod_z(const ZPoly& a, const ZPoly& b, const Integer& m) { return zpoly::mod(zpoly::mul(a, b), m); }

// Division by a monic h over Z/m.
void divmod_monic(const ZPoly& a, const ZPoly& h, const Integer& m, ZPoly& q, ZPoly& r) {
    r = zpoly::mod(a, m);
    q.clear();
    const int dh = zpoly::degree(h);
    if (zpoly::degree(r) < dh) return;
    q.assign(r.size() - dh, 0);
    for (int k = zpoly::degree(r); k >= dh; --k) {
        Integer c = r[k];
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        if (c == 0) continue;
        q[k - dh] = c;
        for (int j = 0; j <= dh; ++j) mpz_submul(r[k - dh + j].get_mpz_t(), c.get_mpz_t(), h[j].get_mpz_t());
    }
    r.resize(dh);
    r = zpoly::mod(r, m);
    q = zpoly::mod(q, m);
}

ZPoly from_fp(const fp::Vec& v) {
    ZPoly r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = static_cast<unsigned long>(v[i]);
    return r;
}

// One quadratic Hensel step: from f = g*h, s*g + t*h = 1 (mod m) to the same
// relations mod m^2; h stays monic.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Integer& m2) {
    ZPoly e = zpoly::mod(zpoly::sub(f, zpoly::mul(g, h)), m2);
    ZPoly q, r;
    divmod_monic(zpoly::mul(s, e), h, m2, q, r);
    ZPoly g1 = zpoly::mod(zpoly::add(g, zpoly::add(zpoly::mul(t, e), zpoly::mul(q, g))), m2);
    ZPoly h1 = zpoly::mod(zpoly::add(h, r), m2);
    ZPoly b = zpoly::mod(zpoly::sub(zpoly::add(zpoly::mul(s, g1), zpoly::mul(t, h1)), ZPoly{1}), m2);
    ZPoly c, d;
    divmod_monic(zpoly::mul(s, b), h1, m2, c, d);
    s = zpoly::mod(zpoly::sub(s, d), m2);
    t = zpoly::mod(zpoly::sub(t, zpoly::add(zpoly::mul(t, b), zpoly::mul(c, g1))), m2);
    g = std::move(g1);
    h = std::move(h1);
}

Integer inverse_mod(const Integer& a, const Integer& m) {
    Integer r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw MathError("leading coefficient not invertible modulo the lifting modulus");
    return r;
}

// F = lc(F) * prod(factors) mod p, lifted along the moduli chain p, p^2, p^4,
// ..., modulus. Returns monic lifts.
void lift_tree(const ZPoly& F, const std::vector<fp::Vec>& factors, std::size_t lo, std::size_t hi,
               std::uint64_t p, const std::vector<Integer>& chain, std::vector<ZPoly>& out) {
    const Integer& modulus = chain.back();
    if (hi - lo == 1) {
        Integer inv = inverse_mod(F.back(), modulus);
        out[lo] = zpoly::mod(zpoly::scale(F, inv), modulus);
        return;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    fp::Vec left{1}, right{1};
    for (std::size_t i = lo; i < mid; ++i) left = fp::mul(left, factors[i], p);
    for (std::size_t i = mid; i < hi; ++i) right = fp::mul(right, factors[i], p);
    const std::uint64_t l = mpz_fdiv_ui(F.back().get_mpz_t(), p);
    fp::Vec gl = fp::scale(left, l, p);
    fp::Vec gg, sv, tv;
    fp::xgcd(gl, right, p, gg, sv, tv);
    ZPoly g = from_fp(gl), h = from_fp(right), s = from_fp(sv), t = from_fp(tv);
    for (std::size_t i = 1; i < chain.size(); ++i) hensel_step(zpoly::mod(F, chain[i]), g, h, s, t, chain[i]);
    Integer inv = inverse_mod(g.back(), modulus);
    ZPoly gm = zpoly::mod(zpoly::scale(g, inv), modulus);
    lift_tree(gm, factors, lo, mid, p, chain, out);
    lift_tree(h, factors, mid, hi, p, chain, out);
}

Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<ZPoly> recombine(ZPoly f, std::vector<ZPoly> lifted, const Integer& M, const Bits& allowed) {
    std::vector<ZPoly> result;
    const Integer half = M / 2;
    auto sym = [&](Integer v) {
        mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), M.get_mpz_t());
        if (v > half) v -= M;
        return v;
    };
    std::size_t s = 1;
    while (2 * s <= lifted.size()) {
        const std::size_t r = lifted.size();
        const int n = zpoly::degree(f);
        bool found = false;
        std::vector<std::size_t> idx(s);
        std::iota(idx.begin(), idx.end(), 0);
        do {
            int ds = 0;
            for (auto i : idx) ds += zpoly::degree(lifted[i]);
            if (ds >= static_cast<int>(allowed.size()) || !allowed[ds]) continue;
            std::vector<char> in(r, 0);
            for (auto i : idx) in[i] = 1;
            const bool use_subset = 2 * ds <= n;
            const Integer lcf = f.back();
            // Constant-term test before forming the full product.
            Integer c0 = lcf;
            for (std::size_t i = 0; i < r; ++i)
                if (static_cast<bool>(in[i]) == use_subset) c0 = sym(c0 * lifted[i][0]);
            if (f[0] != 0) {
                if (c0 == 0) continue;
                Integer target = lcf * f[0];
                if (!mpz_divisible_p(target.get_mpz_t(), c0.get_mpz_t())) continue;
            }
            ZPoly prod{lcf};
            for (std::size_t i = 0; i < r; ++i)
                if (static_cast<bool>(in[i]) == use_subset) prod = mulmod_z(prod, lifted[i], M);
            ZPoly g = zpoly::primitive_part(zpoly::symmetric_mod(prod, M));
            ZPoly q;
            if (!zpoly::divides(f, g, q)) continue;
            ZPoly factor = use_subset ? g : zpoly::primitive_part(q);
            ZPoly cofactor;
            zpoly::divides(f, factor, cofactor);
            result.push_back(std::move(factor));
            f = zpoly::primitive_part(cofactor);
            std::vector<ZPoly> rest;
            for (std::size_t i = 0; i < r; ++i)
                if (!in[i]) rest.push_back(std::move(lifted[i]));
            lifted = std::move(rest);
            // Keep lifted factors monic with respect to the new leading coefficient.
            found = true;
            break;
        } while (next_combination(idx, r));
        if (!found) ++s;
    }
    if (zpoly::degree(f) > 0) result.push_back(zpoly::primitive_part(f));
    return result;
}

}  // namespace

namespace detail {

std::vector<char> subset_sums(const std::vector<int>& degs, int n) {
    std::vector<char> s(n + 1, 0);
    s[0] = 1;
    for (int d : degs)
        for (int v = n; v >= d; --v)
            if (s[v - d]) s[v] = 1;
    return s;
}

bool good_prime(const ZPoly& f, std::uint64_t p, fp::Vec& fp_monic) {
    if (mpz_fdiv_ui(f.back().get_mpz_t(), p) == 0) return false;
    fp::Vec m = fp::monic(zpoly::reduce(f, p), p);
    if (fp::gcd(m, fp::derivative(m, p), p).size() != 1) return false;
    fp_monic = std::move(m);
    return true;
}

Integer factor_coefficient_bound(const ZPoly& f) {
    const unsigned k = static_cast<unsigned>(zpoly::degree(f)) / 2;
    return abs(f.back()) * binomial(k, k / 2) * zpoly::norm2_ceil(f);
}

std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<fp::Vec>& factors, std::uint64_t p, unsigned k,
                               Integer& modulus) {
    std::vector<Integer> chain{Integer(static_cast<unsigned long>(p))};
    Integer target;
    mpz_ui_pow_ui(target.get_mpz_t(), p, k);
    while (chain.back() < target) chain.push_back(chain.back() * chain.back());
    modulus = chain.back();
    std::vector<ZPoly> out(factors.size());
    if (factors.empty()) return out;
    lift_tree(zpoly::mod(f, modulus), factors, 0, factors.size(), p, chain, out);
    return out;
}

std::vector<ZPoly> factor_squarefree_z(const ZPoly& f0, const FactorOptions& opts) {
    std::vector<ZPoly> out;
    ZPoly f = zpoly::primitive_part(f0);
    if (zpoly::degree(f) <= 0) return out;
    if (f[0] == 0) {
        out.push_back(ZPoly{0, 1});
        f.erase(f.begin());
        zpoly::trim(f);
    }
    const int n = zpoly::degree(f);
    if (n <= 0) return out;
    if (n == 1) {
        out.push_back(f);
        return out;
    }

    Bits allowed(n + 1, 1);
    std::uint64_t best_p = 0;
    fp::Vec best_poly;
    std::size_t best_count = 0;
    unsigned seen = 0;
    for (std::uint64_t p = 3; seen < opts.prime_trials; p += 2) {
        if (!fp::is_prime(p)) continue;
        fp::Vec fpm;
        if (!good_prime(f, p, fpm)) continue;
        ++seen;
        auto degs = fp::factor_degrees(fpm, p);
        Bits sums = subset_sums(degs, n);
        for (int v = 0; v <= n; ++v) allowed[v] = allowed[v] && sums[v];
        if (best_p == 0 || degs.size() < best_count) {
            best_p = p;
            best_count = degs.size();
            best_poly = fpm;
        }
        bool proper = false;
        for (int v = 1; v < n; ++v) proper = proper || allowed[v];
        if (!proper) {
            out.push_back(f);
            return out;
        }
    }

    std::mt19937_64 rng(opts.seed);
    auto modular = fp::factor_squarefree(best_poly, best_p, rng);
    const Integer bound = 2 * factor_coefficient_bound(f) + 1;
    unsigned k = 1;
    Integer pk = static_cast<unsigned long>(best_p);
    while (pk <= bound) {
        pk *= static_cast<unsigned long>(best_p);
        ++k;
    }
    Integer modulus;
    auto lifted = hensel_lift(f, modular, best_p, k, modulus);
    auto found = recombine(f, std::move(lifted), modulus, allowed);
    out.insert(out.end(), found.begin(), found.end());
    return out;
}

}  // namespace detail

bool is_squarefree_q(const ZPoly& f) {
    if (zpoly::degree(f) <= 0) return true;
    unsigned tried = 0;
    for (std::uint64_t p = 3; tried < 6; p += 2) {
        if (!fp::is_prime(p)) continue;
        if (mpz_fdiv_ui(f.back().get_mpz_t(), p) == 0) continue;
        ++tried;
        fp::Vec m;
        if (good_prime(f, p, m)) return true;
    }
    return zpoly::degree(zpoly::gcd(f, zpoly::derivative(f))) == 0;
}

std::vector<std::pair<ZPoly, unsigned>> squarefree_decomposition_q(const UniPolyQ& f) {
    if (f.is_zero()) throw MathError("squarefree decomposition of zero");
    std::vector<std::pair<ZPoly, unsigned>> out;
    Rational c;
    ZPoly prim;
    f.to_primitive(c, prim);
    if (zpoly::degree(prim) <= 0) return out;
    if (is_squarefree_q(prim)) {
        out.emplace_back(std::move(prim), 1);
        return out;
    }
    // Yun's algorithm over Q.
    const UniPolyQ a = UniPolyQ::from_zpoly(prim);
    const UniPolyQ da = a.derivative();
    const UniPolyQ b = poly_gcd(a, da);
    UniPolyQ cc = poly_exact_div(a, b);
    UniPolyQ d = poly_exact_div(da, b) - cc.derivative();
    unsigned i = 1;
    while (cc.degree() > 0) {
        UniPolyQ ai = poly_gcd(cc, d);
        cc = poly_exact_div(cc, ai);
        d = poly_exact_div(d, ai) - cc.derivative();
        if (ai.degree() > 0) {
            Rational ic;
            ZPoly ip;
            ai.to_primitive(ic, ip);
            out.emplace_back(std::move(ip), i);
        }
        ++i;
    }
    return out;
}

FactorizationQ factor_q(const UniPolyQ& f, const FactorOptions& opts) {
    if (f.is_zero()) throw MathError("factor_q: zero polynomial");
    FactorizationQ result;
    if (f.degree() == 0) {
        result.content = f.lc();
        return result;
    }
    ZPoly prim;
    f.to_primitive(result.content, prim);
    for (auto& [part, mult] : squarefree_decomposition_q(f))
        for (auto& g : detail::factor_squarefree_z(part, opts))
            result.factors.emplace_back(UniPolyQ::from_zpoly(g), mult);
    std::sort(result.factors.begin(), result.factors.end(), [](const auto& a, const auto& b) {
        if (a.first == b.first) return a.second < b.second;
        return poly_less(a.first, b.first);
    });
    return result;
}

namespace {

void roots_of_squarefree(ZPoly g, std::vector<Rational>& out) {
    if (g[0] == 0) {
        out.emplace_back(0);
        g.erase(g.begin());
    }
    const int n = zpoly::degree(g);
    if (n < 1) return;
    if (n == 1) {
        out.emplace_back(-g[0], g[1]);
        return;
    }
    const fp::Vec x{0, 1};
    std::uint64_t best_p = 0;
    fp::Vec best_image, best_lin;
    unsigned seen = 0;
    for (std::uint64_t p = 3; seen < 6; p += 2) {
        if (!fp::is_prime(p)) continue;
        fp::Vec m;
        if (!good_prime(g, p, m)) continue;
        ++seen;
        fp::Vec lin = fp::gcd(fp::sub(fp::powmod(x, p, m, p), x, p), m, p);
        if (lin.size() == 1) return;
        if (best_p == 0 || lin.size() < best_lin.size()) {
            best_p = p;
            best_image = std::move(m);
            best_lin = std::move(lin);
        }
    }
    std::mt19937_64 rng(kDefaultSeed);
    std::vector<fp::Vec> modular = fp::equal_degree(best_lin, 1, best_p, rng);
    const std::size_t roots = modular.size();
    if (best_lin.size() < best_image.size()) {
        fp::Vec q, r;
        fp::divmod(best_image, best_lin, best_p, q, r);
        modular.push_back(std::move(q));
    }
    const Integer bound = 2 * detail::factor_coefficient_bound(g) + 1;
    unsigned k = 1;
    Integer pk = static_cast<unsigned long>(best_p);
    while (pk <= bound) {
        pk *= static_cast<unsigned long>(best_p);
        ++k;
    }
    Integer modulus;
    auto lifted = detail::hensel_lift(g, modular, best_p, k, modulus);
    for (std::size_t i = 0; i < roots; ++i) {
        ZPoly cand = zpoly::primitive_part(zpoly::symmetric_mod(zpoly::scale(lifted[i], g.back()), modulus));
        if (zpoly::degree(cand) != 1) continue;
        Rational r(-cand[0], cand[1]);
        if (UniPolyQ::from_zpoly(g).eval(r).is_zero()) out.push_back(r);
    }
}

}  // namespace

std::vector<Rational> rational_roots(const UniPolyQ& f) {
    if (f.is_zero()) throw MathError("rational_roots: zero polynomial");
    std::vector<Rational> out;
    for (auto& [part, mult] : squarefree_decomposition_q(f)) roots_of_squarefree(part, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_irreducible_q(const UniPolyQ& f) {
    if (f.degree() < 1) throw MathError("is_irreducible_q: constant polynomial");
    auto fac = factor_q(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

}  // namespace torsion
