#include "torsion/poly_z.hpp"

#include "torsion/poly_fp.hpp"

#include <algorithm>

namespace torsion::zpoly {

void trim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

ZPoly add(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
    }
    trim(r);
    return r;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    trim(r);
    return r;
}

std::size_t max_bits(const ZPoly& f) {
    std::size_t m = 0;
    for (const auto& c : f)
        if (c != 0) m = std::max(m, mpz_sizeinbase(c.get_mpz_t(), 2));
    return m;
}

namespace {

ZPoly mul_schoolbook(const ZPoly& a, const ZPoly& b) {
    ZPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    return r;
}

// Kronecker substitution: evaluate both operands at 2^k, multiply the two
// big integers with GMP, and read the product's coefficients back off as
// signed k-bit digits.
Integer pack(const ZPoly& f, std::size_t k) {
    Integer v = 0;
    for (std::size_t i = f.size(); i-- > 0;) {
        mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), k);
        v += f[i];
    }
    return v;
}

ZPoly unpack(Integer v, std::size_t k, std::size_t len) {
    ZPoly r(len);
    Integer digit, half, full;
    mpz_setbit(half.get_mpz_t(), k - 1);
    mpz_setbit(full.get_mpz_t(), k);
    for (std::size_t i = 0; i < len; ++i) {
        mpz_fdiv_r_2exp(digit.get_mpz_t(), v.get_mpz_t(), k);
        if (digit >= half) digit -= full;
        r[i] = digit;
        v -= digit;
        mpz_fdiv_q_2exp(v.get_mpz_t(), v.get_mpz_t(), k);
    }
    return r;
}

}  // namespace

ZPoly mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r;
    if (std::min(a.size(), b.size()) < 12) {
        r = mul_schoolbook(a, b);
    } else {
        std::size_t lenbits = 1;
        while ((std::size_t{1} << lenbits) < std::min(a.size(), b.size())) ++lenbits;
        const std::size_t k = max_bits(a) + max_bits(b) + lenbits + 2;
        Integer prod = pack(a, k) * pack(b, k);
        r = unpack(std::move(prod), k, a.size() + b.size() - 1);
    }
    trim(r);
    return r;
}

ZPoly scale(const ZPoly& a, const Integer& c) {
    if (c == 0) return {};
    ZPoly r(a);
    for (auto& x : r) x *= c;
    return r;
}

ZPoly derivative(const ZPoly& f) {
    if (f.size() <= 1) return {};
    ZPoly r(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = f[i] * static_cast<unsigned long>(i);
    trim(r);
    return r;
}

bool divides(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
    quotient.clear();
    if (b.empty()) return false;
    if (a.empty()) return true;
    if (a.size() < b.size()) return false;
    // Cheap rejections before the full division.
    if (!mpz_divisible_p(a.back().get_mpz_t(), b.back().get_mpz_t())) return false;
    if (b[0] != 0 && !mpz_divisible_p(a[0].get_mpz_t(), b[0].get_mpz_t())) return false;
    ZPoly r(a);
    const std::size_t db = b.size() - 1;
    ZPoly q(a.size() - db);
    Integer c;
    for (std::size_t k = a.size(); k-- > db;) {
        if (r[k] == 0) continue;
        if (!mpz_divisible_p(r[k].get_mpz_t(), b.back().get_mpz_t())) return false;
        mpz_divexact(c.get_mpz_t(), r[k].get_mpz_t(), b.back().get_mpz_t());
        for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[k - db + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
        q[k - db] = c;
    }
    for (std::size_t i = 0; i < db; ++i)
        if (r[i] != 0) return false;
    trim(q);
    quotient = std::move(q);
    return true;
}

Integer content(const ZPoly& f) {
    Integer g = 0;
    for (const auto& c : f) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly primitive_part(const ZPoly& f) {
    if (f.empty()) return {};
    Integer g = content(f);
    if (f.back() < 0) g = -g;
    ZPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) mpz_divexact(r[i].get_mpz_t(), f[i].get_mpz_t(), g.get_mpz_t());
    return r;
}

Integer norm2_ceil(const ZPoly& f) {
    Integer s = 0;
    for (const auto& c : f) s += c * c;
    Integer r;
    mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
    if (r * r < s) ++r;
    return r;
}

ZPoly mod(const ZPoly& f, const Integer& m) {
    ZPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) mpz_fdiv_r(r[i].get_mpz_t(), f[i].get_mpz_t(), m.get_mpz_t());
    trim(r);
    return r;
}

ZPoly symmetric_mod(const ZPoly& f, const Integer& m) {
    Integer half = m / 2;
    ZPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        mpz_fdiv_r(r[i].get_mpz_t(), f[i].get_mpz_t(), m.get_mpz_t());
        if (r[i] > half) r[i] -= m;
    }
    trim(r);
    return r;
}

std::vector<std::uint64_t> reduce(const ZPoly& f, std::uint64_t p) {
    std::vector<std::uint64_t> r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = mpz_fdiv_ui(f[i].get_mpz_t(), p);
    fp::trim(r);
    return r;
}

ZPoly gcd(const ZPoly& a0, const ZPoly& b0) {
    if (a0.empty()) return primitive_part(b0);
    if (b0.empty()) return primitive_part(a0);
    ZPoly a = primitive_part(a0), b = primitive_part(b0);
    if (a.size() == 1 || b.size() == 1) return {1};
    Integer lcg = gcd(a.back(), b.back());

    int best = std::min(degree(a), degree(b)) + 1;
    ZPoly acc;
    Integer modulus = 1;
    ZPoly last;
    std::uint64_t p = (1ull << 31) - 1;
    for (;; p -= 2) {
        while (!fp::is_prime(p)) p -= 2;
        if (mpz_fdiv_ui(lcg.get_mpz_t(), p) == 0) continue;
        auto ap = reduce(a, p), bp = reduce(b, p);
        if (static_cast<int>(ap.size()) != static_cast<int>(a.size()) ||
            static_cast<int>(bp.size()) != static_cast<int>(b.size()))
            continue;
        auto gp = fp::gcd(ap, bp, p);
        const int d = static_cast<int>(gp.size()) - 1;
        if (d == 0) return {1};
        if (d > best) continue;
        gp = fp::scale(gp, mpz_fdiv_ui(lcg.get_mpz_t(), p), p);
        if (d < best) {
            best = d;
            acc.assign(gp.size(), 0);
            for (std::size_t i = 0; i < gp.size(); ++i) acc[i] = gp[i];
            modulus = p;
            last.clear();
        } else {
            // CRT: acc mod modulus, gp mod p.
            Integer pz = p, inv;
            mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
            for (std::size_t i = 0; i < acc.size(); ++i) {
                Integer ai = mpz_fdiv_ui(acc[i].get_mpz_t(), p);
                Integer diff = Integer(gp[i]) - ai;
                Integer t = (diff * inv) % pz;
                if (t < 0) t += pz;
                acc[i] += modulus * t;
            }
            modulus *= p;
        }
        ZPoly cand = primitive_part(symmetric_mod(acc, modulus));
        if (cand == last) {
            ZPoly q;
            if (divides(a, cand, q) && divides(b, cand, q)) return cand;
        }
        last = std::move(cand);
    }
}

}  // namespace torsion::zpoly
