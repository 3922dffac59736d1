#include "torsion/curves.hpp"
#include "torsion/divpoly.hpp"
#include "torsion/errors.hpp"
#include "torsion/factor_q.hpp"
#include "torsion/poly_fp.hpp"

#include <numeric>

namespace torsion {

namespace {

std::uint64_t reduce_mod(const Rational& r, std::uint64_t p) {
    const std::uint64_t num = mpz_fdiv_ui(r.num().get_mpz_t(), p);
    const std::uint64_t den = mpz_fdiv_ui(r.den().get_mpz_t(), p);
    return fp::mulmod(num, fp::inverse(den, p), p);
}

bool divides_rational(std::uint64_t p, const Rational& r) {
    return mpz_divisible_ui_p(r.num().get_mpz_t(), p) || mpz_divisible_ui_p(r.den().get_mpz_t(), p);
}

// Mazur's list; a result outside it means the computation went wrong.
bool in_rational_torsion_list(const TorsionShape& s) {
    if (s.m == 1) return s.n <= 10 || s.n == 12;
    return s.m == 2 && (s.n == 2 || s.n == 4 || s.n == 6 || s.n == 8);
}

}  // namespace

unsigned long count_points_mod_p(const Curve& e, unsigned long p) {
    const std::uint64_t a = reduce_mod(e.a(), p), b = reduce_mod(e.b(), p);
    std::vector<signed char> chi(p, -1);
    chi[0] = 0;
    for (std::uint64_t t = 1; t < p; ++t) chi[t * t % p] = 1;
    long total = static_cast<long>(p) + 1;
    for (std::uint64_t x = 0; x < p; ++x) total += chi[(x * x % p * x + a * x + b) % p];
    return static_cast<unsigned long>(total);
}

TorsionShape torsion_over_q(const Curve& e) {
    const Rational disc = e.discriminant();
    unsigned long bound = 0;
    unsigned used = 0;
    for (unsigned long p = 5; used < 5; p += 2) {
        if (!fp::is_prime(p)) continue;
        if (divides_rational(p, disc) || mpz_divisible_ui_p(e.a().den().get_mpz_t(), p) ||
            mpz_divisible_ui_p(e.b().den().get_mpz_t(), p))
            continue;
        bound = std::gcd(bound, count_points_mod_p(e, p));
        ++used;
    }

    DivPolyCache cache(e);
    const std::size_t two_torsion = rational_roots(e.two_division()).size();
    unsigned max_order = 1;
    // Element orders of rational torsion never exceed 12.
    for (unsigned n = 2; n <= 12 && n <= bound; ++n) {
        if (bound % n) continue;
        bool found = false;
        if (n == 2) {
            found = two_torsion > 0;
        } else {
            for (const Rational& x0 : rational_roots(cache.primitive(n))) {
                const Rational u = e.two_division().eval(x0);
                Rational y;
                if (!u.is_zero() && rational_sqrt(u, y)) {
                    found = true;
                    break;
                }
            }
        }
        if (found) max_order = n;
    }
    const TorsionShape shape(two_torsion == 3 ? 2 : 1, max_order);
    if (!in_rational_torsion_list(shape))
        throw MathError("torsion computation produced " + shape.to_string() + ", outside the rational list");
    return shape;
}

}  // namespace torsion
