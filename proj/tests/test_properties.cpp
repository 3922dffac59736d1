#include "doctest.h"

#include "torsion/curves.hpp"
#include "torsion/degree_screen.hpp"
#include "torsion/errors.hpp"
#include "torsion/factor_fp.hpp"
#include "torsion/factor_q.hpp"
#include "torsion/number_field.hpp"

#include <algorithm>
#include <random>

using namespace torsion;

namespace {

Rational rnd_rat(std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<int> n(-bound, bound), d(1, bound);
    return Rational(Integer(n(rng)), Integer(d(rng)));
}

UniPolyQ rnd_poly(std::mt19937_64& rng, int deg, int bound) {
    std::vector<Rational> c(deg + 1);
    for (auto& v : c) v = rnd_rat(rng, bound);
    if (c.back().is_zero()) c.back() = 1;
    return UniPolyQ(std::move(c));
}

UniPolyQ rnd_int_poly(std::mt19937_64& rng, int deg, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    std::vector<Rational> c(deg + 1);
    for (auto& v : c) v = d(rng);
    if (c.back().is_zero()) c.back() = 1;
    return UniPolyQ(std::move(c));
}

UniPolyQ random_irreducible(std::mt19937_64& rng, int deg) {
    for (;;) {
        UniPolyQ f = rnd_int_poly(rng, deg, 9);
        if (f.lc().sign() < 0) f = -f;
        if (is_irreducible_q(f)) return f;
    }
}

// Primitive, positive leading coefficient.
UniPolyQ normalized(const UniPolyQ& f) {
    Rational content;
    ZPoly prim;
    f.to_primitive(content, prim);
    UniPolyQ g = UniPolyQ::from_zpoly(prim);
    return g.lc().sign() < 0 ? -g : g;
}

}  // namespace

TEST_CASE("ring axioms") {
    std::mt19937_64 rng(1);
    for (int it = 0; it < 50; ++it) {
        const Rational a = rnd_rat(rng, 1000), b = rnd_rat(rng, 1000), c = rnd_rat(rng, 1000);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(rat_normalize(a.num(), a.den()) == a);
        REQUIRE(rat_normalize(a.num() * 7, a.den() * 7) == a);

        const UniPolyQ f = rnd_poly(rng, it % 7, 20), g = rnd_poly(rng, it % 5, 20), h = rnd_poly(rng, it % 3, 20);
        REQUIRE((f + g) + h == f + (g + h));
        REQUIRE(f * (g + h) == f * g + f * h);
        if (!g.is_zero()) REQUIRE(poly_exact_div(f * g, g) == f);

        const std::uint64_t p = 1000003;
        std::uniform_int_distribution<long long> cc(-1000000, 1000000);
        auto fp = [&](int deg) {
            std::vector<long long> v(deg + 1);
            for (auto& x : v) x = cc(rng);
            return UniPolyFp(p, v);
        };
        const UniPolyFp u = fp(it % 6), v = fp(it % 4 + 1), w = fp(it % 3);
        REQUIRE((u + v) + w == u + (v + w));
        REQUIRE(u * (v + w) == u * v + u * w);
        REQUIRE((u * v) / v == u);
    }
    const UniPolyQ m = UniPolyQ::parse("x^5 - 3*x + 1");
    for (int it = 0; it < 30; ++it) {
        auto el = [&] { return NumberFieldElement(m, rnd_poly(rng, 4, 30)); };
        const auto a = el(), b = el(), c = el();
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("inverses in random fields") {
    std::mt19937_64 rng(2);
    for (int f = 0; f < 10; ++f) {
        const UniPolyQ m = random_irreducible(rng, 1 + f % 7);
        for (int it = 0; it < 10; ++it) {
            NumberFieldElement a(m, rnd_poly(rng, std::max(0, m.degree() - 1), 50));
            if (a.is_zero()) a = a.one();
            CHECK((a * nf_invert(a)).is_one());
        }
    }
}

TEST_CASE("factor_q recovers random irreducible products") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> deg(1, 6), count(1, 4);
    for (int it = 0; it < 50; ++it) {
        std::vector<UniPolyQ> parts;
        UniPolyQ f = UniPolyQ::constant(1);
        const int k = count(rng);
        for (int i = 0; i < k; ++i) {
            parts.push_back(random_irreducible(rng, deg(rng)));
            f = f * parts.back();
        }
        std::vector<std::string> want, got;
        for (const auto& g : parts) want.push_back(normalized(g).to_string());
        for (const auto& [g, mult] : factor_q(f).factors)
            for (unsigned i = 0; i < mult; ++i) got.push_back(g.to_string());
        std::sort(want.begin(), want.end());
        std::sort(got.begin(), got.end());
        CHECK(want == got);
    }
}

TEST_CASE("factors mod p are irreducible and multiply back") {
    std::mt19937_64 rng(4);
    for (std::uint64_t p : {3ull, 7ull, 101ull, 65537ull}) {
        for (int it = 0; it < 10; ++it) {
            std::vector<long long> c(2 + it * 2);
            std::uniform_int_distribution<long long> cc(-50, 50);
            for (auto& x : c) x = cc(rng);
            c.back() = 1;
            UniPolyFp f(p, c);
            UniPolyFp prod = UniPolyFp::constant(p, 1);
            for (const auto& [g, m] : factor_fp(f)) {
                CHECK(is_irreducible_fp(g));
                // x^(p^d) = x mod g.
                const int d = g.degree();
                UniPolyFp h = UniPolyFp::x(p) % g;
                for (int i = 0; i < d; ++i) h = powmod(h, Integer(static_cast<unsigned long>(p)), g);
                CHECK(h == UniPolyFp::x(p) % g);
                for (unsigned i = 0; i < m; ++i) prod = prod * g;
            }
            CHECK(prod == f);
        }
    }
}

TEST_CASE("degree screen soundness") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> deg(1, 8), count(1, 4);
    int done = 0;
    while (done < 100) {
        UniPolyQ f = UniPolyQ::constant(1);
        const int k = count(rng);
        for (int i = 0; i < k; ++i) f = f * rnd_int_poly(rng, deg(rng), 12);
        UniPolyQ sqf = UniPolyQ::constant(1);
        std::vector<int> degs;
        for (const auto& [g, m] : factor_q(f).factors) {
            sqf = sqf * g;
            degs.push_back(g.degree());
        }
        if (sqf.degree() < 1) continue;
        ++done;
        const auto cert = degree_screen(sqf);
        CHECK(cert.certified_min <= *std::min_element(degs.begin(), degs.end()));
        for (int d : degs) CHECK(cert.is_feasible(d));
        CHECK(cert.primes_used.size() == cert.per_prime_degrees.size());
        CHECK(cert.feasible_degrees.front() == 0);
        CHECK(cert.feasible_degrees.back() == sqf.degree());
        for (std::size_t i = 0; i < cert.primes_used.size(); ++i) {
            const auto& pd = cert.per_prime_degrees[i];
            CHECK(std::accumulate(pd.begin(), pd.end(), 0) == sqf.degree());
        }
    }
}

TEST_CASE("degree screen options and errors") {
    const UniPolyQ f = UniPolyQ::parse("x^8 - 2*x^4 + 9");
    const auto seq = degree_screen(f);
    DegreeScreenOptions par;
    par.threads = 4;
    const auto threaded = degree_screen(f, par);
    CHECK(seq.primes_used == threaded.primes_used);
    CHECK(seq.per_prime_degrees == threaded.per_prime_degrees);
    CHECK(seq.feasible_degrees == threaded.feasible_degrees);

    DegreeScreenOptions explicit_primes;
    explicit_primes.primes = {2, 3, 101, 103};
    const auto e = degree_screen(UniPolyQ::parse("x^4 + 1"), explicit_primes);
    CHECK(std::find(e.primes_used.begin(), e.primes_used.end(), 2) == e.primes_used.end());
    CHECK(e.certified_min == 2);

    CHECK_THROWS_AS(degree_screen(UniPolyQ::parse("x^2 + 2*x + 1")), NotSquarefree);
    CHECK_THROWS_AS(degree_screen(UniPolyQ::parse("5")), MathError);
}

TEST_CASE("scalar multiples agree with repeated addition") {
    std::mt19937_64 rng(6);
    // Points (x0, y0) with a chosen curve through them.
    for (int it = 0; it < 10; ++it) {
        const Rational x0 = rnd_rat(rng, 9), y0 = rnd_rat(rng, 9);
        if (y0.is_zero()) continue;
        const Rational a = rnd_rat(rng, 9);
        const Rational b = y0 * y0 - x0 * x0 * x0 - a * x0;
        Curve e(1, 1);
        try {
            e = Curve(a, b);
        } catch (const SingularCurve&) {
            continue;
        }
        const CurvePoint P = CurvePoint::rational(x0, y0);
        REQUIRE(on_curve(e, P));
        CurvePoint acc = CurvePoint::infinity();
        for (long n = 1; n <= 8; ++n) {
            acc = point_add(e, acc, P);
            CHECK(point_mul(e, P, n) == acc);
            CHECK(on_curve(e, acc));
        }
        CHECK(point_mul(e, P, -3) == point_neg(point_mul(e, P, 3)));
    }
}
