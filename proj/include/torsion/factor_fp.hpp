#pragma once

#include "torsion/poly_fp.hpp"

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace torsion {

/// Seed of the equal-degree splitting PRNG unless a caller overrides it.
inline constexpr std::uint64_t kDefaultSeed = 0x746f7273696f6eull;

struct FpFactor {
    UniPolyFp factor;  // monic, irreducible over F_p
    unsigned multiplicity;
};

/// Complete factorization of a nonzero f over F_p: lc(f) * prod factor^mult = f.
/// Factors are sorted by degree, then by coefficients, so the output does not
/// depend on the seed.
std::vector<FpFactor> factor_fp(const UniPolyFp& f, std::uint64_t seed = kDefaultSeed);

/// Rabin's test: f of degree n is irreducible iff x^(p^n) = x mod f and
/// gcd(x^(p^(n/q)) - x, f) = 1 for every prime q | n.
bool is_irreducible_fp(const UniPolyFp& f);

namespace fp {

/// Squarefree decomposition of a monic polynomial: pairs (part, multiplicity)
/// with parts pairwise coprime and squarefree.
std::vector<std::pair<Vec, unsigned>> squarefree_decomposition(const Vec& f, std::uint64_t p);

/// Distinct-degree factorization of a monic squarefree f: pairs (g_d, d)
/// where g_d is the product of all irreducible factors of degree d.
std::vector<std::pair<Vec, int>> distinct_degree(const Vec& f, std::uint64_t p);

/// Splits a monic squarefree product of irreducibles of common degree d.
std::vector<Vec> equal_degree(const Vec& f, int d, std::uint64_t p, std::mt19937_64& rng);

/// Degrees (with multiplicity, ascending) of the irreducible factors of a
/// monic squarefree f.
std::vector<int> factor_degrees(const Vec& f, std::uint64_t p);

/// Monic irreducible factors of a monic squarefree f, sorted.
std::vector<Vec> factor_squarefree(const Vec& f, std::uint64_t p, std::mt19937_64& rng);

bool less(const Vec& a, const Vec& b);

}  // namespace fp
}  // namespace torsion
