#pragma once

#include "torsion/factor_fp.hpp"
#include "torsion/poly_q.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace torsion {

struct FactorOptions {
    std::uint64_t seed = kDefaultSeed;
    /// Good primes examined when choosing the Zassenhaus prime; their degree
    /// patterns also prune recombination.
    unsigned prime_trials = 8;
};

/// content * prod factor^multiplicity == input. Factors are primitive integer
/// polynomials with positive leading coefficient, irreducible over Q, sorted
/// by degree then coefficients.
struct FactorizationQ {
    Rational content;
    std::vector<std::pair<UniPolyQ, unsigned>> factors;

    UniPolyQ expand() const;
    /// Degrees of the factors, each repeated by its multiplicity.
    std::vector<int> degrees() const;
};

FactorizationQ factor_q(const UniPolyQ& f, const FactorOptions& opts = {});

/// True iff factor_q(f) is a single factor of multiplicity one. f nonconstant.
bool is_irreducible_q(const UniPolyQ& f);

/// Distinct rational roots of a nonzero f, ascending. Lifts the linear
/// factors modulo one good prime; no recombination is needed.
std::vector<Rational> rational_roots(const UniPolyQ& f);

/// Squarefree decomposition over Q of a nonzero polynomial: pairs
/// (primitive part, multiplicity).
std::vector<std::pair<ZPoly, unsigned>> squarefree_decomposition_q(const UniPolyQ& f);

/// True iff f (nonconstant) has no repeated factor over Q. Tries a cheap
/// modular certificate first and falls back to gcd(f, f').
bool is_squarefree_q(const ZPoly& f);

namespace detail {

/// Irreducible factors of a primitive squarefree f with positive leading
/// coefficient (Zassenhaus: modular factorization, Hensel lifting,
/// subset recombination with degree-pattern pruning).
std::vector<ZPoly> factor_squarefree_z(const ZPoly& f, const FactorOptions& opts);

/// Lifts f = lc(f) * prod g_i (mod p), g_i monic and pairwise coprime mod p,
/// to monic h_i with f = lc(f) * prod h_i (mod modulus), modulus >= p^k.
std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<fp::Vec>& factors, std::uint64_t p,
                               unsigned k, Integer& modulus);

/// Mignotte-style bound: every coefficient of lc(f) * g / lc(g), for g | f of
/// degree <= deg(f)/2, has absolute value at most the returned value.
Integer factor_coefficient_bound(const ZPoly& f);

/// p is a good prime for f when p does not divide lc(f) and f mod p is
/// squarefree (equivalently p does not divide lc(f) * disc(f)). On success
/// `fp_monic` receives the monic image of f mod p.
bool good_prime(const ZPoly& f, std::uint64_t p, fp::Vec& fp_monic);

/// Indicator over 0..n of the sums of sub-multisets of `degs`.
std::vector<char> subset_sums(const std::vector<int>& degs, int n);

}  // namespace detail
}  // namespace torsion
