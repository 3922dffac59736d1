#pragma once

#include "torsion/poly_q.hpp"

#include <cstdint>
#include <vector>

namespace torsion {

struct DegreeScreenOptions {
    /// Number of good primes to intersect.
    unsigned prime_budget = 5;
    /// Worker threads for the per-prime factorizations; 0 or 1 is sequential.
    unsigned threads = 1;
    /// Explicit primes to try in order instead of the smallest good primes.
    /// Bad primes in the list are skipped.
    std::vector<std::uint64_t> primes;
};

/// Lower bound on the degrees of rational factors from factorization
/// patterns modulo several good primes. Every rational factor degree, and
/// every sum of them, lies in feasible_degrees.
struct DegreeScreenCertificate {
    int degree = 0;
    std::vector<std::uint64_t> primes_used;
    /// Ascending F_p factor degrees, one list per used prime.
    std::vector<std::vector<int>> per_prime_degrees;
    /// Ascending; always contains 0 and deg f.
    std::vector<int> feasible_degrees;
    int certified_min = 0;

    bool is_feasible(int d) const;
};

/// Throws NotSquarefree if f has a repeated factor over Q and MathError if f
/// is constant.
DegreeScreenCertificate degree_screen(const UniPolyQ& f, const DegreeScreenOptions& opts = {});

}  // namespace torsion
