#pragma once

#include "torsion/curves.hpp"
#include "torsion/degree_screen.hpp"
#include "torsion/factor_q.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torsion {

enum class FeasibilityMode { SCREEN, FULL };
enum class FeasibilityStatus { INFEASIBLE, FEASIBLE_CERTIFIED, UNDETERMINED };

std::string to_string(FeasibilityMode m);
std::string to_string(FeasibilityStatus s);
/// "screen" or "full"; throws ParseError.
FeasibilityMode parse_mode(const std::string& text);

struct FeasibilityOptions {
    DegreeScreenOptions screen;
    FactorOptions factor;
};

/// Can a curve over a field of degree d with the given rational j have a
/// point of exact order n?
struct FeasibilityResult {
    Rational j;
    unsigned n = 0;
    unsigned degree = 0;
    FeasibilityMode mode = FeasibilityMode::FULL;
    FeasibilityStatus status = FeasibilityStatus::UNDETERMINED;
    /// Smallest degree of an irreducible factor of f_n: exact in FULL mode,
    /// a certified lower bound in SCREEN mode.
    int min_x_degree = 0;
    bool min_x_degree_is_lower_bound = false;
    /// FULL mode: degrees of the irreducible factors of f_n, ascending.
    std::vector<int> factor_degrees;
    std::optional<TwistCertificate> certificate;
    std::optional<DegreeScreenCertificate> screen;
};

/// x(P) generates a field of degree e = deg of its factor, and e | d when P
/// is defined over a degree-d field, so the test is: no (feasible) factor
/// degree divides d => INFEASIBLE. FEASIBLE_CERTIFIED needs an odd e | d
/// whose twist square test succeeds. Throws CMInput for CM j and MathError
/// for n < 2 or d = 0.
FeasibilityResult point_order_feasible(const Rational& j, unsigned n, unsigned d, FeasibilityMode mode,
                                       const FeasibilityOptions& opts = {});

}  // namespace torsion
