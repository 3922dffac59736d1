#include "torsion/feasibility.hpp"

#include "torsion/divpoly.hpp"
#include "torsion/errors.hpp"

#include <algorithm>

namespace torsion {

std::string to_string(FeasibilityMode m) { return m == FeasibilityMode::SCREEN ? "screen" : "full"; }

std::string to_string(FeasibilityStatus s) {
    switch (s) {
        case FeasibilityStatus::INFEASIBLE: return "INFEASIBLE";
        case FeasibilityStatus::FEASIBLE_CERTIFIED: return "FEASIBLE_CERTIFIED";
        case FeasibilityStatus::UNDETERMINED: return "UNDETERMINED";
    }
    return "?";
}

FeasibilityMode parse_mode(const std::string& text) {
    if (text == "screen") return FeasibilityMode::SCREEN;
    if (text == "full") return FeasibilityMode::FULL;
    throw ParseError("mode must be 'screen' or 'full', got '" + text + "'");
}

FeasibilityResult point_order_feasible(const Rational& j, unsigned n, unsigned d, FeasibilityMode mode,
                                       const FeasibilityOptions& opts) {
    if (is_cm_j(j)) throw CMInput();
    if (n < 2) throw MathError("point order must be at least 2");
    if (d == 0) throw MathError("field degree must be positive");

    FeasibilityResult res;
    res.j = j;
    res.n = n;
    res.degree = d;
    res.mode = mode;
    const Curve e0 = curve_from_j(j);
    const UniPolyQ f = primitive_divpoly(e0, n);

    if (mode == FeasibilityMode::SCREEN) {
        res.screen = degree_screen(f, opts.screen);
        res.min_x_degree = res.screen->certified_min;
        res.min_x_degree_is_lower_bound = true;
        bool some_divides = false;
        for (int e : res.screen->feasible_degrees)
            if (e >= 1 && d % static_cast<unsigned>(e) == 0) some_divides = true;
        res.status = some_divides ? FeasibilityStatus::UNDETERMINED : FeasibilityStatus::INFEASIBLE;
        return res;
    }

    const FactorizationQ fq = factor_q(f, opts.factor);
    res.factor_degrees = fq.degrees();
    std::sort(res.factor_degrees.begin(), res.factor_degrees.end());
    res.min_x_degree = res.factor_degrees.front();

    bool some_divides = false;
    for (const auto& [g, mult] : fq.factors) {
        const unsigned e = static_cast<unsigned>(g.degree());
        if (d % e != 0) continue;
        some_divides = true;
        if (e % 2 == 0) continue;
        TwistCertificate cert = rational_twist_square_test(e0, g);
        if (cert.y_in_field) {
            res.status = FeasibilityStatus::FEASIBLE_CERTIFIED;
            res.certificate = std::move(cert);
            return res;
        }
        if (!res.certificate) res.certificate = std::move(cert);
    }
    res.status = some_divides ? FeasibilityStatus::UNDETERMINED : FeasibilityStatus::INFEASIBLE;
    return res;
}

}  // namespace torsion
