#include "torsion/classify.hpp"
#include "torsion/curves.hpp"
#include "torsion/degree_screen.hpp"
#include "torsion/divpoly.hpp"
#include "torsion/errors.hpp"
#include "torsion/factor_q.hpp"
#include "torsion/feasibility.hpp"
#include "torsion/json_io.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <sstream>

using namespace torsion;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMath = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Globals {
    bool json = false;
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = 1;
};

template <class T>
std::string join(const T& v, const char* sep = " ") {
    std::ostringstream os;
    bool first = true;
    for (const auto& x : v) {
        if (!first) os << sep;
        os << x;
        first = false;
    }
    return os.str();
}

std::string shapes_text(const std::vector<TorsionShape>& v) {
    std::vector<std::string> s;
    for (const auto& t : v) s.push_back(t.to_string());
    return join(s);
}

std::string fired_rules(const ObstructionReport& r) {
    std::vector<std::string> ids;
    for (const auto& t : r.trail)
        if (t.fired) ids.push_back(t.rule + " (" + t.cite + ")");
    return join(ids, ", ");
}

void emit(const Globals& g, const Json& payload, const std::string& text) {
    if (g.json) std::cout << payload.dump(2) << '\n';
    else std::cout << text;
}

int cmd_classify(const Globals& g, unsigned p) {
    if (!is_prime(p)) throw UsageError("degree must be prime, got " + std::to_string(p));
    const auto reports = classify(p);
    const auto orders = allowed_cyclic_orders(p);
    const auto pairs = candidate_pairs(p);
    const auto excluded = excluded_shapes(p);

    // Reports listed in full: cyclic n <= 50, surviving pairs, and excluded
    // shapes except C_m x C_n (m >= 3, m < n), which contain an excluded C_m x C_m.
    constexpr unsigned kListedCyclic = 50;
    Json cyclic = Json::array(), pair_reports = Json::array(), ex = Json::array();
    for (const auto& r : reports) {
        if (r.target.is_cyclic() && r.target.n <= kListedCyclic) cyclic.push_back(report_json(r));
        else if (!r.target.is_cyclic() && r.verdict != Verdict::EXCLUDED) pair_reports.push_back(report_json(r));
    }
    std::size_t more = 0;
    for (const auto& r : excluded) {
        if (r.target.m >= 3 && r.target.m != r.target.n) ++more;
        else ex.push_back(report_json(r));
    }
    Json pair_names = Json::array();
    for (const auto& s : pairs) pair_names.push_back(s.to_string());
    const Json payload = {{"degree", p},
                          {"allowed_cyclic_orders", orders},
                          {"candidate_pairs", pair_names},
                          {"cyclic_reports", cyclic},
                          {"pair_reports", pair_reports},
                          {"excluded_shapes", ex},
                          {"excluded_shapes_omitted", more}};

    std::ostringstream os;
    os << "degree " << p << '\n';
    os << "allowed cyclic orders: " << join(orders) << '\n';
    os << "candidate pairs: " << shapes_text(pairs) << '\n';
    os << "excluded cyclic orders up to " << kListedCyclic << ":\n";
    for (const auto& r : reports)
        if (r.target.is_cyclic() && r.target.n <= kListedCyclic && r.verdict == Verdict::EXCLUDED)
            os << "  " << r.target.to_string() << ": " << fired_rules(r) << '\n';
    os << "excluded shapes:\n";
    for (const auto& r : excluded) {
        if (r.target.m >= 3 && r.target.m != r.target.n) continue;
        os << "  " << r.target.to_string() << ": " << fired_rules(r) << '\n';
    }
    if (more) os << "  (" << more << " more C_m x C_n with m >= 3 containing an excluded C_m x C_m)\n";
    emit(g, payload, os.str());
    return kExitOk;
}

int cmd_feasible(const Globals& g, const std::string& j_text, unsigned n, unsigned d, const std::string& mode_text) {
    const Rational j = Rational::parse(j_text);
    if (n < 2) throw UsageError("--n must be at least 2");
    if (d < 1) throw UsageError("--degree must be positive");
    FeasibilityMode mode;
    if (mode_text.empty()) mode = primitive_degree(n) > 100 ? FeasibilityMode::SCREEN : FeasibilityMode::FULL;
    else mode = parse_mode(mode_text);
    FeasibilityOptions opts;
    opts.factor.seed = g.seed;
    opts.screen.threads = g.threads;
    const auto r = point_order_feasible(j, n, d, mode, opts);

    std::ostringstream os;
    os << "status: " << to_string(r.status) << '\n';
    os << "mode: " << to_string(r.mode) << '\n';
    os << "min_x_degree: " << (r.min_x_degree_is_lower_bound ? ">= " : "") << r.min_x_degree << '\n';
    if (r.mode == FeasibilityMode::FULL) os << "factor degrees: " << join(r.factor_degrees) << '\n';
    if (r.screen) {
        os << "screen primes: " << join(r.screen->primes_used) << '\n';
        os << "feasible degrees: " << join(r.screen->feasible_degrees) << '\n';
    }
    if (r.certificate) {
        os << "twist certificate: degree " << r.certificate->x_degree << ", c = " << r.certificate->twist_c
           << ", y in field: " << (r.certificate->y_in_field ? "yes" : "no") << '\n';
        if (r.certificate->point) os << "point: " << r.certificate->point->to_string() << '\n';
    }
    emit(g, feasibility_json(r), os.str());
    return kExitOk;
}

int cmd_divpoly(const Globals& g, const std::string& curve_text, unsigned n, bool primitive) {
    const Curve e = parse_curve_text(curve_text);
    if (primitive && n < 2) throw UsageError("--primitive needs --n >= 2");
    const UniPolyQ f = primitive ? primitive_divpoly(e, n) : psi(e, n);
    const Json payload = {{"curve", curve_json(e)},
                          {"n", n},
                          {"primitive", primitive},
                          {"degree", f.degree()},
                          {"poly", poly_json(f)}};
    emit(g, payload, compact_text(f) + "\n" + coeffs_json(f).dump() + "\n");
    return kExitOk;
}

int cmd_factor(const Globals& g, const std::string& poly_text) {
    const UniPolyQ f = UniPolyQ::parse(poly_text);
    if (f.is_zero()) throw MathError("cannot factor the zero polynomial");
    FactorOptions opts;
    opts.seed = g.seed;
    const auto fq = factor_q(f, opts);
    std::ostringstream os;
    os << "content: " << fq.content << '\n';
    os << "degrees: [" << join(fq.degrees(), ", ") << "]\n";
    for (const auto& [h, m] : fq.factors) os << "  (" << h.to_string() << ")" << (m > 1 ? "^" + std::to_string(m) : "") << '\n';
    emit(g, factorization_json(fq), os.str());
    return kExitOk;
}

int cmd_screen(const Globals& g, const std::string& poly_text, unsigned budget) {
    const UniPolyQ f = UniPolyQ::parse(poly_text);
    DegreeScreenOptions opts;
    opts.prime_budget = budget;
    opts.threads = g.threads;
    const auto c = degree_screen(f, opts);
    std::ostringstream os;
    os << "certified_min: " << c.certified_min << '\n';
    for (std::size_t i = 0; i < c.primes_used.size(); ++i)
        os << "  p = " << c.primes_used[i] << ": " << join(c.per_prime_degrees[i]) << '\n';
    os << "feasible degrees: " << join(c.feasible_degrees) << '\n';
    emit(g, screen_json(c), os.str());
    return kExitOk;
}

int cmd_torsion(const Globals& g, const std::string& curve_text) {
    const Curve e = parse_curve_text(curve_text);
    const TorsionShape t = torsion_over_q(e);
    const Json payload = {{"curve", curve_json(e)}, {"torsion", t.to_string()}, {"order", t.order()}};
    emit(g, payload, t.to_string() + "\n");
    return kExitOk;
}

int cmd_twist(const Globals& g, const std::string& curve_text, const std::string& factor_text) {
    const Curve e = parse_curve_text(curve_text);
    const auto c = rational_twist_square_test(e, UniPolyQ::parse(factor_text));
    std::ostringstream os;
    os << "twist c: " << c.twist_c << '\n';
    os << "y in field: " << (c.y_in_field ? "yes" : "no") << '\n';
    if (c.point) os << "point on twist: " << c.point->to_string() << '\n';
    Json payload = twist_json(c);
    payload["twisted_curve"] = curve_json(quadratic_twist(e, Rational(c.twist_c)));
    emit(g, payload, os.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Torsion of elliptic curves with rational j over prime-degree fields"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_flag("--json", g.json, "Print a JSON document instead of text");
    app.add_option("--seed", g.seed, "Factorization PRNG seed");
    app.add_option("--threads", g.threads, "Worker threads for modular screens")
        ->envname("TORSION_ATLAS_THREADS")
        ->check(CLI::Range(1u, 256u));

    unsigned degree = 0, n = 0, budget = 5;
    std::string j_text, mode_text, curve_text, poly_text;
    bool primitive = false;

    auto* classify_cmd = app.add_subcommand("classify", "Allowed torsion over fields of prime degree");
    classify_cmd->add_option("--degree", degree, "Prime degree p")->required();

    auto* feasible_cmd = app.add_subcommand("feasible", "Can a point of order n exist over degree d");
    feasible_cmd->add_option("--j", j_text, "Rational j-invariant")->required();
    feasible_cmd->add_option("--n", n, "Point order")->required();
    feasible_cmd->add_option("--degree", degree, "Field degree")->required();
    feasible_cmd->add_option("--mode", mode_text, "screen or full (default: screen when deg f_n > 100)")
        ->check(CLI::IsMember({"screen", "full"}));

    auto* divpoly_cmd = app.add_subcommand("divpoly", "Division polynomial psi_n or primitive f_n");
    divpoly_cmd->add_option("--curve", curve_text, "a4=<rat>,a6=<rat> or long form a1..a6")->required();
    divpoly_cmd->add_option("--n", n, "Index")->required();
    divpoly_cmd->add_flag("--primitive", primitive, "Primitive part f_n");

    auto* factor_cmd = app.add_subcommand("factor", "Factor a polynomial over Q");
    factor_cmd->add_option("--poly", poly_text, "Polynomial, e.g. \"x^3 - 2*x + 1\"")->required();

    auto* screen_cmd = app.add_subcommand("screen", "Degree screen from factorizations mod p");
    screen_cmd->add_option("--poly", poly_text, "Squarefree polynomial")->required();
    screen_cmd->add_option("--primes", budget, "Number of good primes")->check(CLI::Range(1u, 64u));

    auto* torsion_cmd = app.add_subcommand("torsion", "Torsion subgroup over Q");
    torsion_cmd->add_option("--curve", curve_text, "a4=<rat>,a6=<rat> or long form a1..a6")->required();

    std::string factor_text;
    auto* twist_cmd = app.add_subcommand("twist", "Rational twist square test for an odd-degree x-factor");
    twist_cmd->add_option("--curve", curve_text, "a4=<rat>,a6=<rat> or long form a1..a6")->required();
    twist_cmd->add_option("--factor", factor_text, "Irreducible factor of a division polynomial")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*classify_cmd) return cmd_classify(g, degree);
        if (*feasible_cmd) return cmd_feasible(g, j_text, n, degree, mode_text);
        if (*divpoly_cmd) return cmd_divpoly(g, curve_text, n, primitive);
        if (*factor_cmd) return cmd_factor(g, poly_text);
        if (*screen_cmd) return cmd_screen(g, poly_text, budget);
        if (*torsion_cmd) return cmd_torsion(g, curve_text);
        if (*twist_cmd) return cmd_twist(g, curve_text, factor_text);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const MathError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMath;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitMath;
    }
    return kExitUsage;
}
