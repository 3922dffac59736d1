#include "torsion/json_io.hpp"

#include "torsion/errors.hpp"

#include <map>

namespace torsion {

Json coeffs_json(const UniPolyQ& f) {
    Json a = Json::array();
    for (const auto& c : f.coeffs()) a.push_back(c.to_string());
    return a;
}

std::string compact_text(const UniPolyQ& f) {
    std::string out;
    for (char c : f.to_string())
        if (c != ' ' && c != '*') out += c;
    return out;
}

Json poly_json(const UniPolyQ& f) {
    return {{"text", f.to_string()}, {"compact", compact_text(f)}, {"coeffs", coeffs_json(f)}};
}

Curve parse_curve_text(std::string_view text) {
    std::map<std::string, Rational> v;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view item = text.substr(pos, comma - pos);
        const std::size_t eq = item.find('=');
        if (eq == std::string_view::npos) throw ParseError("curve items look like a4=<rational>: '" + std::string(item) + "'");
        std::string key;
        for (char c : item.substr(0, eq))
            if (c != ' ') key += c;
        if (key != "a1" && key != "a2" && key != "a3" && key != "a4" && key != "a6")
            throw ParseError("unknown curve coefficient '" + key + "'");
        if (v.count(key)) throw ParseError("duplicate curve coefficient '" + key + "'");
        v[key] = Rational::parse(item.substr(eq + 1));
        pos = comma + 1;
    }
    auto get = [&](const char* k) { return v.count(k) ? v[k] : Rational(0); };
    if (v.count("a1") || v.count("a2") || v.count("a3"))
        return Curve::from_long_form(get("a1"), get("a2"), get("a3"), get("a4"), get("a6"));
    return Curve(get("a4"), get("a6"));
}

UniPolyQ poly_from_json(const Json& j) {
    if (j.is_string()) return UniPolyQ::parse(j.get<std::string>());
    if (!j.is_array()) throw ParseError("polynomial must be a string or an array of coefficient strings");
    std::vector<Rational> c;
    for (const auto& e : j) {
        if (e.is_string()) c.push_back(Rational::parse(e.get<std::string>()));
        else if (e.is_number_integer()) c.push_back(Rational(e.get<long>()));
        else throw ParseError("coefficient must be a rational string");
    }
    return UniPolyQ(std::move(c));
}

Json curve_json(const Curve& e) { return {{"a4", e.a().to_string()}, {"a6", e.b().to_string()}}; }

Curve curve_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("a4") || !j.contains("a6")) throw ParseError("curve needs a4 and a6");
    return Curve(Rational::parse(j.at("a4").get<std::string>()), Rational::parse(j.at("a6").get<std::string>()));
}

Json point_json(const CurvePoint& p) {
    if (p.is_infinity()) return {{"infinity", true}};
    return {{"field", poly_json(p.x->modulus())}, {"x", poly_json(p.x->rep())}, {"y", poly_json(p.y->rep())}};
}

Json report_json(const ObstructionReport& r) {
    Json out = {{"shape", r.target.to_string()}, {"degree", r.degree}};
    if (r.j) out["j"] = r.j->to_string();
    out["verdict"] = to_string(r.verdict);
    Json trail = Json::array();
    for (const auto& t : r.trail) trail.push_back({{"rule", t.rule}, {"cite", t.cite}, {"fired", t.fired}});
    out["trail"] = std::move(trail);
    if (!r.notes.empty()) out["notes"] = r.notes;
    return out;
}

Json screen_json(const DegreeScreenCertificate& c) {
    return {{"degree", c.degree},
            {"primes_used", c.primes_used},
            {"per_prime_degrees", c.per_prime_degrees},
            {"feasible_degrees", c.feasible_degrees},
            {"certified_min", c.certified_min}};
}

Json twist_json(const TwistCertificate& c) {
    Json out = {{"x_factor", poly_json(c.x_factor)},
                {"x_degree", c.x_degree},
                {"twist_c", c.twist_c.get_str()},
                {"y_in_field", c.y_in_field}};
    if (c.point) out["point"] = point_json(*c.point);
    return out;
}

Json factorization_json(const FactorizationQ& f) {
    Json factors = Json::array();
    for (const auto& [g, m] : f.factors)
        factors.push_back({{"degree", g.degree()}, {"multiplicity", m}, {"poly", poly_json(g)}});
    return {{"content", f.content.to_string()}, {"degrees", f.degrees()}, {"factors", std::move(factors)}};
}

Json feasibility_json(const FeasibilityResult& r) {
    Json out = {{"j", r.j.to_string()},
                {"n", r.n},
                {"degree", r.degree},
                {"mode", to_string(r.mode)},
                {"status", to_string(r.status)},
                {"min_x_degree", r.min_x_degree},
                {"min_x_degree_is_lower_bound", r.min_x_degree_is_lower_bound}};
    if (r.mode == FeasibilityMode::FULL) out["factor_degrees"] = r.factor_degrees;
    if (r.screen) out["screen"] = screen_json(*r.screen);
    if (r.certificate) out["certificate"] = twist_json(*r.certificate);
    return out;
}

Json phi_table_json(const PhiTable& t) {
    Json members = Json::array();
    for (const auto& s : t.members) members.push_back(s.to_string());
    Json out = {{"id", to_string(t.id)}, {"cite", t.cite}, {"members", std::move(members)}};
    if (!t.annotations.empty()) {
        Json ann = Json::object();
        for (const auto& [s, text] : t.annotations) ann[s.to_string()] = text;
        out["annotations"] = std::move(ann);
    }
    return out;
}

}  // namespace torsion
