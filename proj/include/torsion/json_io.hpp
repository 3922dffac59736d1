#pragma once

#include "torsion/classify.hpp"
#include "torsion/curves.hpp"
#include "torsion/feasibility.hpp"

#include "json.hpp"

namespace torsion {

using Json = nlohmann::ordered_json;

/// Coefficient strings, constant term first.
Json coeffs_json(const UniPolyQ& f);
/// {"text": "...", "coeffs": [...]}
Json poly_json(const UniPolyQ& f);
/// Accepts either a human string or an array of coefficient strings.
UniPolyQ poly_from_json(const Json& j);

/// "3x^4+6x^2-1": the human form without spaces or '*'.
std::string compact_text(const UniPolyQ& f);

/// "a4=<rat>,a6=<rat>", or long form with any of a1, a2, a3, a4, a6
/// (missing keys are 0), reduced to short form. Throws ParseError.
Curve parse_curve_text(std::string_view text);

Json curve_json(const Curve& e);
Curve curve_from_json(const Json& j);

Json point_json(const CurvePoint& p);
Json report_json(const ObstructionReport& r);
Json screen_json(const DegreeScreenCertificate& c);
Json twist_json(const TwistCertificate& c);
Json factorization_json(const FactorizationQ& f);
Json feasibility_json(const FeasibilityResult& r);
Json phi_table_json(const PhiTable& t);

}  // namespace torsion
