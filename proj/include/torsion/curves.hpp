#pragma once

#include "torsion/number_field.hpp"
#include "torsion/rational.hpp"
#include "torsion/shape.hpp"

#include <optional>
#include <vector>

namespace torsion {

/// y^2 = x^3 + a*x + b over Q with nonzero discriminant.
class Curve {
public:
    /// Throws SingularCurve if 4a^3 + 27b^2 = 0.
    Curve(Rational a, Rational b);
    /// Short model y^2 = x^3 - 27*c4*x - 54*c6 of a long Weierstrass equation.
    static Curve from_long_form(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& a4,
                                const Rational& a6);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    /// -16 (4a^3 + 27b^2)
    Rational discriminant() const;
    /// x^3 + a*x + b
    UniPolyQ two_division() const;

    std::string to_string() const;
    friend bool operator==(const Curve&, const Curve&) = default;

private:
    Rational a_, b_;
};

Rational j_invariant(const Curve& e);
/// j = 0 -> (0, 1); j = 1728 -> (1, 0); otherwise a = 3j(1728 - j),
/// b = 2j(1728 - j)^2.
Curve curve_from_j(const Rational& j);
/// (a d^2, b d^3); throws ZeroTwist for d = 0.
Curve quadratic_twist(const Curve& e, const Rational& d);

/// The thirteen rational j-invariants with complex multiplication, ascending.
const std::vector<Rational>& cm_j_invariants();
bool is_cm_j(const Rational& j);

/// Short Weierstrass coefficients living in a number field.
struct FieldCurve {
    NumberFieldElement a, b;
    static FieldCurve lift(const Curve& e, const NumberFieldElement& like);
};

/// Infinity, or an affine point with both coordinates in one field.
struct CurvePoint {
    std::optional<NumberFieldElement> x, y;

    static CurvePoint infinity() { return {}; }
    static CurvePoint affine(NumberFieldElement x, NumberFieldElement y);
    /// Rational point, coordinates in Q = Q[x]/(x).
    static CurvePoint rational(const Rational& x, const Rational& y);

    bool is_infinity() const { return !x.has_value(); }
    std::string to_string() const;
    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

bool on_curve(const FieldCurve& e, const CurvePoint& p);
bool on_curve(const Curve& e, const CurvePoint& p);

CurvePoint point_neg(const CurvePoint& p);
/// Throws FieldMismatch if the coordinates of p and q lie in different fields.
CurvePoint point_add(const FieldCurve& e, const CurvePoint& p, const CurvePoint& q);
CurvePoint point_add(const Curve& e, const CurvePoint& p, const CurvePoint& q);
/// n*P by double-and-add; negative n multiplies -P.
CurvePoint point_mul(const FieldCurve& e, const CurvePoint& p, long n);
CurvePoint point_mul(const Curve& e, const CurvePoint& p, long n);

/// For x0 in K with u = x0^3 + a*x0 + b != 0, the point (u*x0, u^2) on
/// y^2 = x^3 + a*u^2*x + b*u^3 over K. That curve is the twist of E by u, so
/// it is isomorphic to E over K(sqrt u) and the point has the same order as
/// (x0, sqrt u) on E. With u = 0 it returns (x0, 0) on E itself.
std::pair<FieldCurve, CurvePoint> point_with_x(const Curve& e, const NumberFieldElement& x0);

/// Outcome of the rational twist square test on an odd-degree factor g of a
/// division polynomial, K = Q[x]/(g), x0 the class of x.
struct TwistCertificate {
    UniPolyQ x_factor;  // monic
    int x_degree = 0;
    /// Squarefree part of Norm_K(u), u = x0^3 + a*x0 + b (1 if u = 0). If a
    /// cofactor resists factoring it is kept whole.
    Integer twist_c = 1;
    /// c*u is a square in K.
    bool y_in_field = false;
    /// When y_in_field: the point (c*x0, c*v) with v^2 = c*u on E^c over K.
    std::optional<CurvePoint> point;
};

/// Decides whether some rational twist of E has a point with x-coordinate x0
/// defined over K. Throws EvenDegree for even deg g.
TwistCertificate rational_twist_square_test(const Curve& e, const UniPolyQ& x_factor);

/// Exact torsion subgroup of E(Q): reduction counts bound the order, rational
/// roots of primitive division polynomials find the points.
TorsionShape torsion_over_q(const Curve& e);

/// #E(F_p) for a prime p >= 3 of good reduction (a, b p-integral).
unsigned long count_points_mod_p(const Curve& e, unsigned long p);

}  // namespace torsion
