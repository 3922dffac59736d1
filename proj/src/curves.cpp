#include "torsion/curves.hpp"

#include "torsion/errors.hpp"
#include "torsion/factor_q.hpp"

#include <algorithm>

namespace torsion {

Curve::Curve(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
    if ((4 * a_ * a_ * a_ + 27 * b_ * b_).is_zero()) throw SingularCurve();
}

Curve Curve::from_long_form(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& a4,
                            const Rational& a6) {
    const Rational b2 = a1 * a1 + 4 * a2;
    const Rational b4 = 2 * a4 + a1 * a3;
    const Rational b6 = a3 * a3 + 4 * a6;
    const Rational c4 = b2 * b2 - 24 * b4;
    const Rational c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6;
    return Curve(-27 * c4, -54 * c6);
}

Rational Curve::discriminant() const { return -16 * (4 * a_ * a_ * a_ + 27 * b_ * b_); }

UniPolyQ Curve::two_division() const { return UniPolyQ{b_, a_, Rational(0), Rational(1)}; }

std::string Curve::to_string() const { return "a4=" + a_.to_string() + ",a6=" + b_.to_string(); }

Rational j_invariant(const Curve& e) {
    const Rational a3 = 4 * e.a() * e.a() * e.a();
    return 1728 * a3 / (a3 + 27 * e.b() * e.b());
}

Curve curve_from_j(const Rational& j) {
    if (j.is_zero()) return Curve(0, 1);
    if (j == Rational(1728)) return Curve(1, 0);
    const Rational k = 1728 - j;
    return Curve(3 * j * k, 2 * j * k * k);
}

Curve quadratic_twist(const Curve& e, const Rational& d) {
    if (d.is_zero()) throw ZeroTwist();
    return Curve(e.a() * d * d, e.b() * d * d * d);
}

const std::vector<Rational>& cm_j_invariants() {
    static const std::vector<Rational> list = [] {
        std::vector<Rational> v;
        for (const char* s : {"-262537412640768000", "-147197952000", "-884736000", "-12288000", "-884736",
                              "-32768", "-3375", "0", "1728", "8000", "54000", "287496", "16581375"})
            v.push_back(Rational::parse(s));
        return v;
    }();
    return list;
}

bool is_cm_j(const Rational& j) {
    const auto& v = cm_j_invariants();
    return std::binary_search(v.begin(), v.end(), j);
}

FieldCurve FieldCurve::lift(const Curve& e, const NumberFieldElement& like) {
    return {like.lift(e.a()), like.lift(e.b())};
}

CurvePoint CurvePoint::affine(NumberFieldElement x, NumberFieldElement y) {
    if (!x.same_field(y)) throw FieldMismatch();
    CurvePoint p;
    p.x = std::move(x);
    p.y = std::move(y);
    return p;
}

CurvePoint CurvePoint::rational(const Rational& x, const Rational& y) {
    return affine(NumberFieldElement::rational(x), NumberFieldElement::rational(y));
}

std::string CurvePoint::to_string() const {
    if (is_infinity()) return "O";
    return "(" + x->to_string() + ", " + y->to_string() + ")";
}

namespace {

FieldCurve lift_for(const Curve& e, const CurvePoint& p, const CurvePoint& q) {
    const CurvePoint& ref = p.is_infinity() ? q : p;
    if (ref.is_infinity()) return {NumberFieldElement::rational(e.a()), NumberFieldElement::rational(e.b())};
    return FieldCurve::lift(e, *ref.x);
}

}  // namespace

bool on_curve(const FieldCurve& e, const CurvePoint& p) {
    if (p.is_infinity()) return true;
    const auto& x = *p.x;
    return *p.y * *p.y == x * x * x + e.a * x + e.b;
}

bool on_curve(const Curve& e, const CurvePoint& p) { return on_curve(lift_for(e, p, p), p); }

CurvePoint point_neg(const CurvePoint& p) {
    if (p.is_infinity()) return p;
    return CurvePoint::affine(*p.x, -*p.y);
}

CurvePoint point_add(const FieldCurve& e, const CurvePoint& p, const CurvePoint& q) {
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    if (!p.x->same_field(*q.x) || !p.x->same_field(e.a)) throw FieldMismatch();
    const auto& x1 = *p.x;
    const auto& y1 = *p.y;
    const auto& x2 = *q.x;
    const auto& y2 = *q.y;
    NumberFieldElement lambda = x1.zero();
    if (x1 == x2) {
        if ((y1 + y2).is_zero()) return CurvePoint::infinity();
        lambda = (x1 * x1 * Rational(3) + e.a) / (y1 * Rational(2));
    } else {
        lambda = (y2 - y1) / (x2 - x1);
    }
    NumberFieldElement x3 = lambda * lambda - x1 - x2;
    NumberFieldElement y3 = lambda * (x1 - x3) - y1;
    return CurvePoint::affine(std::move(x3), std::move(y3));
}

CurvePoint point_add(const Curve& e, const CurvePoint& p, const CurvePoint& q) {
    if (!p.is_infinity() && !q.is_infinity() && !p.x->same_field(*q.x)) throw FieldMismatch();
    return point_add(lift_for(e, p, q), p, q);
}

CurvePoint point_mul(const FieldCurve& e, const CurvePoint& p, long n) {
    CurvePoint base = n < 0 ? point_neg(p) : p;
    unsigned long k = n < 0 ? -static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
    CurvePoint acc = CurvePoint::infinity();
    while (k) {
        if (k & 1) acc = point_add(e, acc, base);
        k >>= 1;
        if (k) base = point_add(e, base, base);
    }
    return acc;
}

CurvePoint point_mul(const Curve& e, const CurvePoint& p, long n) { return point_mul(lift_for(e, p, p), p, n); }

std::pair<FieldCurve, CurvePoint> point_with_x(const Curve& e, const NumberFieldElement& x0) {
    const NumberFieldElement u = x0 * x0 * x0 + x0.lift(e.a()) * x0 + x0.lift(e.b());
    if (u.is_zero()) return {FieldCurve::lift(e, x0), CurvePoint::affine(x0, x0.zero())};
    const NumberFieldElement u2 = u * u;
    FieldCurve twisted{x0.lift(e.a()) * u2, x0.lift(e.b()) * u2 * u};
    return {twisted, CurvePoint::affine(u * x0, u2)};
}

TwistCertificate rational_twist_square_test(const Curve& e, const UniPolyQ& x_factor) {
    if (x_factor.degree() < 1) throw MathError("twist square test: constant factor");
    if (x_factor.degree() % 2 == 0) throw EvenDegree();
    TwistCertificate cert;
    cert.x_factor = x_factor.monic();
    cert.x_degree = cert.x_factor.degree();
    const NumberFieldElement x0 = NumberFieldElement::generator(cert.x_factor);
    const NumberFieldElement u = poly_eval_in_field(e.two_division(), x0);
    if (u.is_zero()) {
        cert.twist_c = 1;
        cert.y_in_field = true;
        cert.point = CurvePoint::affine(x0, x0.zero());
        return cert;
    }
    cert.twist_c = squarefree_part(u.norm());
    const Rational c(cert.twist_c);
    const NumberFieldElement w = u * c;

    // w generates a subfield F = Q[s]/(m). A square root of w in K has the
    // same degree as w (deg K is odd), so it lies in F and its minimal
    // polynomial is a factor of m(t^2) of degree deg m.
    const UniPolyQ m = w.minimal_polynomial();
    const int e_deg = m.degree();
    const UniPolyQ mt2 = poly_compose(m, UniPolyQ::monomial(Rational(1), 2));
    const auto fac = factor_q(mt2);
    for (const auto& [h, mult] : fac.factors) {
        if (h.degree() != e_deg) continue;
        // h(t) mod (t^2 - s) = A(s) + t*B(s) in F[t].
        std::vector<Rational> ca, cb;
        for (int i = 0; i <= h.degree(); ++i) (i % 2 ? cb : ca).push_back(h[i]);
        const NumberFieldElement A(m, UniPolyQ(ca)), B(m, UniPolyQ(cb));
        if (B.is_zero()) continue;
        const NumberFieldElement v = -A / B;
        if (!(v * v == NumberFieldElement::generator(m))) continue;
        const NumberFieldElement vk = poly_eval_in_field(v.rep(), w);
        if (!(vk * vk == w)) continue;
        cert.y_in_field = true;
        cert.point = CurvePoint::affine(x0 * c, vk * c);
        return cert;
    }
    return cert;
}

}  // namespace torsion
