#include "torsion/number_field.hpp"

#include "torsion/errors.hpp"

#include <optional>

namespace torsion {

NumberFieldElement::NumberFieldElement(UniPolyQ modulus, const UniPolyQ& rep)
    : modulus_(std::move(modulus)), rep_(rep) {
    if (modulus_.degree() < 1) throw MathError("number field modulus must be nonconstant");
    modulus_ = modulus_.monic();
    reduce();
}

NumberFieldElement::NumberFieldElement(UniPolyQ modulus, const Rational& c)
    : NumberFieldElement(std::move(modulus), UniPolyQ::constant(c)) {}

NumberFieldElement NumberFieldElement::generator(const UniPolyQ& modulus) {
    return {modulus, UniPolyQ::x()};
}

NumberFieldElement NumberFieldElement::rational(const Rational& c) { return {UniPolyQ::x(), c}; }

void NumberFieldElement::reduce() {
    if (rep_.degree() < modulus_.degree()) return;
    UniPolyQ q, r;
    poly_divmod(rep_, modulus_, q, r);
    rep_ = std::move(r);
}

void NumberFieldElement::check_field(const NumberFieldElement& o) const {
    if (!(modulus_ == o.modulus_)) throw FieldMismatch();
}

NumberFieldElement& NumberFieldElement::operator+=(const NumberFieldElement& o) {
    check_field(o);
    rep_ += o.rep_;
    return *this;
}

NumberFieldElement& NumberFieldElement::operator-=(const NumberFieldElement& o) {
    check_field(o);
    rep_ -= o.rep_;
    return *this;
}

NumberFieldElement& NumberFieldElement::operator*=(const NumberFieldElement& o) {
    check_field(o);
    if (modulus_.degree() == 1) {
        rep_ = UniPolyQ::constant(rep_[0] * o.rep_[0]);
        return *this;
    }
    rep_ = rep_ * o.rep_;
    reduce();
    return *this;
}

NumberFieldElement operator-(const NumberFieldElement& a) {
    NumberFieldElement r(a);
    r.rep_ = -r.rep_;
    return r;
}

NumberFieldElement operator*(NumberFieldElement a, const Rational& c) {
    a.rep_ *= c;
    return a;
}

NumberFieldElement NumberFieldElement::inverse() const {
    if (is_zero()) throw NotInvertible("inverse of zero");
    if (rep_.degree() == 0) return lift(rep_[0].inverse());
    // Extended Euclid on (rep, modulus), tracking only the rep cofactor.
    UniPolyQ r0 = modulus_, r1 = rep_;
    UniPolyQ s0, s1 = UniPolyQ::constant(1);
    while (!r1.is_zero()) {
        UniPolyQ q, r;
        poly_divmod(r0, r1, q, r);
        UniPolyQ s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.degree() != 0) throw NotInvertible("modulus is reducible: gcd(rep, modulus) = " + r0.to_string());
    return NumberFieldElement(modulus_, s0 * r0[0].inverse());
}

NumberFieldElement NumberFieldElement::pow(unsigned long e) const {
    NumberFieldElement r = one(), b = *this;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

std::vector<std::vector<Rational>> NumberFieldElement::multiplication_matrix() const {
    const int d = field_degree();
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
    NumberFieldElement col = *this;
    const NumberFieldElement gen = generator(modulus_);
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) m[i][j] = col.rep_[i];
        if (j + 1 < d) col *= gen;
    }
    return m;
}

Rational NumberFieldElement::norm() const { return determinant(multiplication_matrix()); }

Rational NumberFieldElement::trace() const {
    auto m = multiplication_matrix();
    Rational t(0);
    for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
    return t;
}

namespace {

// Solves sum_i c_i * cols[i] = target; columns are coordinate vectors.
std::optional<std::vector<Rational>> solve_columns(const std::vector<std::vector<Rational>>& cols,
                                                   const std::vector<Rational>& target) {
    const std::size_t n = target.size(), k = cols.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(k + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) a[i][j] = cols[j][i];
        a[i][k] = target[i];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < k && row < n; ++col) {
        std::size_t piv = row;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) continue;
        std::swap(a[piv], a[row]);
        Rational inv = a[row][col].inverse();
        for (std::size_t j = col; j <= k; ++j) a[row][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            Rational f = a[i][col];
            for (std::size_t j = col; j <= k; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < n; ++i)
        if (!a[i][k].is_zero()) return std::nullopt;
    std::vector<Rational> c(k);
    for (std::size_t r = 0; r < pivot_col.size(); ++r) c[pivot_col[r]] = a[r][k];
    return c;
}

}  // namespace

UniPolyQ NumberFieldElement::minimal_polynomial() const {
    const int d = field_degree();
    auto coords = [d](const NumberFieldElement& e) {
        std::vector<Rational> v(d);
        for (int i = 0; i < d; ++i) v[i] = e.rep_[i];
        return v;
    };
    std::vector<std::vector<Rational>> powers{coords(one())};
    NumberFieldElement cur = *this;
    for (int k = 1; k <= d; ++k) {
        auto target = coords(cur);
        if (auto c = solve_columns(powers, target)) {
            std::vector<Rational> mp(k + 1);
            for (int i = 0; i < k; ++i) mp[i] = -(*c)[i];
            mp[k] = Rational(1);
            return UniPolyQ(std::move(mp));
        }
        powers.push_back(std::move(target));
        cur *= *this;
    }
    throw MathError("no linear dependency among powers: modulus degree inconsistent");
}

std::string NumberFieldElement::to_string() const {
    return "[" + rep_.to_string() + " mod " + modulus_.to_string() + "]";
}

NumberFieldElement poly_eval_in_field(const UniPolyQ& f, const NumberFieldElement& x0) {
    NumberFieldElement r = x0.zero();
    for (std::size_t i = f.coeffs().size(); i-- > 0;) r = r * x0 + x0.lift(f.coeffs()[i]);
    return r;
}

NumberFieldElement nf_invert(const NumberFieldElement& a) { return a.inverse(); }

Rational determinant(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    if (n == 0) return Rational(1);
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    Integer scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Integer l = 1;
        for (const auto& x : m[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.raw().get_den_mpz_t());
        scale *= l;
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j].num() * (l / m[i][j].den());
    }
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a[piv][k] == 0) ++piv;
            if (piv == n) return Rational(0);
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k][k];
    }
    return Rational(a[n - 1][n - 1] * sign, scale);
}

}  // namespace torsion
