#include "torsion/poly_q.hpp"

#include "torsion/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace torsion {

UniPolyQ::UniPolyQ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPolyQ::UniPolyQ(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

UniPolyQ UniPolyQ::constant(const Rational& c) { return UniPolyQ({c}); }

UniPolyQ UniPolyQ::x() { return UniPolyQ({Rational(0), Rational(1)}); }

UniPolyQ UniPolyQ::monomial(const Rational& c, unsigned k) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return UniPolyQ(std::move(v));
}

UniPolyQ UniPolyQ::from_zpoly(const ZPoly& f) {
    std::vector<Rational> v(f.begin(), f.end());
    return UniPolyQ(std::move(v));
}

void UniPolyQ::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPolyQ UniPolyQ::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty polynomial");
    std::vector<Rational> acc;
    auto add_term = [&](const Rational& c, std::size_t k) {
        if (acc.size() <= k) acc.resize(k + 1);
        acc[k] += c;
    };
    std::size_t i = 0;
    auto fail = [&]() { throw ParseError("cannot parse polynomial '" + std::string(text) + "'"); };
    auto read_digits = [&]() {
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        return s.substr(start, i - start);
    };
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            fail();
        }
        first = false;
        Rational coef(1);
        bool have_coef = false;
        std::string num = read_digits();
        if (!num.empty()) {
            have_coef = true;
            coef = Rational(Integer(num));
            if (i < s.size() && s[i] == '/') {
                ++i;
                std::string den = read_digits();
                if (den.empty()) fail();
                coef = Rational(Integer(num), Integer(den));
            }
        }
        std::size_t power = 0;
        if (i < s.size() && s[i] == '*') {
            if (!have_coef) fail();
            ++i;
            if (i >= s.size() || s[i] != 'x') fail();
        }
        if (i < s.size() && s[i] == 'x') {
            ++i;
            power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string e = read_digits();
                if (e.empty()) fail();
                power = std::stoul(e);
            }
        } else if (!have_coef) {
            fail();
        }
        add_term(sign < 0 ? -coef : coef, power);
    }
    return UniPolyQ(std::move(acc));
}

std::string UniPolyQ::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Rational& c = c_[i];
        if (c.is_zero()) continue;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << '-';
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << a;
            continue;
        }
        if (a != Rational(1)) os << a << '*';
        os << 'x';
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

UniPolyQ UniPolyQ::monic() const {
    if (c_.empty()) return *this;
    Rational inv = c_.back().inverse();
    UniPolyQ r(*this);
    for (auto& c : r.c_) c *= inv;
    return r;
}

UniPolyQ UniPolyQ::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UniPolyQ(std::move(v));
}

Rational UniPolyQ::eval(const Rational& x) const {
    Rational r(0);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

UniPolyQ UniPolyQ::scale_variable(const Rational& c) const {
    std::vector<Rational> v(c_);
    Rational pw(1);
    for (auto& a : v) {
        a *= pw;
        pw *= c;
    }
    return UniPolyQ(std::move(v));
}

void UniPolyQ::to_primitive(Rational& content, ZPoly& prim) const {
    prim.clear();
    if (c_.empty()) {
        content = Rational(0);
        return;
    }
    Integer l = 1;
    for (const auto& c : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.raw().get_den_mpz_t());
    prim.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        mpz_divexact(prim[i].get_mpz_t(), l.get_mpz_t(), c_[i].raw().get_den_mpz_t());
        prim[i] *= c_[i].raw().get_num();
    }
    Integer g = zpoly::content(prim);
    if (prim.back() < 0) g = -g;
    for (auto& a : prim) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
    content = Rational(g, l);
}

bool UniPolyQ::is_integral() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& c) { return c.is_integer(); });
}

UniPolyQ& UniPolyQ::operator+=(const UniPolyQ& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPolyQ& UniPolyQ::operator-=(const UniPolyQ& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPolyQ& UniPolyQ::operator*=(const Rational& c) {
    if (c.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& a : c_) a *= c;
    return *this;
}

UniPolyQ operator-(const UniPolyQ& a) {
    UniPolyQ r(a);
    r *= Rational(-1);
    return r;
}

namespace {

UniPolyQ from_content(const Rational& content, const ZPoly& prim) {
    std::vector<Rational> v;
    v.reserve(prim.size());
    for (const auto& c : prim) v.emplace_back(Rational(c) * content);
    return UniPolyQ(std::move(v));
}

}  // namespace

UniPolyQ operator*(const UniPolyQ& a, const UniPolyQ& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Rational ca, cb;
    ZPoly pa, pb;
    a.to_primitive(ca, pa);
    b.to_primitive(cb, pb);
    return from_content(ca * cb, zpoly::mul(pa, pb));
}

UniPolyQ poly_add(const UniPolyQ& a, const UniPolyQ& b) { return a + b; }

UniPolyQ poly_mul(const UniPolyQ& a, const UniPolyQ& b) { return a * b; }

UniPolyQ poly_exact_div(const UniPolyQ& a, const UniPolyQ& b) {
    if (b.is_zero()) throw InexactDivision("division by the zero polynomial");
    if (a.is_zero()) return {};
    Rational ca, cb;
    ZPoly pa, pb, q;
    a.to_primitive(ca, pa);
    b.to_primitive(cb, pb);
    // Gauss: b | a over Q iff prim(b) | prim(a) over Z.
    if (!zpoly::divides(pa, pb, q)) throw InexactDivision();
    return from_content(ca / cb, q);
}

void poly_divmod(const UniPolyQ& a, const UniPolyQ& b, UniPolyQ& q, UniPolyQ& r) {
    if (b.is_zero()) throw ZeroDenominator();
    std::vector<Rational> rem(a.coeffs());
    const int db = b.degree();
    if (a.degree() < db) {
        q = UniPolyQ();
        r = a;
        return;
    }
    std::vector<Rational> quo(a.degree() - db + 1);
    const Rational inv = b.lc().inverse();
    for (int k = a.degree(); k >= db; --k) {
        if (rem[k].is_zero()) continue;
        Rational c = rem[k] * inv;
        quo[k - db] = c;
        for (int j = 0; j <= db; ++j) rem[k - db + j] -= c * b.coeffs()[j];
    }
    rem.resize(db);
    q = UniPolyQ(std::move(quo));
    r = UniPolyQ(std::move(rem));
}

UniPolyQ poly_gcd(const UniPolyQ& a, const UniPolyQ& b) {
    if (a.is_zero() && b.is_zero()) return {};
    Rational c;
    ZPoly pa, pb;
    a.to_primitive(c, pa);
    b.to_primitive(c, pb);
    return UniPolyQ::from_zpoly(zpoly::gcd(pa, pb)).monic();
}

UniPolyQ poly_pow(const UniPolyQ& a, unsigned e) {
    UniPolyQ r = UniPolyQ::constant(1), b = a;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

UniPolyQ poly_compose(const UniPolyQ& p, const UniPolyQ& q) {
    UniPolyQ r;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) r = r * q + UniPolyQ::constant(p.coeffs()[i]);
    return r;
}

bool poly_less(const UniPolyQ& a, const UniPolyQ& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(),
                                        b.coeffs().end());
}

}  // namespace torsion
