#include "torsion/classify.hpp"

#include "torsion/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace torsion {

namespace {

using Shapes = std::vector<TorsionShape>;

void add_cyclic(Shapes& s, std::initializer_list<unsigned> ns) {
    for (unsigned n : ns) s.push_back(TorsionShape::cyclic(n));
}

void add_range(Shapes& s, unsigned lo, unsigned hi) {
    for (unsigned n = lo; n <= hi; ++n) s.push_back(TorsionShape::cyclic(n));
}

// C_k (+) C_{k*i} for i in ms.
void add_pairs(Shapes& s, unsigned k, std::initializer_list<unsigned> ms) {
    for (unsigned i : ms) s.emplace_back(k, k * i);
}

PhiTable make(PhiId id, std::string cite, Shapes members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return {id, std::move(cite), std::move(members), {}};
}

std::vector<PhiTable> build_tables() {
    std::vector<PhiTable> t;
    {
        Shapes s;
        add_range(s, 1, 10);
        add_cyclic(s, {12});
        add_pairs(s, 2, {1, 2, 3, 4});
        t.push_back(make(PhiId::PHI_1, "Theorem 2.1", s));
    }
    {
        Shapes s;
        add_range(s, 1, 16);
        add_cyclic(s, {18});
        add_pairs(s, 2, {1, 2, 3, 4, 5, 6});
        add_pairs(s, 3, {1, 2});
        add_pairs(s, 4, {1});
        t.push_back(make(PhiId::PHI_2, "Theorem 2.2", s));
    }
    {
        Shapes s;
        add_range(s, 1, 10);
        add_cyclic(s, {12, 15, 16});
        add_pairs(s, 2, {1, 2, 3, 4, 5, 6});
        add_pairs(s, 3, {1, 2});
        add_pairs(s, 4, {1});
        t.push_back(make(PhiId::PHIQ_2, "Theorem 2.4", s));
    }
    {
        Shapes s;
        add_range(s, 1, 10);
        add_cyclic(s, {12, 13, 14, 18, 21});
        add_pairs(s, 2, {1, 2, 3, 4, 7});
        t.push_back(make(PhiId::PHIQ_3, "Theorem 2.5", s));
    }
    {
        Shapes s;
        add_range(s, 1, 10);
        add_cyclic(s, {12, 13, 15, 16, 20, 24});
        add_pairs(s, 2, {1, 2, 3, 4, 5, 6, 8});
        add_pairs(s, 3, {1, 2});
        add_pairs(s, 4, {1, 2});
        add_pairs(s, 5, {1});
        add_pairs(s, 6, {1});
        t.push_back(make(PhiId::PHIQ_4, "Theorem 2.6", s));
    }
    {
        Shapes s;
        add_range(s, 1, 12);
        add_cyclic(s, {25});
        add_pairs(s, 2, {1, 2, 3, 4});
        t.push_back(make(PhiId::PHIQ_5, "Theorem 2.7", s));
    }
    {
        Shapes s;
        for (unsigned n = 1; n <= 16; ++n)
            if (n != 11) s.push_back(TorsionShape::cyclic(n));
        add_cyclic(s, {18, 21, 30});
        add_pairs(s, 2, {1, 2, 3, 4, 5, 6, 7, 9});
        add_pairs(s, 3, {1, 2, 3, 4});
        add_pairs(s, 4, {1, 3});
        add_pairs(s, 6, {1});
        s.emplace_back(3, 18);
        PhiTable pt = make(PhiId::PHIQ_6, "Theorem 2.8", s);
        pt.annotations[TorsionShape(3, 18)] = "requires G_E(2) = 2B";
        t.push_back(std::move(pt));
    }
    return t;
}

const std::vector<PhiTable>& tables() {
    static const std::vector<PhiTable> t = build_tables();
    return t;
}

unsigned strip(unsigned n, unsigned q) {
    while (n % q == 0) n /= q;
    return n;
}

// Largest divisor of n of the form 2^a 3^b.
unsigned smooth23_part(unsigned n) { return n / strip(strip(n, 2), 3); }

bool divides(unsigned a, unsigned b) { return b % a == 0; }

std::string phi_q_cite(unsigned p) { return phi_q_table_for_prime(p).cite; }

struct Rule {
    std::string id;
    // Hypotheses of the cited statement hold for (shape, p).
    std::function<bool(const TorsionShape&, unsigned)> applies;
    // Conclusion contradicts the shape.
    std::function<bool(const TorsionShape&, unsigned)> fires;
    std::function<std::string(unsigned)> cite;
};

// Lemma rules naming explicit subgroups that cannot occur.
struct NamedExclusion {
    std::string id;
    std::string cite;
    std::function<bool(unsigned)> at_degree;
    Shapes shapes;
};

const std::vector<NamedExclusion>& named_exclusions() {
    static const std::vector<NamedExclusion> v = {
        {"lemma-3.7", "Lemma 3.7", [](unsigned p) { return p % 2 == 1; }, {TorsionShape::cyclic(16)}},
        {"lemma-3.8", "Lemma 3.8", [](unsigned p) { return p % 2 == 1; }, {TorsionShape(2, 12)}},
        {"lemma-3.9", "Lemma 3.9", [](unsigned) { return true; }, {TorsionShape::cyclic(27)}},
        {"lemma-3.10", "Lemma 3.10", [](unsigned p) { return p >= 5; }, {TorsionShape::cyclic(18)}},
        {"lemma-5.1", "Lemma 5.1", [](unsigned p) { return p == 7; },
         {TorsionShape::cyclic(49), TorsionShape::cyclic(21), TorsionShape::cyclic(14)}},
        {"lemma-6.1", "Lemma 6.1", [](unsigned p) { return p == 5; },
         {TorsionShape::cyclic(121), TorsionShape::cyclic(15), TorsionShape::cyclic(50),
          TorsionShape::cyclic(125)}},
        {"pairs-degree-5", "Lemma (degree 5 pairs)", [](unsigned p) { return p == 5; },
         {TorsionShape(2, 10), TorsionShape(2, 12)}},
        {"pairs-degree-3", "Lemma (degree 3 pairs)", [](unsigned p) { return p == 3; },
         {TorsionShape(2, 10), TorsionShape(2, 12), TorsionShape(2, 18)}},
    };
    return v;
}

// Degree of the rational cyclic isogeny forced on the rational model E' by
// a cyclic subgroup of order n, for p >= 5.
unsigned forced_isogeny_degree(unsigned n, unsigned p) {
    unsigned deg = smooth23_part(n);
    if (p == 5 && divides(5, n)) deg *= 5;
    if (p == 5 && divides(11, n)) deg *= 11;
    if (p == 7 && divides(7, n)) deg *= 7;
    return deg;
}

bool outside_phi_q(const TorsionShape& s, unsigned p) { return !phi_q_table_for_prime(p).has_supergroup_of(s); }

const std::vector<Rule>& rules() {
    static const std::vector<Rule> v = [] {
        std::vector<Rule> r;
        r.push_back({"weil-pairing", [](const TorsionShape& s, unsigned) { return s.m >= 3; },
                     [](const TorsionShape& s, unsigned p) { return weil_obstruction(s.m, p); },
                     [](unsigned) { return std::string("Weil pairing: Q(zeta_m) in K"); }});
        r.push_back({"lemma-3.1", [](const TorsionShape&, unsigned p) { return p % 2 == 1; },
                     [](const TorsionShape& s, unsigned p) {
                         const auto allowed = rq(2 * p);
                         unsigned n = s.n;
                         for (unsigned q = 2; q <= n; ++q) {
                             if (n % q) continue;
                             if (!allowed.count(q)) return true;
                             n = strip(n, q);
                         }
                         return false;
                     },
                     [](unsigned) { return std::string("Lemma 3.1"); }});
        r.push_back({"theorem-2.2", [](const TorsionShape&, unsigned p) { return p == 2; },
                     [](const TorsionShape& s, unsigned) { return !phi_table(PhiId::PHI_2).has_supergroup_of(s); },
                     [](unsigned) { return std::string("Theorem 2.2"); }});
        r.push_back({"phi-q-2p", [](const TorsionShape&, unsigned p) { return p == 2 || p == 3; },
                     [](const TorsionShape& s, unsigned p) {
                         return !phi_table(p == 2 ? PhiId::PHIQ_4 : PhiId::PHIQ_6).has_supergroup_of(s);
                     },
                     [](unsigned p) {
                         return "twist over degree " + std::to_string(2 * p) + "; " +
                                phi_table(p == 2 ? PhiId::PHIQ_4 : PhiId::PHIQ_6).cite;
                     }});
        r.push_back({"lemma-3.5",
                     [](const TorsionShape& s, unsigned p) { return p % 2 == 1 && p != 5 && divides(5, s.n); },
                     outside_phi_q, [](unsigned p) { return "Lemma 3.5 base change; " + phi_q_cite(p); }});
        r.push_back({"lemma-3.6",
                     [](const TorsionShape& s, unsigned p) { return p != 3 && p != 7 && divides(7, s.n); },
                     outside_phi_q, [](unsigned p) { return "Lemma 3.6 base change; " + phi_q_cite(p); }});
        r.push_back({"lemma-3.4", [](const TorsionShape&, unsigned p) { return p >= 5; },
                     [](const TorsionShape& s, unsigned p) {
                         return !isogeny_degrees().full.count(forced_isogeny_degree(s.n, p));
                     },
                     [](unsigned) { return std::string("Lemma 3.4; Theorem 2.3"); }});
        for (const auto& ne : named_exclusions()) {
            const NamedExclusion* e = &ne;
            r.push_back({e->id,
                         [e](const TorsionShape&, unsigned p) { return e->at_degree(p); },
                         [e](const TorsionShape& s, unsigned) {
                             for (const auto& t : e->shapes)
                                 if (t.is_subgroup_of(s)) return true;
                             return false;
                         },
                         [e](unsigned) { return e->cite; }});
        }
        return r;
    }();
    return v;
}

void require_prime(unsigned p) {
    if (!is_prime(p)) throw MathError("degree must be prime, got " + std::to_string(p));
}

const std::vector<TorsionShape>& universe() {
    static const Shapes u = [] {
        Shapes s;
        for (unsigned n = 1; n <= kShapeBound; ++n)
            for (unsigned m = 1; m <= n; ++m)
                if (n % m == 0) s.emplace_back(m, n);
        std::sort(s.begin(), s.end());
        return s;
    }();
    return u;
}

}  // namespace

std::string to_string(PhiId id) {
    switch (id) {
        case PhiId::PHI_1: return "PHI_1";
        case PhiId::PHI_2: return "PHI_2";
        case PhiId::PHIQ_2: return "PHIQ_2";
        case PhiId::PHIQ_3: return "PHIQ_3";
        case PhiId::PHIQ_4: return "PHIQ_4";
        case PhiId::PHIQ_5: return "PHIQ_5";
        case PhiId::PHIQ_6: return "PHIQ_6";
    }
    return "?";
}

PhiId parse_phi_id(const std::string& name) {
    for (PhiId id : all_phi_ids())
        if (to_string(id) == name) return id;
    throw ParseError("unknown table id: " + name);
}

const std::vector<PhiId>& all_phi_ids() {
    static const std::vector<PhiId> ids = {PhiId::PHI_1,  PhiId::PHI_2,  PhiId::PHIQ_2, PhiId::PHIQ_3,
                                           PhiId::PHIQ_4, PhiId::PHIQ_5, PhiId::PHIQ_6};
    return ids;
}

bool PhiTable::contains(const TorsionShape& s) const {
    return std::binary_search(members.begin(), members.end(), s);
}

bool PhiTable::has_supergroup_of(const TorsionShape& s) const {
    return std::any_of(members.begin(), members.end(), [&](const TorsionShape& t) { return s.is_subgroup_of(t); });
}

const PhiTable& phi_table(PhiId id) { return tables()[static_cast<std::size_t>(id)]; }

const PhiTable& phi_q_table_for_prime(unsigned p) {
    switch (p) {
        case 2: return phi_table(PhiId::PHIQ_2);
        case 3: return phi_table(PhiId::PHIQ_3);
        case 5: return phi_table(PhiId::PHIQ_5);
        default: return phi_table(PhiId::PHI_1);
    }
}

const IsogenyDegrees& isogeny_degrees() {
    static const IsogenyDegrees d = [] {
        IsogenyDegrees r;
        for (unsigned n = 1; n <= 19; ++n) r.full.insert(n);
        r.full.insert({21, 25, 27, 37, 43, 67, 163});
        for (unsigned n = 1; n <= 10; ++n) r.infinite_families.insert(n);
        r.infinite_families.insert({12, 13, 16, 18, 25});
        return r;
    }();
    return d;
}

bool isogeny_combination_allowed(unsigned a, unsigned b) {
    return isogeny_degrees().full.count(static_cast<unsigned long>(a) * b) > 0;
}

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Integer gl2_order(unsigned ell, unsigned k) {
    if (!is_prime(ell) || k == 0) throw MathError("gl2_order needs a prime and k >= 1");
    Integer l = ell, r;
    mpz_pow_ui(r.get_mpz_t(), l.get_mpz_t(), 4ul * (k - 1));
    return r * (l * l - 1) * (l * l - l);
}

unsigned long euler_phi(unsigned long n) {
    unsigned long r = n;
    for (unsigned long q = 2; q * q <= n; ++q) {
        if (n % q) continue;
        while (n % q == 0) n /= q;
        r -= r / q;
    }
    if (n > 1) r -= r / n;
    return r;
}

std::set<unsigned> rq(unsigned d) {
    if (d % 2 == 0 && is_prime(d / 2) && d / 2 >= 3) {
        const unsigned p = d / 2;
        if (p == 3) return {2, 3, 5, 7, 13};
        if (p == 5) return {2, 3, 5, 7, 11};
        return {2, 3, 5, 7};
    }
    throw UnsupportedDegree("R_Q(d) is known only for d = 2p with p an odd prime, got " + std::to_string(d));
}

bool rq_divisibility_screen(unsigned q, unsigned d) {
    static const std::set<unsigned> exceptional = {37, 43, 67, 163};
    if (!is_prime(q) || q < 23 || exceptional.count(q))
        throw OutOfWindow("screen applies to primes q >= 23 outside {37, 43, 67, 163}, got " + std::to_string(q));
    const unsigned long qq = q;
    return d % (2 * (qq - 1)) == 0 || d % ((qq * qq - 1) / 3) == 0;
}

bool weil_obstruction(unsigned m, unsigned d) {
    if (m < 3) throw MathError("weil_obstruction needs m >= 3");
    return d % euler_phi(m) != 0;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::EXCLUDED: return "EXCLUDED";
        case Verdict::ALLOWED_CANDIDATE: return "ALLOWED_CANDIDATE";
        case Verdict::CERTIFIED: return "CERTIFIED";
    }
    return "?";
}

bool ObstructionReport::fired(const std::string& rule) const {
    return std::any_of(trail.begin(), trail.end(), [&](const TrailEntry& e) { return e.fired && e.rule == rule; });
}

ObstructionReport evaluate_shape(const TorsionShape& target, unsigned p) {
    require_prime(p);
    ObstructionReport rep;
    rep.target = target;
    rep.degree = p;
    bool excluded = false;
    for (const auto& r : rules()) {
        if (!r.applies(target, p)) continue;
        const bool f = r.fires(target, p);
        rep.trail.push_back({r.id, r.cite(p), f});
        excluded = excluded || f;
    }
    rep.verdict = excluded ? Verdict::EXCLUDED : Verdict::ALLOWED_CANDIDATE;
    if (p == 3 && divides(7, target.n))
        rep.notes.push_back(
            "lemma-3.6 exception: rational models with mod-7 image 7Ns.2.1 have torsion in {C1, C2, C2xC2, C7} "
            "over every degree-2p field");
    if (!excluded && target.is_cyclic() && phi_q_table_for_prime(p).contains(target))
        rep.notes.push_back("attained by base change: " + phi_q_cite(p));
    if (const auto& ann = phi_q_table_for_prime(p).annotations; ann.count(target))
        rep.notes.push_back(ann.at(target));
    return rep;
}

std::vector<ObstructionReport> classify(unsigned p) {
    require_prime(p);
    std::vector<ObstructionReport> out;
    out.reserve(universe().size());
    for (const auto& s : universe()) out.push_back(evaluate_shape(s, p));
    return out;
}

std::set<unsigned> allowed_cyclic_orders(unsigned p) {
    require_prime(p);
    std::set<unsigned> out;
    for (unsigned n = 1; n <= kShapeBound; ++n)
        if (evaluate_shape(TorsionShape::cyclic(n), p).verdict != Verdict::EXCLUDED) out.insert(n);
    return out;
}

std::vector<TorsionShape> candidate_pairs(unsigned p) {
    std::vector<TorsionShape> out;
    for (const auto& r : classify(p))
        if (!r.target.is_cyclic() && r.verdict != Verdict::EXCLUDED) out.push_back(r.target);
    return out;
}

std::vector<ObstructionReport> excluded_shapes(unsigned p) {
    require_prime(p);
    Shapes s;
    for (const auto& t : universe())
        if (t.m >= 3 && weil_obstruction(t.m, p)) s.push_back(t);
    for (const auto& ne : named_exclusions())
        if (ne.at_degree(p)) s.insert(s.end(), ne.shapes.begin(), ne.shapes.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    std::vector<ObstructionReport> out;
    for (const auto& t : s) out.push_back(evaluate_shape(t, p));
    return out;
}

const std::vector<Rational>& j_list_15_isogeny() {
    static const std::vector<Rational> v = {
        Rational::parse("-25/2"),
        Rational::parse("-349938025/8"),
        Rational::parse("-121945/32"),
        Rational::parse("46969655/32768"),
    };
    return v;
}

const std::vector<Rational>& j_list_21_isogeny() {
    static const std::vector<Rational> v = {
        Rational::parse("-140625/8"),
        Rational::parse("3375/2"),
        Rational::parse("3477265875/2097152"),
        Rational::parse("-189613868625/128"),
    };
    return v;
}

}  // namespace torsion
