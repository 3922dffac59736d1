#pragma once

#include "torsion/rational.hpp"
#include "torsion/shape.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace torsion {

enum class PhiId { PHI_1, PHI_2, PHIQ_2, PHIQ_3, PHIQ_4, PHIQ_5, PHIQ_6 };

std::string to_string(PhiId id);
/// Throws ParseError for an unknown name.
PhiId parse_phi_id(const std::string& name);
const std::vector<PhiId>& all_phi_ids();

/// Torsion groups over fields of a given degree, as golden data.
struct PhiTable {
    PhiId id;
    /// Source theorem, used in report trails.
    std::string cite;
    /// Ascending.
    std::vector<TorsionShape> members;
    /// Side conditions attached to single members; not evaluated.
    std::map<TorsionShape, std::string> annotations;

    bool contains(const TorsionShape& s) const;
    /// s embeds in some member.
    bool has_supergroup_of(const TorsionShape& s) const;
};

const PhiTable& phi_table(PhiId id);
/// Table of torsion of rational curves base changed to a field of prime
/// degree p: the PHIQ tables for p <= 5 and PHI_1 for p >= 7.
const PhiTable& phi_q_table_for_prime(unsigned p);

struct IsogenyDegrees {
    std::set<unsigned> full;
    std::set<unsigned> infinite_families;
};

const IsogenyDegrees& isogeny_degrees();
/// a*b is the degree of some rational cyclic isogeny.
bool isogeny_combination_allowed(unsigned a, unsigned b);

/// |GL_2(Z / ell^k Z)| = ell^(4(k-1)) (ell^2 - 1)(ell^2 - ell). Throws
/// MathError unless ell is prime and k >= 1.
Integer gl2_order(unsigned ell, unsigned k);

unsigned long euler_phi(unsigned long n);
bool is_prime(unsigned long n);

/// Primes dividing the order of a torsion point of some rational curve over
/// some field of degree d, for d = 2p with p an odd prime. Throws
/// UnsupportedDegree otherwise.
std::set<unsigned> rq(unsigned d);

/// 2(q-1) | d or (q^2-1)/3 | d, for primes q >= 23 outside
/// {37, 43, 67, 163}; throws OutOfWindow elsewhere.
bool rq_divisibility_screen(unsigned q, unsigned d);

/// phi(m) does not divide d: full m-torsion cannot live over degree d.
/// Throws MathError for m < 3.
bool weil_obstruction(unsigned m, unsigned d);

enum class Verdict { EXCLUDED, ALLOWED_CANDIDATE, CERTIFIED };
std::string to_string(Verdict v);

struct TrailEntry {
    std::string rule;
    std::string cite;
    bool fired = false;
    friend bool operator==(const TrailEntry&, const TrailEntry&) = default;
};

struct ObstructionReport {
    TorsionShape target;
    unsigned degree = 0;
    std::optional<Rational> j;
    Verdict verdict = Verdict::ALLOWED_CANDIDATE;
    /// Every rule applicable to (target, degree), in evaluation order.
    std::vector<TrailEntry> trail;
    /// Documented exceptions and side conditions that were not evaluated.
    std::vector<std::string> notes;

    bool fired(const std::string& rule) const;
};

/// Largest n considered by classify and excluded_shapes.
inline constexpr unsigned kShapeBound = 256;

/// Runs the rule list on one shape over fields of prime degree p.
ObstructionReport evaluate_shape(const TorsionShape& target, unsigned p);

/// One report per shape C_m (+) C_n with n <= kShapeBound, ascending.
/// Throws MathError unless p is prime.
std::vector<ObstructionReport> classify(unsigned p);
/// Orders n with C_n not excluded.
std::set<unsigned> allowed_cyclic_orders(unsigned p);
/// Shapes with m >= 2 that are not excluded.
std::vector<TorsionShape> candidate_pairs(unsigned p);
/// Minimal excluded shapes: those killed by the Weil pairing plus the shapes
/// named by the lemma rules applicable at p.
std::vector<ObstructionReport> excluded_shapes(unsigned p);

/// The fifteen-isogeny and twenty-one-isogeny j-invariant lists.
const std::vector<Rational>& j_list_15_isogeny();
const std::vector<Rational>& j_list_21_isogeny();

}  // namespace torsion
