#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace torsion {

/// C_m (+) C_n with m | n; the cyclic group C_k is (1, k).
struct TorsionShape {
    unsigned m = 1;
    unsigned n = 1;

    TorsionShape() = default;
    /// Throws MathError unless 1 <= m, m | n.
    TorsionShape(unsigned m, unsigned n);
    static TorsionShape cyclic(unsigned n) { return {1, n}; }

    bool is_cyclic() const { return m == 1; }
    unsigned order() const { return m * n; }
    /// C_a (+) C_b embeds in C_m (+) C_n iff a | m and b | n.
    bool is_subgroup_of(const TorsionShape& o) const { return o.m % m == 0 && o.n % n == 0; }

    /// "C6", "C2xC12"
    std::string to_string() const;
    /// Accepts "C6", "C2xC12", "C2+C12" and "C2⊕C12"; throws ParseError.
    static TorsionShape parse(std::string_view text);

    friend auto operator<=>(const TorsionShape&, const TorsionShape&) = default;
};

}  // namespace torsion
