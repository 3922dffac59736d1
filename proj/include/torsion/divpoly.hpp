#pragma once

#include "torsion/curves.hpp"

#include <map>
#include <mutex>
#include <optional>

namespace torsion {

/// Memoized division polynomials of one curve, x-only convention: the factor
/// y of even-index psi_n is dropped, so every entry lies in Q[x]. Safe to
/// share between threads; fills are serialized.
class DivPolyCache {
public:
    explicit DivPolyCache(Curve e) : curve_(std::move(e)) {}

    const Curve& curve() const { return curve_; }

    /// psi_n (n >= 0) with y removed for even n: degree (n^2-1)/2 for odd n,
    /// (n^2-4)/2 for even n, leading coefficient n.
    UniPolyQ psi(unsigned n);
    /// f_2 = x^3 + a*x + b, and for n >= 3 the quotient of psi_n by the
    /// primitive polynomials of its divisors 3 <= d < n; its roots are the
    /// x-coordinates of the points of exact order n.
    UniPolyQ primitive(unsigned n);

private:
    const UniPolyQ& psi_locked(unsigned n);
    const UniPolyQ& primitive_locked(unsigned n);

    Curve curve_;
    std::mutex mu_;
    std::map<unsigned, UniPolyQ> psi_;
    std::map<unsigned, UniPolyQ> prim_;
};

UniPolyQ psi(const Curve& e, unsigned n);
/// Throws MathError for n < 2.
UniPolyQ primitive_divpoly(const Curve& e, unsigned n);

/// deg psi_n in the x-only convention.
int psi_degree(unsigned n);
/// deg f_n = n^2 prod_{p | n} (1 - p^-2) / 2 for n >= 3; 3 for n = 2.
int primitive_degree(unsigned n);

/// Smallest n in [2, n_max] with f_n(x0) = 0, if any.
std::optional<unsigned> exact_order_of_x(const Curve& e, const NumberFieldElement& x0, unsigned n_max);
std::optional<unsigned> exact_order_of_x(DivPolyCache& cache, const NumberFieldElement& x0, unsigned n_max);

}  // namespace torsion
