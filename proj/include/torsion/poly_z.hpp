#pragma once

// Dense integer polynomials. This is the working representation behind
// UniPolyQ multiplication/division and the whole factorization stack.

#include "torsion/rational.hpp"

#include <cstdint>
#include <vector>

namespace torsion {

/// Coefficients low-to-high; the empty vector is zero; no trailing zeros.
using ZPoly = std::vector<Integer>;

namespace zpoly {

void trim(ZPoly& f);
int degree(const ZPoly& f);  // -1 for zero
inline const Integer& lc(const ZPoly& f) { return f.back(); }

ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly scale(const ZPoly& a, const Integer& c);
ZPoly derivative(const ZPoly& f);

/// Exact division in Z[x]; false if b does not divide a over Z.
bool divides(const ZPoly& a, const ZPoly& b, ZPoly& quotient);

/// Nonnegative gcd of the coefficients.
Integer content(const ZPoly& f);
/// f / content(f) with positive leading coefficient.
ZPoly primitive_part(const ZPoly& f);

/// gcd over Z[x] of primitive parts (primitive, positive leading coefficient),
/// computed by a multi-prime modular algorithm with trial-division check.
ZPoly gcd(const ZPoly& a, const ZPoly& b);

/// Largest bit length among coefficient absolute values.
std::size_t max_bits(const ZPoly& f);
/// ceil of the Euclidean norm.
Integer norm2_ceil(const ZPoly& f);

/// Coefficients reduced into [0, m).
ZPoly mod(const ZPoly& f, const Integer& m);
/// Coefficients reduced into (-m/2, m/2].
ZPoly symmetric_mod(const ZPoly& f, const Integer& m);

/// Coefficients of f mod p as machine words in [0, p).
std::vector<std::uint64_t> reduce(const ZPoly& f, std::uint64_t p);

}  // namespace zpoly
}  // namespace torsion
