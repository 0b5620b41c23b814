#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pilab/check.hpp"
#include "pilab/hpolynomial.hpp"

namespace pilab {

/// A polynomial alternating in disjoint variable sets together with a
/// substitution on which it evaluates to a known value.
struct AlternatingPolynomial {
  HPolynomial f;
  std::vector<std::vector<std::size_t>> sets;
  std::vector<std::size_t> fixed;   // variables with a fixed witness value (z_1..z_T and the like)
  std::optional<std::size_t> free;  // variable z with f(..., z) = z; none means f(...) = 1
  std::vector<Vector> witness;      // one value per variable; the free slot is ignored
  Rational mu = 1;                  // scalar removed while normalizing
};

/// Dimension of span{ phi(a) psi(b) rho(h) } inside End(B_0).
std::size_t operator_span_dim(const Algebra& b0, const Action& act);

/// For a split H-simple semisimple b0 of dimension ell <= 2: a polynomial
/// alternating in 2k sets of ell variables, with fixed values z_1..z_T such
/// that substituting the basis into every set gives the identity map in z.
/// Variables: the sets in order, then z_1..z_T, then z.
AlternatingPolynomial build_alternating(const Algebra& b0, const Action& act, std::size_t k);

/// prod_{j<k} f_1(x_{4j+1}, ..., x_{4j+4}) x_{4k+1} ... x_n over the dual of
/// Sweedler's algebra, where f_1 alternates g_1, g_c, g_b, g_cb over its block.
AlternatingPolynomial sweedler_alternating(std::size_t k, std::size_t n);

/// Coefficient-level alternation under every transposition inside each set,
/// plus the witness value.
CheckReport verify_alternating(const AlternatingPolynomial& p, const Algebra& a, const Action& act);

}  // namespace pilab
