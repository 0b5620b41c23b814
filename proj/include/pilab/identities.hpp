#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pilab/check.hpp"
#include "pilab/hpolynomial.hpp"
#include "pilab/linalg.hpp"

namespace pilab {

/// Entry cap for evaluation matrices: PILAB_CAP if set, else `fallback`.
std::uint64_t resource_cap(std::optional<std::uint64_t> fallback = std::nullopt);

inline constexpr std::uint64_t default_cap = 10'000'000;

/// All n! dim(H)^n monomials, ordered by (perm, labels).
std::vector<Monomial> monomial_basis(std::size_t n, std::size_t dim_h, std::uint64_t cap = resource_cap());

std::vector<HPolynomial> monomial_polynomials(std::size_t n, const ActionAlgebra& h,
                                              std::uint64_t cap = resource_cap());

/// f vanishes on every basis tuple.
bool is_identity(const HPolynomial& f, const Algebra& a, const Action& act, std::uint64_t cap = resource_cap());

/// Image of P^H_n in the n-linear maps A^n -> A. Columns are (tuple, output
/// coordinate) with tuples in lexicographic order.
struct EvaluationImage {
  std::size_t n = 0;
  std::size_t dim_a = 0;
  Echelon basis;
  RowSpaceStats stats;

  std::size_t rank() const noexcept { return basis.rank(); }
};

EvaluationImage codimension(const Algebra& a, const Action& act, std::size_t n, std::uint64_t cap = resource_cap());

/// Graded codimension from graded monomials x^{g_1}_{s(1)} ... directly: a
/// variable of degree g only takes values in A^(g).
EvaluationImage graded_codimension(const GradedAlgebra& x, std::size_t n, std::uint64_t cap = resource_cap());

struct BoundsResult {
  std::size_t n = 0;
  std::size_t c_ordinary = 0;
  std::size_t c_h = 0;
  Rational dim_bound;   // (dim A)^(n+1)
  Rational h_bound;     // (dim H)^n c_n
  CheckReport report;
};

BoundsResult check_bounds(const Algebra& a, const Action& act, std::size_t n, std::uint64_t cap = resource_cap());

/// Regev's central polynomial for M_ell in x_1..x_{ell^2}, y_1..y_{ell^2}
/// (variables 0..ell^2-1 and ell^2..2ell^2-1). FeasibilityLimit for ell >= 3.
HPolynomial regev(std::size_t ell);

}  // namespace pilab
