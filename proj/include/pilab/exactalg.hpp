#pragma once

#include <cstddef>
#include <vector>

#include "pilab/action.hpp"
#include "pilab/algebra.hpp"
#include "pilab/check.hpp"
#include "pilab/subspace.hpp"

namespace pilab {

struct RadicalResult {
  Subspace j;
  std::size_t p = 1;  // least p with J^p = 0
};

/// Jacobson radical as the kernel of the trace form tr(L_x L_y), with its
/// nilpotency index. Verifies that J is a nilpotent two-sided ideal and that
/// the quotient has zero radical.
RadicalResult radical(const Algebra& a);

/// Span of all products x y, x in u, y in v.
Subspace subspace_product(const Algebra& a, const Subspace& u, const Subspace& v);

/// Least subspace containing seed and closed under left and right
/// multiplication by A and under every action operator.
Subspace closure(const Algebra& a, const Action& act, const Subspace& seed);

/// Primitive central idempotents of a semisimple algebra whose center splits
/// over Q. Throws NotSplit otherwise.
std::vector<Vector> central_idempotents(const Algebra& b);

/// Minimal act-invariant ideals of the semisimple invariant subalgebra b.
std::vector<Subspace> h_simple_components(const Algebra& a, const Action& act, const Subspace& b);

struct SimplicityResult {
  bool simple = false;
  std::size_t envelope_dim = 0;  // dimension of the operator algebra
  std::size_t full_dim = 0;      // (dim B_0)^2
};

/// Burnside test: rho(H), the left and the right regular representations
/// generate all of End(B_0).
SimplicityResult is_h_simple(const Algebra& b0, const Action& act);

struct Decomposition {
  Algebra algebra;
  Subspace radical;
  std::size_t nilpotency_index = 1;
  std::vector<Subspace> components;
};

/// max dim(B_i1 + ... + B_ir) over distinct indices with B_i1 J B_i2 ... J B_ir != 0.
std::size_t pi_exponent(const Decomposition& d);

CheckReport verify_decomposition(const Algebra& a, const Action& act, const Decomposition& d);

/// Invariant Wedderburn-Malcev decomposition for trivial, group and
/// semisimple Hopf actions.
Decomposition wedderburn_malcev(const Algebra& a, const Action& act);

}  // namespace pilab
