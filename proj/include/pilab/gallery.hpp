#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pilab/hpolynomial.hpp"
#include "pilab/identities.hpp"
#include "pilab/report.hpp"
#include "pilab/scenario.hpp"

namespace pilab {

/// Two copies of M_2 graded by S_3: diagonals in degree e, the off-diagonal
/// units of the first copy in degree (12) and of the second in degree (23).
Scenario s3_graded_m2m2();
/// FS_3 with A^(g) = F g.
Scenario fs3_natural_grading();
/// F e_1 + ... + F e_m with Z_m permuting the idempotents cyclically.
Scenario idempotents_cyclic(std::size_t m);
/// M_2 + M_2 with Z_2 acting by transpose on each copy and swapping the copies.
Scenario m2m2_transpose_swap();
/// UT_2 + UT_2 with Z_2 swapping the copies.
Scenario ut2ut2_swap();
/// Sweedler's algebra under the dual regular action of its dual, with the
/// candidate decomposition J = span{b, cb}, B = span{1, c}.
Scenario sweedler();

/// M_2 with Z_2 acting by the automorphism that negates the off-diagonal entries.
Scenario m2_sign_flip();
/// M_2 with Z_2 acting by transposition (an anti-automorphism).
Scenario m2_transpose();
/// M_2 graded by Z_2 into diagonal and off-diagonal parts.
GradedAlgebra m2_z2_grading();
/// The same grading seen as an action of (FZ_2)^*.
Scenario m2_dual_z2();

/// [x_1 + s x_1^g, x_2 + s x_2^g] over FZ_2 (labels e, g).
HPolynomial symmetrized_commutator(const ActionAlgebra& h, int s);
/// x_1^{h} x_2^{h} - x_2^{h} x_1^{h} for one basis label h.
HPolynomial labelled_commutator(const ActionAlgebra& h, std::size_t label);
/// x_1 x_2 - x_2 x_1.
HPolynomial commutator(const ActionAlgebra& h);

struct GalleryExample {
  std::string name;
  std::function<Scenario()> build;
  std::size_t expected;  // PI-exponent
};

/// The PI-exponent examples, smallest instances.
std::vector<GalleryExample> exponent_examples();

/// d(A) for the scenario, using its candidate decomposition when it has one.
std::size_t scenario_exponent(const Scenario& s);

/// "<name> d(A)" row against the expected value; errors become fail rows.
ReportRow exponent_row(const std::string& name, const Scenario& s, std::size_t expected);

/// Every example: exponent rows, codimension rows against (dim A)^(n+1) for
/// n <= max_n, and the Sweedler rows.
Report gallery_report(std::size_t max_n = 3, std::uint64_t cap = resource_cap());

}  // namespace pilab
