#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pilab/action.hpp"
#include "pilab/check.hpp"

namespace pilab {

/// Coassociativity, counit, bialgebra and antipode laws on basis elements.
CheckReport check_hopf(const HopfData& h);

/// FG with Delta g = g (x) g, S g = g^{-1}, eps(g) = 1.
HopfData group_algebra(const GroupData& g);

/// (FG)* on the dual basis h_g.
HopfData dual_group_hopf(const GroupData& g);

/// Dual Hopf algebra on the dual basis, labelled "g_" + label.
HopfData dual_hopf(const HopfData& h);

/// Action of H* on H given by g.x = g(x_(2)) x_(1).
Action dual_regular_action(const HopfData& h, const HopfData& dual);

/// Wraps operators as a Hopf action; throws ValidationError unless the
/// module-algebra law holds.
Action hopf_action(const HopfData& h, const Algebra& a, std::vector<Matrix> ops,
                   ActionKind kind = ActionKind::hopf,
                   std::optional<GroupData> group = std::nullopt);

/// h(ab) = (h_(1) a)(h_(2) b) for all basis triples.
bool check_module_algebra(const HopfData& h, const Algebra& a, const Action& act);

/// gamma(ab) = sum c_uv (u a)(v b) + sum d_uv (v b)(u a), coefficients
/// indexed u*dim(H)+v.
struct ProductRule {
  Vector straight;
  Vector flipped;
};

struct GeneralizedReport {
  std::vector<std::optional<ProductRule>> rules;  // one per H-basis element

  bool pass() const {
    for (const auto& r : rules)
      if (!r) return false;
    return true;
  }
};

GeneralizedReport check_generalized_action(const ActionAlgebra& h, const Algebra& a, const Action& act);

/// Action of FG from one matrix per group element and an anti-automorphism
/// flag; checks the homomorphism property and the G_0 bookkeeping.
Action gaction_to_generalized(const Algebra& a, const GroupData& g,
                              const std::vector<std::pair<Matrix, bool>>& assignment);

/// h_g acts as the projection onto A^(g).
Action duality_transform(const GradedAlgebra& x);

/// Recovers the grading from an action of (FG)*; throws NotDiagonalizable
/// unless the operators are a complete family of coordinate projections.
GradedAlgebra action_to_grading(const Algebra& a, const Action& act);

struct IntegralResult {
  Vector t;
  bool semisimple = false;             // eps(t) != 0
  std::optional<bool> tensor_identity;  // t_(1) S(t_(3)) (x) t_(2) = 1 (x) t, when eps(t) = 1
};

IntegralResult left_integral(const HopfData& h);

/// Hopf-averaged projection t_(1) pi(S(t_(2)) x); requires eps(t) != 0.
Matrix maschke_projection(const HopfData& h, const Action& act, const Algebra& a,
                          const Subspace& i1, const Matrix& proj);

/// Group-averaged projection (1/|G|) sum_g g pi g^{-1}.
Matrix maschke_projection_group(const GroupData& g, const Action& act, const Algebra& a,
                                const Subspace& i1, const Matrix& proj);

/// Sweedler's Hopf algebra on (1, c, b, cb).
HopfData sweedler_hopf();

struct SweedlerScenario {
  HopfData h;
  HopfData dual;
  Algebra a;
  Action act;
};

SweedlerScenario sweedler_scenario();

}  // namespace pilab
