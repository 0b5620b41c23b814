#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pilab/algebra.hpp"

namespace pilab {

/// Unital associative algebra H with named basis elements.
struct ActionAlgebra {
  Algebra algebra;
  std::vector<std::string> labels;

  static ActionAlgebra make(Algebra algebra, std::vector<std::string> labels);
  /// The one-dimensional algebra F.
  static ActionAlgebra trivial();

  std::size_t dim() const noexcept { return algebra.dim(); }
  const Vector& unit() const { return *algebra.unit(); }
};

/// Hopf algebra on a fixed basis. comul row i holds Delta(e_i) with column
/// j*dim+k the coefficient of e_j (x) e_k; antipode column i is S(e_i).
struct HopfData {
  ActionAlgebra h;
  Matrix comul;
  Vector counit;
  Matrix antipode;

  std::size_t dim() const noexcept { return h.dim(); }
  const Rational& delta(std::size_t i, std::size_t j, std::size_t k) const {
    return comul(i, j * dim() + k);
  }
};

/// Finite group given by its Cayley table, with the subgroup G_0 (elements
/// acting by automorphisms) of index at most two.
class GroupData {
 public:
  GroupData() = default;
  static GroupData make(std::vector<std::vector<std::size_t>> table,
                        std::vector<std::string> labels, std::vector<bool> in_g0 = {});
  /// Group of permutations (images of 0..m-1) closed under composition,
  /// (p q)(i) = p(q(i)).
  static GroupData from_permutations(const std::vector<std::vector<std::size_t>>& perms,
                                     std::vector<std::string> labels,
                                     std::vector<bool> in_g0 = {});
  static GroupData cyclic(std::size_t n);
  /// S_3 on e, (12), (13), (23), (123), (132).
  static GroupData symmetric3();

  std::size_t order() const noexcept { return table_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t identity() const noexcept { return identity_; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  bool in_g0(std::size_t a) const { return in_g0_[a]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<std::vector<std::size_t>>& table() const noexcept { return table_; }
  const std::vector<bool>& g0() const noexcept { return in_g0_; }

  friend bool operator==(const GroupData& a, const GroupData& b) {
    return a.table_ == b.table_ && a.labels_ == b.labels_ && a.in_g0_ == b.in_g0_;
  }

 private:
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::string> labels_;
  std::vector<bool> in_g0_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
};

/// Grading by a finite group with one degree per basis vector.
struct GradedAlgebra {
  Algebra algebra;
  GroupData group;
  std::vector<std::size_t> degree;

  /// Checks A^(g) A^(h) inside A^(gh) on basis pairs.
  static GradedAlgebra make(Algebra algebra, GroupData group, std::vector<std::size_t> degree);
};

enum class ActionKind { trivial, group, grading, hopf, generalized };

const char* to_string(ActionKind kind) noexcept;

/// Unital homomorphism rho: H -> End(A), one matrix per H-basis element.
class Action {
 public:
  Action() = default;

  /// Validates dimensions, rho(1) = id and rho(a)rho(b) = rho(ab) on basis pairs.
  static Action make(ActionKind kind, ActionAlgebra h, std::vector<Matrix> ops,
                     std::optional<HopfData> hopf = std::nullopt,
                     std::optional<GroupData> group = std::nullopt);
  /// Identity action of F on an algebra of dimension dim_a.
  static Action trivial(std::size_t dim_a);

  ActionKind kind() const noexcept { return kind_; }
  const ActionAlgebra& h() const noexcept { return h_; }
  std::size_t dim_h() const noexcept { return h_.dim(); }
  std::size_t dim_a() const noexcept { return dim_a_; }
  const std::vector<Matrix>& ops() const noexcept { return ops_; }
  const Matrix& op(std::size_t i) const { return ops_[i]; }
  const std::string& label(std::size_t i) const { return h_.labels[i]; }
  const std::optional<HopfData>& hopf() const noexcept { return hopf_; }
  const std::optional<GroupData>& group() const noexcept { return group_; }

  Vector apply(std::size_t i, const Vector& x) const { return ops_[i].apply(x); }
  /// rho of an arbitrary element of H.
  Matrix op_of(const Vector& h) const;

 private:
  ActionKind kind_ = ActionKind::trivial;
  ActionAlgebra h_;
  std::vector<Matrix> ops_;
  std::optional<HopfData> hopf_;
  std::optional<GroupData> group_;
  std::size_t dim_a_ = 0;
};

/// Index of the first operator not preserving `sub`, if any.
std::optional<std::size_t> first_non_invariant(const Action& act, const Subspace& sub);

/// The action restricted to an invariant subspace, in echelon-basis
/// coordinates. Throws NotInvariant.
Action restrict(const Action& act, const Subspace& sub);

}  // namespace pilab
