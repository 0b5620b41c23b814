#include "pilab/action.hpp"

#include <algorithm>
#include <map>

#include "pilab/errors.hpp"

namespace pilab {

ActionAlgebra ActionAlgebra::make(Algebra algebra, std::vector<std::string> labels) {
  if (!algebra.unit()) throw Error(ErrorKind::unit_violation, "action algebra needs a unit");
  if (labels.size() != algebra.dim()) {
    throw Error(ErrorKind::dimension_mismatch, "one label per action-algebra basis element");
  }
  return {std::move(algebra), std::move(labels)};
}

ActionAlgebra ActionAlgebra::trivial() {
  return make(Algebra::make(1, {Rational(1)}, Vector{1}), {"1"});
}

GroupData GroupData::make(std::vector<std::vector<std::size_t>> table,
                          std::vector<std::string> labels, std::vector<bool> in_g0) {
  const std::size_t n = table.size();
  if (n == 0) throw ValidationError("group", "empty group");
  if (labels.size() != n) throw ValidationError("group", "one label per element");
  for (const auto& row : table) {
    if (row.size() != n) throw ValidationError("group", "Cayley table is not square");
    for (auto x : row)
      if (x >= n) throw ValidationError("group", "table entry out of range");
  }
  GroupData g;
  g.table_ = std::move(table);
  g.labels_ = std::move(labels);
  auto& t = g.table_;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) throw ValidationError("group", "table is not associative");
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = t[e][a] == a && t[a][e] == a;
    if (ok) {
      g.identity_ = e;
      found = true;
    }
  }
  if (!found) throw ValidationError("group", "no identity element");
  g.inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (t[a][b] == g.identity_ && t[b][a] == g.identity_) g.inverse_[a] = b;
    if (g.inverse_[a] == n) throw ValidationError("group", "element without inverse: " + g.labels_[a]);
  }
  if (in_g0.empty()) in_g0.assign(n, true);
  if (in_g0.size() != n) throw ValidationError("group", "G_0 mask length");
  g.in_g0_ = std::move(in_g0);
  // G_0 must be a subgroup of index 1 or 2: the mask is a homomorphism to Z_2.
  const auto inside = static_cast<std::size_t>(std::count(g.in_g0_.begin(), g.in_g0_.end(), true));
  if (!g.in_g0_[g.identity_] || (inside != n && 2 * inside != n)) {
    throw ValidationError("group", "G_0 must be a subgroup of index at most 2");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (g.in_g0_[t[a][b]] != (g.in_g0_[a] == g.in_g0_[b])) {
        throw ValidationError("group", "G_0 must be a subgroup of index at most 2");
      }
  return g;
}

GroupData GroupData::from_permutations(const std::vector<std::vector<std::size_t>>& perms,
                                       std::vector<std::string> labels, std::vector<bool> in_g0) {
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;
  std::vector<std::vector<std::size_t>> table(perms.size(), std::vector<std::size_t>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b) {
      std::vector<std::size_t> c(perms[a].size());
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = perms[a][perms[b][i]];
      const auto it = index.find(c);
      if (it == index.end()) throw ValidationError("group", "permutations are not closed");
      table[a][b] = it->second;
    }
  return make(std::move(table), std::move(labels), std::move(in_g0));
}

GroupData GroupData::cyclic(std::size_t n) {
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(a == 0 ? "e" : (a == 1 ? "g" : "g^" + std::to_string(a)));
    for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return make(std::move(table), std::move(labels));
}

GroupData GroupData::symmetric3() {
  return from_permutations({{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}},
                           {"e", "(12)", "(13)", "(23)", "(123)", "(132)"});
}

GradedAlgebra GradedAlgebra::make(Algebra algebra, GroupData group, std::vector<std::size_t> degree) {
  const std::size_t d = algebra.dim();
  if (degree.size() != d) throw ValidationError("grading", "one degree per basis vector");
  for (auto g : degree)
    if (g >= group.order()) throw ValidationError("grading", "degree out of range");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const std::size_t g = group.mul(degree[i], degree[j]);
      for (std::size_t k = 0; k < d; ++k) {
        if (sgn(algebra.c(i, j, k)) != 0 && degree[k] != g) {
          throw ValidationError("grading", "e_" + std::to_string(i) + " e_" + std::to_string(j) +
                                               " leaves component " + group.labels()[g]);
        }
      }
    }
  return {std::move(algebra), std::move(group), std::move(degree)};
}

const char* to_string(ActionKind kind) noexcept {
  switch (kind) {
    case ActionKind::trivial: return "trivial";
    case ActionKind::group: return "group";
    case ActionKind::grading: return "grading";
    case ActionKind::hopf: return "hopf";
    case ActionKind::generalized: return "generalized";
  }
  return "?";
}

Action Action::make(ActionKind kind, ActionAlgebra h, std::vector<Matrix> ops,
                    std::optional<HopfData> hopf, std::optional<GroupData> group) {
  if (ops.size() != h.dim()) throw Error(ErrorKind::dimension_mismatch, "one operator per H-basis element");
  const std::size_t n = ops.empty() ? 0 : ops[0].rows();
  for (const auto& m : ops)
    if (m.rows() != n || m.cols() != n) throw Error(ErrorKind::dimension_mismatch, "operator shape");
  Action a;
  a.kind_ = kind;
  a.h_ = std::move(h);
  a.ops_ = std::move(ops);
  a.hopf_ = std::move(hopf);
  a.group_ = std::move(group);
  a.dim_a_ = n;
  if (!a.op_of(a.h_.unit()).is_identity()) {
    throw Error(ErrorKind::not_homomorphism, "rho(1) is not the identity");
  }
  const std::size_t m = a.h_.dim();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (a.ops_[i] * a.ops_[j] != a.op_of(a.h_.algebra.product(i, j))) {
        throw Error(ErrorKind::not_homomorphism,
                    "rho(" + a.h_.labels[i] + ") rho(" + a.h_.labels[j] + ") != rho(" +
                        a.h_.labels[i] + " " + a.h_.labels[j] + ")");
      }
    }
  return a;
}

Action Action::trivial(std::size_t dim_a) {
  return make(ActionKind::trivial, ActionAlgebra::trivial(), {Matrix::identity(dim_a)});
}

Matrix Action::op_of(const Vector& h) const {
  Matrix m(dim_a_, dim_a_);
  for (std::size_t i = 0; i < ops_.size(); ++i)
    if (sgn(h[i]) != 0) m += ops_[i].scaled(h[i]);
  return m;
}

std::optional<std::size_t> first_non_invariant(const Action& act, const Subspace& sub) {
  for (std::size_t i = 0; i < act.dim_h(); ++i)
    for (std::size_t k = 0; k < sub.dim(); ++k)
      if (!sub.contains(act.apply(i, sub.vector(k)))) return i;
  return std::nullopt;
}

Action restrict(const Action& act, const Subspace& sub) {
  if (auto bad = first_non_invariant(act, sub)) {
    throw Error(ErrorKind::not_invariant, "subspace not invariant under " + act.label(*bad));
  }
  std::vector<Matrix> ops;
  for (std::size_t i = 0; i < act.dim_h(); ++i) {
    Matrix m(sub.dim(), sub.dim());
    for (std::size_t k = 0; k < sub.dim(); ++k) m.set_column(k, sub.coordinates(act.apply(i, sub.vector(k))));
    ops.push_back(std::move(m));
  }
  return Action::make(act.kind(), act.h(), std::move(ops), act.hopf(), act.group());
}

}  // namespace pilab
