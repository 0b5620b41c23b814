#include "pilab/actions.hpp"

#include "pilab/errors.hpp"
#include "pilab/linalg.hpp"

namespace pilab {

namespace {

// Delta(x) as a d*d vector (index j*d+k).
Vector comul_of(const HopfData& h, const Vector& x) {
  const std::size_t d = h.dim();
  Vector out(d * d);
  for (std::size_t i = 0; i < d; ++i)
    if (sgn(x[i]) != 0) axpy(out, x[i], h.comul.row_vector(i));
  return out;
}

// Product in H (x) H of two d*d tensors.
Vector tensor_mul(const Algebra& a, const Vector& x, const Vector& y) {
  const std::size_t d = a.dim();
  Vector out(d * d);
  for (std::size_t p = 0; p < d * d; ++p) {
    if (sgn(x[p]) == 0) continue;
    for (std::size_t q = 0; q < d * d; ++q) {
      if (sgn(y[q]) == 0) continue;
      const Rational s = x[p] * y[q];
      const Vector l = a.product(p / d, q / d);
      const Vector r = a.product(p % d, q % d);
      for (std::size_t u = 0; u < d; ++u) {
        if (sgn(l[u]) == 0) continue;
        for (std::size_t v = 0; v < d; ++v)
          if (sgn(r[v]) != 0) out[u * d + v] += s * l[u] * r[v];
      }
    }
  }
  return out;
}

// (Delta (x) id) Delta(x), index (a*d+b)*d+c.
Vector comul2(const HopfData& h, const Vector& x) {
  const std::size_t d = h.dim();
  const Vector dx = comul_of(h, x);
  Vector out(d * d * d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) {
      if (sgn(dx[j * d + k]) == 0) continue;
      for (std::size_t ab = 0; ab < d * d; ++ab)
        if (sgn(h.comul(j, ab)) != 0) out[ab * d + k] += dx[j * d + k] * h.comul(j, ab);
    }
  return out;
}

Vector id_comul(const HopfData& h, std::size_t i) {
  const std::size_t d = h.dim();
  Vector out(d * d * d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) {
      const Rational& c = h.delta(i, j, k);
      if (sgn(c) == 0) continue;
      for (std::size_t ab = 0; ab < d * d; ++ab)
        if (sgn(h.comul(k, ab)) != 0) out[j * d * d + ab] += c * h.comul(k, ab);
    }
  return out;
}

bool is_bimodule_projection(const Algebra& a, const Subspace& i1, const Matrix& p) {
  const std::size_t n = a.dim();
  if (p.rows() != n || p.cols() != n) return false;
  if (p * p != p) return false;
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < n; ++j) cols.push_back(p.column(j));
  if (!(Subspace::span(n, cols) == i1)) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector lhs = p.apply(a.product(i, j));
      if (lhs != a.multiply(unit_vector(n, i), p.column(j))) return false;
      if (lhs != a.multiply(p.column(i), unit_vector(n, j))) return false;
    }
  return true;
}

void check_projection_inputs(const Action& act, const Algebra& a, const Subspace& i1, const Matrix& proj) {
  if (!is_bimodule_projection(a, i1, proj)) {
    throw Error(ErrorKind::not_bimodule_projection, "proj is not a bimodule projection onto i1");
  }
  if (auto bad = first_non_invariant(act, i1)) {
    throw Error(ErrorKind::not_invariant, "i1 not invariant under " + act.label(*bad));
  }
}

void check_projection_result(const Action& act, const Algebra& a, const Subspace& i1, const Matrix& p) {
  if (!is_bimodule_projection(a, i1, p)) {
    throw Error(ErrorKind::postcondition_failed, "averaged map is not a bimodule projection onto i1");
  }
  for (std::size_t h = 0; h < act.dim_h(); ++h)
    if (p * act.op(h) != act.op(h) * p) {
      throw Error(ErrorKind::postcondition_failed, "averaged projection does not commute with " + act.label(h));
    }
}

}  // namespace

CheckReport check_hopf(const HopfData& h) {
  const std::size_t d = h.dim();
  const Algebra& alg = h.h.algebra;
  const Vector& one = h.h.unit();
  CheckReport rep;
  auto first_bad = [&](auto&& pred) -> std::string {
    for (std::size_t i = 0; i < d; ++i)
      if (!pred(i)) return h.h.labels[i];
    return {};
  };

  std::string bad = first_bad([&](std::size_t i) { return comul2(h, unit_vector(d, i)) == id_comul(h, i); });
  rep.add("coassociativity", bad.empty(), bad.empty() ? "" : "fails at " + bad);

  bad = first_bad([&](std::size_t i) {
    Vector l(d), r(d);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        l[k] += h.counit[j] * h.delta(i, j, k);
        r[j] += h.counit[k] * h.delta(i, j, k);
      }
    return l == unit_vector(d, i) && r == unit_vector(d, i);
  });
  rep.add("counit", bad.empty(), bad.empty() ? "" : "fails at " + bad);

  std::string bialg;
  {
    Vector one_one(d * d);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) one_one[j * d + k] = one[j] * one[k];
    Rational eps_one = 0;
    for (std::size_t j = 0; j < d; ++j) eps_one += h.counit[j] * one[j];
    if (comul_of(h, one) != one_one || eps_one != 1) bialg = "unit";
    for (std::size_t i = 0; i < d && bialg.empty(); ++i)
      for (std::size_t j = 0; j < d && bialg.empty(); ++j) {
        const Vector prod = alg.product(i, j);
        Rational eps = 0;
        for (std::size_t k = 0; k < d; ++k) eps += h.counit[k] * prod[k];
        const Vector lhs = comul_of(h, prod);
        const Vector rhs = tensor_mul(alg, h.comul.row_vector(i), h.comul.row_vector(j));
        if (lhs != rhs || eps != h.counit[i] * h.counit[j]) bialg = h.h.labels[i] + " " + h.h.labels[j];
      }
  }
  rep.add("bialgebra", bialg.empty(), bialg.empty() ? "" : "fails at " + bialg);

  bad = first_bad([&](std::size_t i) {
    Vector l(d), r(d);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const Rational& c = h.delta(i, j, k);
        if (sgn(c) == 0) continue;
        axpy(l, c, alg.multiply(h.antipode.column(j), unit_vector(d, k)));
        axpy(r, c, alg.multiply(unit_vector(d, j), h.antipode.column(k)));
      }
    Vector want = one;
    for (auto& x : want) x *= h.counit[i];
    return l == want && r == want;
  });
  rep.add("antipode", bad.empty(), bad.empty() ? "" : "fails at " + bad);
  return rep;
}

HopfData group_algebra(const GroupData& g) {
  const std::size_t n = g.order();
  std::vector<Rational> mult(n * n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mult[(a * n + b) * n + g.mul(a, b)] = 1;
  HopfData h;
  h.h = ActionAlgebra::make(Algebra::make(n, std::move(mult), unit_vector(n, g.identity())), g.labels());
  h.comul = Matrix(n, n * n);
  h.counit = Vector(n, Rational(1));
  h.antipode = Matrix(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    h.comul(a, a * n + a) = 1;
    h.antipode(g.inverse(a), a) = 1;
  }
  return h;
}

HopfData dual_group_hopf(const GroupData& g) {
  const std::size_t n = g.order();
  std::vector<Rational> mult(n * n * n);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    mult[(a * n + a) * n + a] = 1;
    labels.push_back("h_" + g.labels()[a]);
  }
  HopfData h;
  h.h = ActionAlgebra::make(Algebra::make(n, std::move(mult), Vector(n, Rational(1))), std::move(labels));
  h.comul = Matrix(n, n * n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) h.comul(g.mul(u, v), u * n + v) = 1;
  h.counit = unit_vector(n, g.identity());
  h.antipode = Matrix(n, n);
  for (std::size_t a = 0; a < n; ++a) h.antipode(g.inverse(a), a) = 1;
  return h;
}

HopfData dual_hopf(const HopfData& h) {
  const std::size_t d = h.dim();
  const Algebra& alg = h.h.algebra;
  std::vector<Rational> mult(d * d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t x = 0; x < d; ++x) mult[(a * d + b) * d + x] = h.delta(x, a, b);
  std::vector<std::string> labels;
  for (const auto& l : h.h.labels) labels.push_back("g_" + l);
  HopfData out;
  out.h = ActionAlgebra::make(Algebra::make(d, std::move(mult), h.counit), std::move(labels));
  out.comul = Matrix(d, d * d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) out.comul(x, a * d + b) = alg.c(a, b, x);
  out.counit = h.h.unit();
  out.antipode = h.antipode.transposed();
  return out;
}

Action hopf_action(const HopfData& h, const Algebra& a, std::vector<Matrix> ops, ActionKind kind,
                   std::optional<GroupData> group) {
  Action act = Action::make(kind, h.h, std::move(ops), h, std::move(group));
  if (act.dim_a() != a.dim()) throw Error(ErrorKind::dimension_mismatch, "operators do not match the algebra");
  if (!check_module_algebra(h, a, act)) throw ValidationError("module-algebra", "h(ab) != (h_(1) a)(h_(2) b)");
  return act;
}

Action dual_regular_action(const HopfData& h, const HopfData& dual) {
  const std::size_t d = h.dim();
  std::vector<Matrix> ops(d, Matrix(d, d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) ops[i](k, j) = h.delta(j, k, i);
  return hopf_action(dual, h.h.algebra, std::move(ops));
}

bool check_module_algebra(const HopfData& h, const Algebra& a, const Action& act) {
  const std::size_t n = a.dim();
  const std::size_t d = h.dim();
  std::vector<std::vector<Vector>> img(d, std::vector<Vector>(n));
  for (std::size_t u = 0; u < d; ++u)
    for (std::size_t i = 0; i < n; ++i) img[u][i] = act.apply(u, unit_vector(n, i));
  for (std::size_t g = 0; g < d; ++g)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vector rhs(n);
        for (std::size_t u = 0; u < d; ++u)
          for (std::size_t v = 0; v < d; ++v) {
            const Rational& c = h.delta(g, u, v);
            if (sgn(c) != 0) axpy(rhs, c, a.multiply(img[u][i], img[v][j]));
          }
        if (act.apply(g, a.product(i, j)) != rhs) return false;
      }
  return true;
}

GeneralizedReport check_generalized_action(const ActionAlgebra& h, const Algebra& a, const Action& act) {
  const std::size_t n = a.dim();
  const std::size_t m = h.dim();
  std::vector<std::vector<Vector>> img(m, std::vector<Vector>(n));
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t i = 0; i < n; ++i) img[u][i] = act.apply(u, unit_vector(n, i));
  // Columns: c_uv then d_uv; rows: (i, j, k).
  Matrix sys(n * n * n, 2 * m * m);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const Vector s = a.multiply(img[u][i], img[v][j]);
          const Vector f = a.multiply(img[v][j], img[u][i]);
          for (std::size_t k = 0; k < n; ++k) {
            sys((i * n + j) * n + k, u * m + v) = s[k];
            sys((i * n + j) * n + k, m * m + u * m + v) = f[k];
          }
        }
  GeneralizedReport rep;
  for (std::size_t g = 0; g < m; ++g) {
    Vector rhs(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Vector r = act.apply(g, a.product(i, j));
        for (std::size_t k = 0; k < n; ++k) rhs[(i * n + j) * n + k] = r[k];
      }
    const auto x = solve(sys, rhs);
    if (!x) {
      rep.rules.emplace_back();
      continue;
    }
    ProductRule rule;
    rule.straight.assign(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(m * m));
    rule.flipped.assign(x->begin() + static_cast<std::ptrdiff_t>(m * m), x->end());
    rep.rules.push_back(std::move(rule));
  }
  return rep;
}

Action gaction_to_generalized(const Algebra& a, const GroupData& g,
                              const std::vector<std::pair<Matrix, bool>>& assignment) {
  const std::size_t n = a.dim();
  if (assignment.size() != g.order()) throw Error(ErrorKind::dimension_mismatch, "one operator per group element");
  std::vector<Matrix> ops;
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto& [m, anti] = assignment[x];
    if (m.rows() != n || m.cols() != n) throw Error(ErrorKind::dimension_mismatch, "operator shape");
    bool is_auto = true, is_anti = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Vector lhs = m.apply(a.product(i, j));
        const Vector mi = m.column(i), mj = m.column(j);
        if (is_auto && lhs != a.multiply(mi, mj)) is_auto = false;
        if (is_anti && lhs != a.multiply(mj, mi)) is_anti = false;
      }
    const bool declared_ok = anti ? is_anti : is_auto;
    if (anti == g.in_g0(x) || !declared_ok) {
      if (!is_auto && !is_anti) {
        throw Error(ErrorKind::not_homomorphism,
                    g.labels()[x] + " is neither an automorphism nor an anti-automorphism");
      }
      throw Error(ErrorKind::wrong_morphism_type,
                  "morphism type of " + g.labels()[x] + " contradicts its G_0 membership");
    }
    ops.push_back(m);
  }
  const HopfData fg = group_algebra(g);
  bool all_auto = true;
  for (std::size_t x = 0; x < g.order(); ++x) all_auto = all_auto && g.in_g0(x);
  Action act = Action::make(ActionKind::group, fg.h, std::move(ops),
                            all_auto ? std::optional<HopfData>(fg) : std::nullopt, g);
  if (!check_generalized_action(act.h(), a, act).pass()) {
    throw Error(ErrorKind::postcondition_failed, "group action failed the generalized-action check");
  }
  return act;
}

Action duality_transform(const GradedAlgebra& x) {
  const std::size_t n = x.algebra.dim();
  const std::size_t m = x.group.order();
  std::vector<Matrix> ops(m, Matrix(n, n));
  for (std::size_t i = 0; i < n; ++i) ops[x.degree[i]](i, i) = 1;
  return hopf_action(dual_group_hopf(x.group), x.algebra, std::move(ops), ActionKind::grading, x.group);
}

GradedAlgebra action_to_grading(const Algebra& a, const Action& act) {
  if (!act.group()) throw Error(ErrorKind::not_diagonalizable, "action carries no group");
  const GroupData& g = *act.group();
  const std::size_t n = a.dim();
  if (act.dim_h() != g.order()) throw Error(ErrorKind::not_diagonalizable, "one operator per group element");
  std::vector<std::size_t> degree(n, g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    const Matrix& p = act.op(x);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        const Rational& v = p(r, c);
        if (r != c && sgn(v) != 0) throw Error(ErrorKind::not_diagonalizable, "operator is not diagonal");
        if (r == c && v != 0 && v != 1) throw Error(ErrorKind::not_diagonalizable, "operator is not a projection");
        if (r == c && v == 1) {
          if (degree[r] != g.order()) throw Error(ErrorKind::not_diagonalizable, "projections are not orthogonal");
          degree[r] = x;
        }
      }
  }
  for (auto d : degree)
    if (d == g.order()) throw Error(ErrorKind::not_diagonalizable, "projections do not sum to the identity");
  return GradedAlgebra::make(a, g, std::move(degree));
}

IntegralResult left_integral(const HopfData& h) {
  const std::size_t d = h.dim();
  const Algebra& alg = h.h.algebra;
  Matrix sys(d * d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const Matrix l = alg.left_basis(i) - Matrix::identity(d).scaled(h.counit[i]);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) sys(i * d + r, c) = l(r, c);
  }
  const Matrix ker = nullspace(sys);
  if (ker.rows() == 0) throw Error(ErrorKind::no_integral, "only the zero left integral");
  IntegralResult res;
  res.t = ker.row_vector(0);  // echelon row: leading coordinate is 1
  Rational eps = 0;
  for (std::size_t i = 0; i < d; ++i) eps += h.counit[i] * res.t[i];
  res.semisimple = sgn(eps) != 0;
  if (res.semisimple) {
    for (auto& x : res.t) x /= eps;
    const Vector t3 = comul2(h, res.t);
    Vector lhs(d * d);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        for (std::size_t c = 0; c < d; ++c) {
          const Rational& coef = t3[(a * d + b) * d + c];
          if (sgn(coef) == 0) continue;
          const Vector prod = alg.multiply(unit_vector(d, a), h.antipode.column(c));
          for (std::size_t x = 0; x < d; ++x)
            if (sgn(prod[x]) != 0) lhs[x * d + b] += coef * prod[x];
        }
    Vector rhs(d * d);
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t b = 0; b < d; ++b) rhs[x * d + b] = h.h.unit()[x] * res.t[b];
    res.tensor_identity = lhs == rhs;
  }
  return res;
}

Matrix maschke_projection(const HopfData& h, const Action& act, const Algebra& a, const Subspace& i1,
                          const Matrix& proj) {
  const IntegralResult in = left_integral(h);
  if (!in.semisimple) throw Error(ErrorKind::not_semisimple, "integral has eps(t) = 0");
  check_projection_inputs(act, a, i1, proj);
  const std::size_t d = h.dim();
  const Vector dt = comul_of(h, in.t);
  Matrix out(a.dim(), a.dim());
  for (std::size_t u = 0; u < d; ++u)
    for (std::size_t v = 0; v < d; ++v) {
      if (sgn(dt[u * d + v]) == 0) continue;
      out += (act.op(u) * proj * act.op_of(h.antipode.column(v))).scaled(dt[u * d + v]);
    }
  check_projection_result(act, a, i1, out);
  return out;
}

Matrix maschke_projection_group(const GroupData& g, const Action& act, const Algebra& a, const Subspace& i1,
                                const Matrix& proj) {
  check_projection_inputs(act, a, i1, proj);
  Matrix out(a.dim(), a.dim());
  for (std::size_t x = 0; x < g.order(); ++x) out += act.op(x) * proj * act.op(g.inverse(x));
  out = out.scaled(Rational(1, static_cast<unsigned long>(g.order())));
  check_projection_result(act, a, i1, out);
  return out;
}

HopfData sweedler_hopf() {
  // Basis 1, c, b, cb.
  constexpr std::size_t d = 4;
  std::vector<Rational> mult(d * d * d);
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, int v) { mult[(i * d + j) * d + k] = v; };
  for (std::size_t x = 0; x < d; ++x) {
    set(0, x, x, 1);
    set(x, 0, x, 1);
  }
  set(1, 1, 0, 1);   // c c = 1
  set(1, 2, 3, 1);   // c b = cb
  set(1, 3, 2, 1);   // c cb = b
  set(2, 1, 3, -1);  // b c = -cb
  set(3, 1, 2, -1);  // cb c = -b
  HopfData h;
  h.h = ActionAlgebra::make(Algebra::make(d, std::move(mult), unit_vector(d, 0)), {"1", "c", "b", "cb"});
  h.comul = Matrix(d, d * d);
  h.comul(0, 0 * d + 0) = 1;
  h.comul(1, 1 * d + 1) = 1;
  h.comul(2, 1 * d + 2) = 1;  // c (x) b
  h.comul(2, 2 * d + 0) = 1;  // b (x) 1
  h.comul(3, 0 * d + 3) = 1;  // 1 (x) cb
  h.comul(3, 3 * d + 1) = 1;  // cb (x) c
  h.counit = Vector{1, 1, 0, 0};
  h.antipode = Matrix(d, d);
  h.antipode(0, 0) = 1;
  h.antipode(1, 1) = 1;
  h.antipode(3, 2) = -1;  // S(b) = -cb
  h.antipode(2, 3) = 1;   // S(cb) = b
  return h;
}

SweedlerScenario sweedler_scenario() {
  SweedlerScenario s;
  s.h = sweedler_hopf();
  s.dual = dual_hopf(s.h);
  s.a = s.h.h.algebra;
  s.act = dual_regular_action(s.h, s.dual);
  return s;
}

}  // namespace pilab
