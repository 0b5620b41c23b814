#include "pilab/alternating.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "pilab/actions.hpp"
#include "pilab/errors.hpp"
#include "pilab/evaluator.hpp"
#include "pilab/exactalg.hpp"
#include "pilab/identities.hpp"
#include "pilab/linalg.hpp"

namespace pilab {

namespace {

struct Letter {
  std::size_t var;
  std::size_t label;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;
using Formal = std::map<Word, Rational>;

void add_to(Formal& f, const Word& w, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, fresh] = f.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) f.erase(it);
  }
}

void add_to(Formal& f, const Formal& g, const Rational& c) {
  for (const auto& [w, v] : g) add_to(f, w, v * c);
}

Formal concat(const Formal& x, const Formal& y) {
  Formal out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) {
      Word w = a;
      w.insert(w.end(), b.begin(), b.end());
      add_to(out, w, ca * cb);
    }
  return out;
}

// Rewrites h(w_1 ... w_m) with the product rules h(ab) = sum c (u a)(v b) + d (v b)(u a).
class Expander {
 public:
  Expander(const ActionAlgebra& h, std::vector<ProductRule> rules) : h_(h), rules_(std::move(rules)) {}

  // Sum of the unit label over the given variables, in order.
  Formal unit_word(const std::vector<std::size_t>& vars) const {
    Formal f{{Word{}, Rational(1)}};
    for (auto v : vars) {
      Formal letter;
      for (std::size_t w = 0; w < h_.dim(); ++w) add_to(letter, Word{{v, w}}, h_.unit()[w]);
      f = concat(f, letter);
    }
    return f;
  }

  Formal apply(std::size_t g, const Word& w) {
    const auto key = std::make_pair(g, w);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Formal out;
    const std::size_t m = h_.dim();
    if (w.size() == 1) {
      const Vector gl = h_.algebra.product(g, w[0].label);
      for (std::size_t x = 0; x < m; ++x) add_to(out, Word{{w[0].var, x}}, gl[x]);
    } else {
      const Word head(w.begin(), w.begin() + 1);
      const Word tail(w.begin() + 1, w.end());
      const ProductRule& r = rules_[g];
      for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = 0; v < m; ++v) {
          const Rational& c = r.straight[u * m + v];
          const Rational& d = r.flipped[u * m + v];
          if (sgn(c) == 0 && sgn(d) == 0) continue;
          const Formal a = apply(u, head);
          const Formal b = apply(v, tail);
          if (sgn(c) != 0) add_to(out, concat(a, b), c);
          if (sgn(d) != 0) add_to(out, concat(b, a), d);
        }
    }
    memo_.emplace(key, out);
    return out;
  }

  Formal apply(std::size_t g, const Formal& f) {
    Formal out;
    for (const auto& [w, c] : f) add_to(out, apply(g, w), c);
    return out;
  }

 private:
  const ActionAlgebra& h_;
  std::vector<ProductRule> rules_;
  std::map<std::pair<std::size_t, Word>, Formal> memo_;
};

Formal alternate_formal(const Formal& f, const std::vector<std::size_t>& set) {
  std::vector<std::size_t> order(set.size());
  std::iota(order.begin(), order.end(), 0);
  Formal out;
  do {
    int sign = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t j = i + 1; j < order.size(); ++j)
        if (order[i] > order[j]) sign = -sign;
    std::map<std::size_t, std::size_t> rename;
    for (std::size_t i = 0; i < set.size(); ++i) rename[set[i]] = set[order[i]];
    for (const auto& [w, c] : f) {
      Word p = w;
      for (auto& l : p)
        if (auto it = rename.find(l.var); it != rename.end()) l.var = it->second;
      add_to(out, p, sign * c);
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

HPolynomial to_polynomial(const Formal& f, std::size_t n, std::size_t dim_h) {
  HPolynomial p(n, dim_h);
  for (const auto& [w, c] : f) {
    Monomial m;
    for (const auto& l : w) {
      m.perm.push_back(l.var);
      m.labels.push_back(l.label);
    }
    p.add_term(m, c);
  }
  return p;
}

std::vector<std::vector<std::size_t>> permutations_of(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int sign_of(const std::vector<std::size_t>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

// End(B_0) basis phi(a_i), then phi(a_i) psi(a_k) rho(h) chosen greedily.
struct EndBasis {
  struct Extra {
    std::size_t i, k, h;
    Matrix op;
  };
  std::vector<Extra> extra;
};

EndBasis end_basis(const Algebra& b0, const Action& act) {
  const std::size_t ell = b0.dim();
  RowSpaceBuilder span(ell * ell);
  for (std::size_t i = 0; i < ell; ++i) span.add(b0.left_basis(i).flattened());
  EndBasis out;
  for (std::size_t i = 0; i < ell && span.rank() < ell * ell; ++i)
    for (std::size_t k = 0; k < ell && span.rank() < ell * ell; ++k)
      for (std::size_t h = 0; h < act.dim_h() && span.rank() < ell * ell; ++h) {
        Matrix op = b0.left_basis(i) * b0.right_basis(k) * act.op(h);
        if (span.add(op.flattened())) out.extra.push_back({i, k, h, std::move(op)});
      }
  if (span.rank() != ell * ell) {
    throw Error(ErrorKind::not_h_simple, "phi(B) psi(B) rho(H) does not span End(B)");
  }
  return out;
}

}  // namespace

std::size_t operator_span_dim(const Algebra& b0, const Action& act) {
  const std::size_t ell = b0.dim();
  RowSpaceBuilder span(ell * ell);
  for (std::size_t i = 0; i < ell; ++i)
    for (std::size_t k = 0; k < ell; ++k)
      for (std::size_t h = 0; h < act.dim_h(); ++h)
        span.add((b0.left_basis(i) * b0.right_basis(k) * act.op(h)).flattened());
  return span.rank();
}

AlternatingPolynomial build_alternating(const Algebra& b0, const Action& act, std::size_t k) {
  const std::size_t ell = b0.dim();
  if (k == 0) throw Error(ErrorKind::validation_error, "need k >= 1");
  if (ell > 2) {
    throw Error(ErrorKind::feasibility_limit, "alternating construction needs dim B_0 <= 2");
  }
  if (act.dim_a() != ell) throw Error(ErrorKind::dimension_mismatch, "action does not match B_0");
  if (!b0.unit() && !b0.find_unit()) throw Error(ErrorKind::not_semisimple, "B_0 has no unit");
  if (!radical(b0).j.is_zero()) throw Error(ErrorKind::not_semisimple, "B_0 has a nonzero radical");
  if (!is_h_simple(b0, act).simple) throw Error(ErrorKind::not_h_simple, "B_0 is not split H-simple");

  const EndBasis eb = end_basis(b0, act);
  const std::size_t s = eb.extra.size();
  const std::size_t T = 4 * s;
  const std::size_t base = 2 * k * ell;
  const std::size_t n = base + T + 1;
  auto xvar = [&](std::size_t set, std::size_t i) { return set * ell + i; };
  const std::size_t zvar = base + T;

  const GeneralizedReport gr = check_generalized_action(act.h(), b0, act);
  if (!gr.pass()) throw ValidationError("generalized-action", "no product rule on B_0");
  std::vector<ProductRule> rules;
  for (const auto& r : gr.rules) rules.push_back(*r);
  Expander ex(act.h(), std::move(rules));

  // Regev's polynomial in End(B_0): x_i -> phi(x_i), x_{ell+j} -> phi(z_j) psi(u_j) rho(h_j),
  // similarly for y with v_j, w_j; applied to z and expanded.
  const HPolynomial reg = regev(ell);
  const std::size_t m = ell * ell;
  Matrix op_sum(ell, ell);
  std::vector<Matrix> ops(m);
  for (std::size_t i = 0; i < ell; ++i) ops[i] = b0.left_basis(i);
  for (std::size_t j = 0; j < s; ++j) ops[ell + j] = eb.extra[j].op;

  Formal tilde;
  for (const auto& [mono, coef] : reg.terms()) {
    Formal p = ex.unit_word({zvar});
    Matrix prod = Matrix::identity(ell);
    for (std::size_t pos = mono.perm.size(); pos-- > 0;) {
      const std::size_t v = mono.perm[pos];
      const bool is_y = v >= m;
      const std::size_t idx = is_y ? v - m : v;
      prod = ops[idx] * prod;
      if (idx < ell) {
        p = concat(ex.unit_word({xvar(is_y ? 1 : 0, idx)}), p);
      } else {
        const std::size_t j = idx - ell;
        const std::size_t left = base + (is_y ? 2 * s : 0) + j;  // z_j or v_j
        const std::size_t right = base + (is_y ? 3 * s : s) + j; // u_j or w_j
        p = concat(concat(ex.unit_word({left}), ex.apply(eb.extra[j].h, p)), ex.unit_word({right}));
      }
    }
    add_to(tilde, p, coef);
    op_sum += prod.scaled(coef);
  }
  // The operator is mu * id on B_0.
  const Rational mu = op_sum(0, 0);
  if (sgn(mu) == 0 || op_sum != Matrix::identity(ell).scaled(mu)) {
    throw Error(ErrorKind::postcondition_failed, "central polynomial did not give a nonzero scalar operator");
  }
  Formal f;
  add_to(f, tilde, 1 / mu);

  // Gluing: x_i -> u_j v_j x_i summed over i, for j = 1..ell, then alternate
  // u and v and divide by ell! det(tr(phi(a_i) phi(a_j))).
  if (k > 1) {
    Matrix gram(ell, ell);
    for (std::size_t i = 0; i < ell; ++i)
      for (std::size_t j = 0; j < ell; ++j) gram(i, j) = (b0.left_basis(i) * b0.left_basis(j)).trace();
    Rational norm = determinant(gram);
    for (std::size_t i = 2; i <= ell; ++i) norm *= static_cast<unsigned long>(i);
    for (std::size_t round = 1; round < k; ++round) {
      const std::size_t uset = 2 * round, vset = 2 * round + 1;
      Formal cur = f;
      for (std::size_t j = 0; j < ell; ++j) {
        Formal next;
        for (const auto& [w, c] : cur) {
          for (std::size_t pos = 0; pos < w.size(); ++pos) {
            if (w[pos].var >= ell) continue;  // only the first set x_1..x_ell
            const Formal inner = ex.unit_word({xvar(uset, j), xvar(vset, j), w[pos].var});
            const Formal sub = ex.apply(w[pos].label, inner);
            const Formal pre{{Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos)), Rational(1)}};
            const Formal post{{Word(w.begin() + static_cast<std::ptrdiff_t>(pos) + 1, w.end()), Rational(1)}};
            add_to(next, concat(concat(pre, sub), post), c);
          }
        }
        cur = std::move(next);
      }
      std::vector<std::size_t> us, vs;
      for (std::size_t i = 0; i < ell; ++i) {
        us.push_back(xvar(uset, i));
        vs.push_back(xvar(vset, i));
      }
      cur = alternate_formal(alternate_formal(cur, us), vs);
      f.clear();
      add_to(f, cur, 1 / norm);
    }
  }

  AlternatingPolynomial out;
  out.f = to_polynomial(f, n, act.dim_h());
  out.mu = mu;
  for (std::size_t set = 0; set < 2 * k; ++set) {
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < ell; ++i) vars.push_back(xvar(set, i));
    out.sets.push_back(std::move(vars));
  }
  for (std::size_t t = 0; t < T; ++t) out.fixed.push_back(base + t);
  out.free = zvar;
  out.witness.assign(n, Vector(ell));
  for (std::size_t set = 0; set < 2 * k; ++set)
    for (std::size_t i = 0; i < ell; ++i) out.witness[xvar(set, i)] = unit_vector(ell, i);
  for (std::size_t j = 0; j < s; ++j) {
    out.witness[base + j] = unit_vector(ell, eb.extra[j].i);
    out.witness[base + s + j] = unit_vector(ell, eb.extra[j].k);
    out.witness[base + 2 * s + j] = unit_vector(ell, eb.extra[j].i);
    out.witness[base + 3 * s + j] = unit_vector(ell, eb.extra[j].k);
  }
  return out;
}

AlternatingPolynomial sweedler_alternating(std::size_t k, std::size_t n) {
  if (n < 4 * k) throw Error(ErrorKind::validation_error, "need n >= 4k");
  const SweedlerScenario sw = sweedler_scenario();
  const ActionAlgebra& h = sw.dual.h;
  const auto perms = permutations_of(4);
  Formal f{{Word{}, Rational(1)}};
  for (std::size_t j = 0; j < k; ++j) {
    Formal block;
    for (const auto& p : perms) {
      Word w;
      for (std::size_t pos = 0; pos < 4; ++pos) w.push_back({4 * j + p[pos], pos});
      add_to(block, w, sign_of(p));
    }
    f = concat(f, block);
  }
  Expander ex(h, {});
  for (std::size_t v = 4 * k; v < n; ++v) f = concat(f, ex.unit_word({v}));

  AlternatingPolynomial out;
  out.f = to_polynomial(f, n, h.dim());
  for (std::size_t j = 0; j < k; ++j) out.sets.push_back({4 * j, 4 * j + 1, 4 * j + 2, 4 * j + 3});
  for (std::size_t v = 4 * k; v < n; ++v) out.fixed.push_back(v);
  out.witness.assign(n, unit_vector(4, 0));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < 4; ++i) out.witness[4 * j + i] = unit_vector(4, i);
  return out;
}

CheckReport verify_alternating(const AlternatingPolynomial& p, const Algebra& a, const Action& act) {
  CheckReport rep;
  const std::size_t n = p.f.n();
  for (std::size_t si = 0; si < p.sets.size(); ++si) {
    const auto& set = p.sets[si];
    bool ok = true;
    for (std::size_t i = 0; i < set.size() && ok; ++i)
      for (std::size_t j = i + 1; j < set.size() && ok; ++j) {
        std::vector<std::size_t> tau(n);
        std::iota(tau.begin(), tau.end(), 0);
        std::swap(tau[set[i]], tau[set[j]]);
        ok = p.f.permuted(tau) == p.f.scaled(-1);
      }
    rep.add("alternating in set " + std::to_string(si + 1), ok);
  }
  const Evaluator eval(p.f, a, act);
  if (p.free) {
    bool ok = true;
    std::string detail;
    for (std::size_t b = 0; b < a.dim() && ok; ++b) {
      auto args = p.witness;
      args[*p.free] = unit_vector(a.dim(), b);
      const Vector v = eval(args);
      ok = v == unit_vector(a.dim(), b);
      if (!ok) detail = "basis element " + std::to_string(b + 1) + " maps to " + to_string(v);
    }
    rep.add("witness acts as identity", ok, detail);
  } else {
    const Vector v = eval(p.witness);
    const Vector one = a.unit() ? *a.unit() : Vector(a.dim());
    rep.add("witness value is 1", v == one, to_string(v));
  }
  return rep;
}

}  // namespace pilab
