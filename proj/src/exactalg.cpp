#include "pilab/exactalg.hpp"

#include <algorithm>
#include <deque>

#include "pilab/errors.hpp"
#include "pilab/linalg.hpp"

namespace pilab {

namespace {

Subspace trace_form_kernel(const Algebra& a) {
  const std::size_t n = a.dim();
  Matrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      gram(i, j) = (a.left_basis(i) * a.left_basis(j)).trace();
      gram(j, i) = gram(i, j);
    }
  return Subspace::from_echelon(rref(nullspace(gram)));
}

bool is_two_sided_ideal(const Algebra& a, const Subspace& s) {
  const Subspace all = Subspace::full(a.dim());
  return s.contains(subspace_product(a, all, s)) && s.contains(subspace_product(a, s, all));
}

// Polynomials as coefficient vectors, lowest degree first.
void trim(Vector& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Rational eval(const Vector& p, const Rational& x) {
  Rational v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

Vector remainder(Vector a, const Vector& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

std::vector<Vector> sturm_sequence(const Vector& p) {
  std::vector<Vector> seq{p};
  Vector d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  while (!d.empty()) {
    seq.push_back(d);
    Vector r = remainder(seq[seq.size() - 2], seq.back());
    for (auto& c : r) c = -c;
    d = std::move(r);
  }
  return seq;
}

std::size_t sign_changes(const std::vector<Vector>& seq, const Rational& x) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& q : seq) {
    const int s = sgn(eval(q, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Rational floor_of(const Rational& x) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return Rational(f);
}

// Rational with the smallest denominator in [lo, hi], lo <= hi.
Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return 0;
  if (sgn(hi) < 0) return -simplest_between(-hi, -lo);
  const Rational fl = floor_of(lo);
  if (fl == lo) return lo;
  if (fl + 1 <= hi) return fl + 1;
  return fl + 1 / simplest_between(1 / (hi - fl), 1 / (lo - fl));
}

// Distinct rational roots of p: Sturm isolation of the real roots, then each
// isolating interval is narrowed until it holds at most one fraction whose
// denominator divides the leading coefficient.
std::vector<Rational> rational_roots(Vector p) {
  trim(p);
  std::vector<Rational> roots;
  if (p.size() <= 1) return roots;
  mpz_class l = 1;
  for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  mpz_class lead = abs(mpz_class(p.back() * l));
  const Rational width = Rational(1) / Rational(lead * lead * 2);
  Rational bound = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) bound = std::max(bound, Rational(abs(p[i] / p.back())));
  bound += 1;
  const auto seq = sturm_sequence(p);
  auto count = [&](const Rational& a, const Rational& b) { return sign_changes(seq, a) - sign_changes(seq, b); };
  // Roots in (lo, hi]; exactly `n` of them.
  auto isolate = [&](auto&& self, Rational lo, Rational hi, std::size_t n) -> void {
    if (n == 0) return;
    if (n == 1 && hi - lo < width) {
      const Rational x = simplest_between(lo, hi);
      if (x > lo && sgn(eval(p, x)) == 0) roots.push_back(x);
      return;
    }
    const Rational mid = (lo + hi) / 2;
    const std::size_t left = count(lo, mid);
    self(self, lo, mid, left);
    self(self, mid, hi, n - left);
  };
  isolate(isolate, -bound, bound, count(-bound, bound));
  std::sort(roots.begin(), roots.end());
  return roots;
}

Subspace center(const Algebra& b) {
  const std::size_t n = b.dim();
  Matrix sys(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) sys(j * n + k, i) = b.c(i, j, k) - b.c(j, i, k);
  return Subspace::from_echelon(rref(nullspace(sys)));
}

Vector embed(const Subspace& sub, const Vector& coords) {
  Vector v(sub.ambient_dim());
  for (std::size_t k = 0; k < coords.size(); ++k) axpy(v, coords[k], sub.vector(k));
  return v;
}

bool subspace_less(const Subspace& x, const Subspace& y) {
  if (x.pivots() != y.pivots()) return x.pivots() < y.pivots();
  return x.basis().str() < y.basis().str();
}

}  // namespace

Subspace subspace_product(const Algebra& a, const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != a.dim() || v.ambient_dim() != a.dim()) {
    throw Error(ErrorKind::dimension_mismatch, "subspace_product: ambient dimension");
  }
  RowSpaceBuilder b(a.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) {
    const Vector x = u.vector(i);
    for (std::size_t j = 0; j < v.dim(); ++j) b.add(a.multiply(x, v.vector(j)));
  }
  return Subspace::from_echelon(b.finish());
}

RadicalResult radical(const Algebra& a) {
  RadicalResult r;
  r.j = trace_form_kernel(a);
  if (!is_two_sided_ideal(a, r.j)) {
    throw Error(ErrorKind::not_nilpotent_radical, "trace-form kernel is not an ideal");
  }
  Subspace power = r.j;
  r.p = 1;
  while (!power.is_zero()) {
    if (r.p > a.dim()) throw Error(ErrorKind::not_nilpotent_radical, "trace-form kernel is not nilpotent");
    power = subspace_product(a, power, r.j);
    ++r.p;
  }
  if (r.j.dim() < a.dim()) {
    const Algebra q = quotient(a, r.j);
    if (!trace_form_kernel(q).is_zero()) {
      throw Error(ErrorKind::postcondition_failed, "quotient by the radical is not semisimple");
    }
  }
  return r;
}

Subspace closure(const Algebra& a, const Action& act, const Subspace& seed) {
  if (seed.ambient_dim() != a.dim() || act.dim_a() != a.dim()) {
    throw Error(ErrorKind::dimension_mismatch, "closure: dimensions");
  }
  RowSpaceBuilder b(a.dim());
  std::deque<Vector> todo;
  for (auto& v : seed.vectors())
    if (b.add(v)) todo.push_back(std::move(v));
  while (!todo.empty()) {
    const Vector v = std::move(todo.front());
    todo.pop_front();
    std::vector<Vector> images;
    for (std::size_t i = 0; i < a.dim(); ++i) {
      images.push_back(a.left_basis(i).apply(v));
      images.push_back(a.right_basis(i).apply(v));
    }
    for (std::size_t h = 0; h < act.dim_h(); ++h) images.push_back(act.apply(h, v));
    for (auto& w : images)
      if (b.add(w)) todo.push_back(std::move(w));
  }
  return Subspace::from_echelon(b.finish());
}

std::vector<Vector> central_idempotents(const Algebra& b) {
  const auto unit = b.unit() ? b.unit() : b.find_unit();
  if (!unit) throw Error(ErrorKind::not_semisimple, "algebra has no unit");
  const Subspace z = center(b);
  const std::size_t r = z.dim();
  if (r <= 1) return {*unit};
  for (unsigned attempt = 0; attempt < 12; ++attempt) {
    // Coefficients k+1 first, then powers of a growing base.
    Vector gen(b.dim());
    for (std::size_t k = 0; k < r; ++k) {
      Rational c = attempt == 0 ? Rational(static_cast<long>(k + 1)) : 1;
      for (std::size_t e = 0; attempt > 0 && e < k; ++e) c *= static_cast<long>(attempt + 1);
      axpy(gen, c, z.vector(k));
    }
    // Minimal polynomial of gen.
    RowSpaceBuilder powers_span(b.dim());
    std::vector<Vector> powers{*unit};
    powers_span.add(*unit);
    Vector next = gen;
    while (powers_span.add(next)) {
      powers.push_back(next);
      next = b.multiply(next, gen);
    }
    if (powers.size() != r) continue;
    const Matrix cols = Matrix::from_columns(powers, b.dim());
    const auto coef = solve(cols, next);
    Vector poly(r + 1);
    for (std::size_t i = 0; i < r; ++i) poly[i] = -(*coef)[i];
    poly[r] = 1;
    const auto roots = rational_roots(poly);
    if (roots.size() != r) throw Error(ErrorKind::not_split, "center does not split over the rationals");
    std::vector<Vector> idem;
    for (std::size_t i = 0; i < r; ++i) {
      Vector e = *unit;
      for (std::size_t j = 0; j < r; ++j) {
        if (j == i) continue;
        Vector f = gen;
        axpy(f, -roots[j], *unit);
        e = b.multiply(e, f);
        const Rational inv = 1 / (roots[i] - roots[j]);
        for (auto& x : e) x *= inv;
      }
      idem.push_back(std::move(e));
    }
    return idem;
  }
  throw Error(ErrorKind::not_split, "no element of the center with distinct rational eigenvalues");
}

std::vector<Subspace> h_simple_components(const Algebra& a, const Action& act, const Subspace& b) {
  if (b.is_zero()) return {};
  if (auto bad = first_non_invariant(act, b)) {
    throw Error(ErrorKind::not_invariant, "subalgebra not invariant under " + act.label(*bad));
  }
  const Algebra bb = restrict(a, b);
  if (!trace_form_kernel(bb).is_zero()) throw Error(ErrorKind::not_semisimple, "subalgebra has a nonzero radical");
  const Action ab = restrict(act, b);
  const std::size_t n = bb.dim();

  std::vector<Subspace> closures;
  for (const auto& e : central_idempotents(bb)) {
    std::vector<Vector> gens;
    for (std::size_t j = 0; j < n; ++j) gens.push_back(bb.multiply(e, unit_vector(n, j)));
    const Subspace c = closure(bb, ab, Subspace::span(n, gens));
    if (std::find(closures.begin(), closures.end(), c) == closures.end()) closures.push_back(c);
  }
  std::vector<Subspace> minimal;
  for (const auto& c : closures) {
    bool is_min = true;
    for (const auto& d : closures)
      if (d.dim() < c.dim() && c.contains(d)) is_min = false;
    if (is_min) minimal.push_back(c);
  }
  Subspace sum(n);
  std::size_t total = 0;
  for (const auto& c : minimal) {
    sum = sum + c;
    total += c.dim();
  }
  if (total != n || sum.dim() != n) {
    throw Error(ErrorKind::not_semisimple, "invariant ideals do not split the subalgebra");
  }
  std::vector<Subspace> out;
  for (const auto& c : minimal) {
    std::vector<Vector> gens;
    for (const auto& v : c.vectors()) gens.push_back(embed(b, v));
    out.push_back(Subspace::span(a.dim(), gens));
  }
  std::sort(out.begin(), out.end(), subspace_less);
  return out;
}

SimplicityResult is_h_simple(const Algebra& b0, const Action& act) {
  const std::size_t n = b0.dim();
  std::vector<Matrix> gens;
  for (const auto& m : act.ops()) gens.push_back(m);
  for (std::size_t i = 0; i < n; ++i) {
    gens.push_back(b0.left_basis(i));
    gens.push_back(b0.right_basis(i));
  }
  RowSpaceBuilder env(n * n);
  std::deque<Matrix> todo;
  auto push = [&](Matrix m) {
    if (env.add(m.flattened())) todo.push_back(std::move(m));
  };
  push(Matrix::identity(n));
  for (const auto& g : gens) push(g);
  while (!todo.empty() && env.rank() < n * n) {
    const Matrix m = std::move(todo.front());
    todo.pop_front();
    for (const auto& g : gens) push(g * m);
  }
  return {env.rank() == n * n, env.rank(), n * n};
}

std::size_t pi_exponent(const Decomposition& d) {
  const auto& comps = d.components;
  const std::size_t q = comps.size();
  const Algebra& a = d.algebra;
  std::size_t best = 0;
  std::vector<bool> used(q, false);
  std::size_t total_dim = 0;
  for (const auto& c : comps) total_dim += c.dim();

  // chain = B_i1 J B_i2 ... J B_ik (nonzero), sum = B_i1 + ... + B_ik.
  auto dfs = [&](auto&& self, const Subspace& chain, const Subspace& sum, std::size_t rest) -> void {
    best = std::max(best, sum.dim());
    if (sum.dim() + rest <= best) return;
    const Subspace tail = subspace_product(a, chain, d.radical);
    if (tail.is_zero()) return;
    for (std::size_t i = 0; i < q; ++i) {
      if (used[i]) continue;
      const Subspace next = subspace_product(a, tail, comps[i]);
      if (next.is_zero()) continue;
      used[i] = true;
      self(self, next, sum + comps[i], rest - comps[i].dim());
      used[i] = false;
    }
  };
  for (std::size_t i = 0; i < q; ++i) {
    if (comps[i].is_zero()) continue;
    used[i] = true;
    dfs(dfs, comps[i], comps[i], total_dim - comps[i].dim());
    used[i] = false;
  }
  return best;
}

CheckReport verify_decomposition(const Algebra& a, const Action& act, const Decomposition& d) {
  CheckReport rep;
  const RadicalResult rad = radical(a);
  rep.add("radical", rad.j == d.radical,
          "computed dim " + std::to_string(rad.j.dim()) + ", candidate dim " + std::to_string(d.radical.dim()));
  {
    Subspace power = d.radical;
    std::size_t p = 1;
    while (!power.is_zero() && p <= a.dim()) {
      power = subspace_product(a, power, d.radical);
      ++p;
    }
    rep.add("nilpotency index", power.is_zero() && p == d.nilpotency_index,
            "computed " + std::to_string(p) + ", candidate " + std::to_string(d.nilpotency_index));
  }
  for (std::size_t h = 0; h < act.dim_h(); ++h) {
    bool ok = true;
    for (std::size_t k = 0; k < d.radical.dim() && ok; ++k)
      ok = d.radical.contains(act.apply(h, d.radical.vector(k)));
    rep.add("J invariant under " + act.label(h), ok);
  }
  Subspace b(a.dim());
  for (const auto& c : d.components) b = b + c;
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    const Subspace& c = d.components[i];
    const std::string name = "B_" + std::to_string(i + 1);
    const bool invariant = !first_non_invariant(act, c).has_value();
    rep.add(name + " invariant", invariant);
    const bool ideal = c.contains(subspace_product(a, b, c)) && c.contains(subspace_product(a, c, b));
    rep.add(name + " ideal of B", ideal);
    bool semisimple = false;
    bool simple = false;
    std::string detail;
    if (!c.is_zero() && c.contains(subspace_product(a, c, c))) {
      const Algebra ci = restrict(a, c);
      semisimple = trace_form_kernel(ci).is_zero();
      if (invariant) {
        const SimplicityResult s = is_h_simple(ci, restrict(act, c));
        simple = s.simple;
        detail = "envelope " + std::to_string(s.envelope_dim) + "/" + std::to_string(s.full_dim);
      }
    }
    rep.add(name + " semisimple", semisimple);
    rep.add(name + " H-simple", simple, detail);
  }
  std::size_t dims = d.radical.dim();
  for (const auto& c : d.components) dims += c.dim();
  const Subspace all = b + d.radical;
  rep.add("direct sum", dims == a.dim() && all.dim() == a.dim(),
          "dimensions sum to " + std::to_string(dims) + " of " + std::to_string(a.dim()));
  bool orth = true;
  for (std::size_t i = 0; i < d.components.size() && orth; ++i)
    for (std::size_t j = 0; j < d.components.size() && orth; ++j)
      if (i != j) orth = subspace_product(a, d.components[i], d.components[j]).is_zero();
  rep.add("B_i B_j = 0", orth);
  return rep;
}

}  // namespace pilab
