#include "pilab/actions.hpp"
#include "pilab/errors.hpp"
#include "pilab/exactalg.hpp"
#include "pilab/linalg.hpp"

namespace pilab {

namespace {

void require_averaging(const Action& act) {
  switch (act.kind()) {
    case ActionKind::trivial:
      return;
    case ActionKind::group:
      if (!act.group()) throw Error(ErrorKind::averaging_unavailable, "group action without its group");
      return;
    case ActionKind::grading:
    case ActionKind::hopf: {
      if (!act.hopf()) throw Error(ErrorKind::averaging_unavailable, "Hopf action without its Hopf structure");
      if (!left_integral(*act.hopf()).semisimple) {
        throw Error(ErrorKind::averaging_unavailable, "acting Hopf algebra is not semisimple");
      }
      return;
    }
    case ActionKind::generalized:
      throw Error(ErrorKind::averaging_unavailable, "no averaging operator for a generalized action");
  }
}

}  // namespace

Decomposition wedderburn_malcev(const Algebra& a, const Action& act) {
  if (act.dim_a() != a.dim()) throw Error(ErrorKind::dimension_mismatch, "action does not match the algebra");
  require_averaging(act);
  if (!a.unit() && !a.find_unit()) throw ValidationError("wedderburn", "algebra has no unit");

  Decomposition d;
  d.algebra = a;
  const RadicalResult rad = radical(a);
  d.radical = rad.j;
  d.nilpotency_index = rad.p;
  if (auto bad = first_non_invariant(act, rad.j)) {
    throw Error(ErrorKind::not_invariant, "radical not invariant under " + act.label(*bad));
  }

  const std::size_t n = a.dim();
  const std::vector<std::size_t> free = rad.j.free_columns();
  const std::size_t m = free.size();
  const Algebra q = quotient(a, rad.j);
  const std::size_t dh = act.dim_h();

  // Induced action on the quotient: column s is the image of e_s-bar.
  std::vector<Matrix> hbar(dh, Matrix(m, m));
  for (std::size_t g = 0; g < dh; ++g)
    for (std::size_t s = 0; s < m; ++s)
      hbar[g].set_column(s, quotient_coordinates(rad.j, act.apply(g, unit_vector(n, free[s]))));

  std::vector<Vector> sigma;
  for (auto f : free) sigma.push_back(unit_vector(n, f));
  auto sigma_of = [&](const Vector& coords) {
    Vector v(n);
    for (std::size_t f = 0; f < m; ++f)
      if (sgn(coords[f]) != 0) axpy(v, coords[f], sigma[f]);
    return v;
  };

  // Correct sigma layer by layer: after step k it is multiplicative and
  // equivariant modulo J^(k+1).
  Subspace power = rad.j;
  for (std::size_t k = 1; k + 1 <= rad.p && !power.is_zero(); ++k) {
    const Subspace next = subspace_product(a, power, rad.j);
    const std::vector<Vector> basis = power.vectors();
    const std::size_t r = basis.size();
    // Unknown x_{f,b} (coefficient of basis[b] in the correction of e_f-bar) at f*r+b.
    std::vector<Vector> rows;
    Vector rhs;

    auto add_equation = [&](std::vector<Vector> coeff, const Vector& target) {
      for (auto& c : coeff) c = next.reduce(c);
      const Vector t = next.reduce(target);
      for (std::size_t i = 0; i < n; ++i) {
        bool any = sgn(t[i]) != 0;
        for (const auto& c : coeff) any = any || sgn(c[i]) != 0;
        if (!any) continue;
        Vector row(m * r);
        for (std::size_t u = 0; u < m * r; ++u) row[u] = coeff[u][i];
        rows.push_back(std::move(row));
        rhs.push_back(-t[i]);
      }
    };

    for (std::size_t s = 0; s < m; ++s)
      for (std::size_t t = 0; t < m; ++t) {
        const Vector st = q.product(s, t);
        std::vector<Vector> coeff(m * r, Vector(n));
        for (std::size_t f = 0; f < m; ++f)
          for (std::size_t b = 0; b < r; ++b) {
            Vector& c = coeff[f * r + b];
            if (t == f) axpy(c, 1, a.multiply(sigma[s], basis[b]));
            if (s == f) axpy(c, 1, a.multiply(basis[b], sigma[t]));
            if (sgn(st[f]) != 0) axpy(c, -st[f], basis[b]);
          }
        Vector target = a.multiply(sigma[s], sigma[t]);
        axpy(target, -1, sigma_of(st));
        add_equation(std::move(coeff), target);
      }
    for (std::size_t g = 0; g < dh; ++g)
      for (std::size_t s = 0; s < m; ++s) {
        const Vector hs = hbar[g].column(s);
        std::vector<Vector> coeff(m * r, Vector(n));
        for (std::size_t f = 0; f < m; ++f)
          for (std::size_t b = 0; b < r; ++b) {
            Vector& c = coeff[f * r + b];
            if (s == f) axpy(c, 1, act.apply(g, basis[b]));
            if (sgn(hs[f]) != 0) axpy(c, -hs[f], basis[b]);
          }
        Vector target = act.apply(g, sigma[s]);
        axpy(target, -1, sigma_of(hs));
        add_equation(std::move(coeff), target);
      }

    if (!rows.empty()) {
      const auto x = solve(Matrix::from_rows(rows, m * r), rhs);
      if (!x) {
        throw Error(ErrorKind::lifting_failed, "no equivariant correction at layer " + std::to_string(k));
      }
      for (std::size_t f = 0; f < m; ++f)
        for (std::size_t b = 0; b < r; ++b)
          if (sgn((*x)[f * r + b]) != 0) axpy(sigma[f], (*x)[f * r + b], basis[b]);
    }
    power = next;
  }

  const Subspace b = Subspace::span(n, sigma);
  d.components = h_simple_components(a, act, b);
  const CheckReport rep = verify_decomposition(a, act, d);
  if (const CheckItem* bad = rep.first_failure()) {
    throw Error(ErrorKind::postcondition_failed, "decomposition check failed: " + bad->name);
  }
  return d;
}

}  // namespace pilab
