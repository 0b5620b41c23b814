#include "pilab/algebra.hpp"

#include "pilab/errors.hpp"
#include "pilab/linalg.hpp"

namespace pilab {

Algebra::Algebra(std::size_t dim, std::vector<Rational> mult, std::optional<Vector> unit)
    : dim_(dim), mult_(std::move(mult)), unit_(std::move(unit)) {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (sgn(c(i, j, k)) != 0) nonzero_.push_back({i, j, k, c(i, j, k)});
  left_.assign(dim_, Matrix(dim_, dim_));
  right_.assign(dim_, Matrix(dim_, dim_));
  for (const auto& e : nonzero_) {
    left_[e.i](e.k, e.j) = e.c;
    right_[e.j](e.k, e.i) = e.c;
  }
}

Algebra Algebra::make(std::size_t dim, std::vector<Rational> mult, std::optional<Vector> unit) {
  if (dim == 0) throw Error(ErrorKind::dimension_mismatch, "algebra dimension must be positive");
  if (mult.size() != dim * dim * dim) {
    throw Error(ErrorKind::dimension_mismatch, "structure constants must have dim^3 entries");
  }
  if (unit && unit->size() != dim) throw Error(ErrorKind::dimension_mismatch, "unit length");
  Algebra a(dim, std::move(mult), std::move(unit));
  a.check_associative();
  a.check_unit();
  return a;
}

Algebra Algebra::make(const std::vector<std::vector<Vector>>& mult, std::optional<Vector> unit) {
  const std::size_t dim = mult.size();
  std::vector<Rational> flat;
  flat.reserve(dim * dim * dim);
  for (const auto& row : mult) {
    if (row.size() != dim) throw Error(ErrorKind::dimension_mismatch, "structure constants shape");
    for (const auto& v : row) {
      if (v.size() != dim) throw Error(ErrorKind::dimension_mismatch, "structure constants shape");
      flat.insert(flat.end(), v.begin(), v.end());
    }
  }
  return make(dim, std::move(flat), std::move(unit));
}

void Algebra::check_associative() const {
  std::vector<Vector> prod(dim_ * dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) prod[i * dim_ + j] = product(i, j);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        const Vector lhs = right_[k].apply(prod[i * dim_ + j]);
        const Vector rhs = left_[i].apply(prod[j * dim_ + k]);
        if (lhs != rhs) throw AssociativityViolation(i, j, k, to_string(lhs), to_string(rhs));
      }
}

void Algebra::check_unit() const {
  if (!unit_) return;
  for (std::size_t i = 0; i < dim_; ++i) {
    const Vector e = unit_vector(dim_, i);
    if (right_[i].apply(*unit_) != e || left_[i].apply(*unit_) != e) {
      throw Error(ErrorKind::unit_violation,
                  "unit law fails at basis element " + std::to_string(i));
    }
  }
}

Vector Algebra::product(std::size_t i, std::size_t j) const {
  return Vector(mult_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j) * dim_),
                mult_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j + 1) * dim_));
}

Vector Algebra::multiply(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw Error(ErrorKind::dimension_mismatch, "multiply");
  Vector out(dim_);
  mpq_class t;
  for (const auto& e : nonzero_) {
    if (sgn(x[e.i]) == 0 || sgn(y[e.j]) == 0) continue;
    mpq_mul(t.get_mpq_t(), x[e.i].get_mpq_t(), y[e.j].get_mpq_t());
    mpq_mul(t.get_mpq_t(), t.get_mpq_t(), e.c.get_mpq_t());
    mpq_add(out[e.k].get_mpq_t(), out[e.k].get_mpq_t(), t.get_mpq_t());
  }
  return out;
}

Matrix Algebra::left(const Vector& x) const {
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    if (sgn(x[i]) != 0) m += left_[i].scaled(x[i]);
  return m;
}

Matrix Algebra::right(const Vector& x) const {
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    if (sgn(x[i]) != 0) m += right_[i].scaled(x[i]);
  return m;
}

std::optional<Vector> Algebra::find_unit() const {
  // u e_j = e_j and e_j u = e_j for every j; unknown u, 2 dim^2 equations.
  Matrix sys(2 * dim_ * dim_, dim_);
  Vector rhs(2 * dim_ * dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const std::size_t r1 = j * dim_ + k;
      const std::size_t r2 = dim_ * dim_ + r1;
      for (std::size_t i = 0; i < dim_; ++i) {
        sys(r1, i) = c(i, j, k);
        sys(r2, i) = c(j, i, k);
      }
      rhs[r1] = rhs[r2] = (j == k) ? 1 : 0;
    }
  }
  return solve(sys, rhs);
}

Algebra restrict(const Algebra& a, const Subspace& sub) {
  const std::size_t d = sub.dim();
  if (d == 0) throw Error(ErrorKind::dimension_mismatch, "restriction to the zero subspace");
  std::vector<Rational> mult(d * d * d);
  const auto basis = sub.vectors();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vector p = a.multiply(basis[i], basis[j]);
      if (!sub.contains(p)) {
        throw Error(ErrorKind::validation_error, "subspace is not closed under multiplication");
      }
      const Vector co = sub.coordinates(p);
      for (std::size_t k = 0; k < d; ++k) mult[(i * d + j) * d + k] = co[k];
    }
  Algebra r = Algebra::make(d, std::move(mult));
  if (auto u = r.find_unit()) return Algebra::make(d, r.structure(), *u);
  return r;
}

Vector quotient_coordinates(const Subspace& ideal, const Vector& x) {
  const Vector r = ideal.reduce(x);
  const auto cols = ideal.free_columns();
  Vector out(cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k) out[k] = r[cols[k]];
  return out;
}

Algebra quotient(const Algebra& a, const Subspace& ideal) {
  const auto cols = ideal.free_columns();
  const std::size_t d = cols.size();
  if (d == 0) throw Error(ErrorKind::dimension_mismatch, "quotient by the whole algebra");
  std::vector<Rational> mult(d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vector co = quotient_coordinates(ideal, a.product(cols[i], cols[j]));
      for (std::size_t k = 0; k < d; ++k) mult[(i * d + j) * d + k] = co[k];
    }
  std::optional<Vector> unit;
  if (a.unit()) unit = quotient_coordinates(ideal, *a.unit());
  return Algebra::make(d, std::move(mult), unit);
}

Algebra direct_sum(const std::vector<Algebra>& parts) {
  std::size_t d = 0;
  for (const auto& p : parts) d += p.dim();
  std::vector<Rational> mult(d * d * d);
  Vector unit(d);
  bool unital = true;
  std::size_t off = 0;
  for (const auto& p : parts) {
    const std::size_t n = p.dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          mult[((off + i) * d + off + j) * d + off + k] = p.c(i, j, k);
    if (p.unit()) {
      for (std::size_t i = 0; i < n; ++i) unit[off + i] = (*p.unit())[i];
    } else {
      unital = false;
    }
    off += n;
  }
  return Algebra::make(d, std::move(mult), unital ? std::optional<Vector>(unit) : std::nullopt);
}

Algebra change_basis(const Algebra& a, const Matrix& p) {
  const auto pinv = inverse(p);
  if (!pinv) throw Error(ErrorKind::validation_error, "basis change matrix is singular");
  const std::size_t d = a.dim();
  std::vector<Rational> mult(d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vector prod = pinv->apply(a.multiply(p.column(i), p.column(j)));
      for (std::size_t k = 0; k < d; ++k) mult[(i * d + j) * d + k] = prod[k];
    }
  std::optional<Vector> unit;
  if (a.unit()) unit = pinv->apply(*a.unit());
  return Algebra::make(d, std::move(mult), unit);
}

Algebra matrix_algebra(std::size_t k) {
  const std::size_t d = k * k;
  std::vector<Rational> mult(d * d * d);
  Vector unit(d);
  for (std::size_t a = 0; a < k; ++a) {
    unit[a * k + a] = 1;
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t c = 0; c < k; ++c) mult[((a * k + b) * d + b * k + c) * d + a * k + c] = 1;
  }
  return Algebra::make(d, std::move(mult), unit);
}

Algebra upper_triangular(std::size_t k) {
  std::vector<std::pair<std::size_t, std::size_t>> units;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) units.emplace_back(i, j);
  const std::size_t d = units.size();
  auto index = [&](std::size_t i, std::size_t j) {
    for (std::size_t t = 0; t < d; ++t)
      if (units[t] == std::pair{i, j}) return t;
    return d;
  };
  std::vector<Rational> mult(d * d * d);
  Vector unit(d);
  for (std::size_t s = 0; s < d; ++s) {
    if (units[s].first == units[s].second) unit[s] = 1;
    for (std::size_t t = 0; t < d; ++t)
      if (units[s].second == units[t].first)
        mult[(s * d + t) * d + index(units[s].first, units[t].second)] = 1;
  }
  return Algebra::make(d, std::move(mult), unit);
}

Algebra diagonal_algebra(std::size_t m) {
  std::vector<Rational> mult(m * m * m);
  Vector unit(m);
  for (std::size_t i = 0; i < m; ++i) {
    mult[(i * m + i) * m + i] = 1;
    unit[i] = 1;
  }
  return Algebra::make(m, std::move(mult), unit);
}

}  // namespace pilab
