#include "pilab/subspace.hpp"

#include "pilab/errors.hpp"

namespace pilab {

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& gens) {
  RowSpaceBuilder b(ambient);
  for (const auto& g : gens) {
    if (g.size() != ambient) throw Error(ErrorKind::dimension_mismatch, "spanning vector length");
    b.add(g);
  }
  return from_echelon(b.finish());
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s(ambient);
  s.basis_ = Matrix::identity(ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.pivots_.push_back(i);
  return s;
}

Subspace Subspace::from_echelon(Echelon e) {
  Subspace s(e.basis.cols());
  s.basis_ = std::move(e.basis);
  s.pivots_ = std::move(e.pivots);
  return s;
}

std::vector<Vector> Subspace::vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t k = 0; k < dim(); ++k) out.push_back(vector(k));
  return out;
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw Error(ErrorKind::dimension_mismatch, "vector length vs subspace");
  Vector out = v;
  for (std::size_t k = 0; k < dim(); ++k) {
    const Rational c = out[pivots_[k]];
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (sgn(basis_(k, j)) != 0) out[j] -= c * basis_(k, j);
    }
  }
  return out;
}

bool Subspace::contains(const Vector& v) const { return pilab::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t k = 0; k < other.dim(); ++k)
    if (!contains(other.vector(k))) return false;
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw Error(ErrorKind::postcondition_failed, "vector outside subspace");
  Vector c(dim());
  for (std::size_t k = 0; k < dim(); ++k) c[k] = v[pivots_[k]];
  return c;
}

std::vector<std::size_t> Subspace::free_columns() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t j = 0; j < ambient_; ++j) {
    if (k < pivots_.size() && pivots_[k] == j) {
      ++k;
    } else {
      out.push_back(j);
    }
  }
  return out;
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error(ErrorKind::dimension_mismatch, "subspace sum");
  auto gens = vectors();
  for (auto& v : other.vectors()) gens.push_back(std::move(v));
  return span(ambient_, gens);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorKind::dimension_mismatch, "intersection");
  // x = sum c_i a_i with x in b: solve via nullspace of [a; -b]^T.
  const std::size_t n = a.ambient_dim();
  Matrix m(n, a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(j, i) = a.basis()(i, j);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(j, a.dim() + i) = -b.basis()(i, j);
  const Matrix ker = nullspace(m);
  std::vector<Vector> gens;
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    Vector x(n);
    for (std::size_t i = 0; i < a.dim(); ++i) axpy(x, ker(r, i), a.vector(i));
    gens.push_back(std::move(x));
  }
  return Subspace::span(n, gens);
}

}  // namespace pilab
