#pragma once

#include <cstddef>
#include <vector>

#include "pilab/linalg.hpp"

namespace pilab {

/// Subspace of F^n kept in reduced row echelon form, so equal subspaces have
/// identical representations.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<Vector>& gens);
  static Subspace full(std::size_t ambient);
  static Subspace from_echelon(Echelon e);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return pivots_.size(); }
  bool is_zero() const noexcept { return pivots_.empty(); }

  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  Vector vector(std::size_t k) const { return basis_.row_vector(k); }
  std::vector<Vector> vectors() const;

  /// Remainder of v after subtracting its component along the basis; zero iff
  /// v lies in the subspace. The pivot coordinates of the result are zero.
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the echelon basis (v must lie in the subspace).
  Vector coordinates(const Vector& v) const;
  /// Non-pivot columns, which index a coordinate complement.
  std::vector<std::size_t> free_columns() const;

  Subspace operator+(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace intersect(const Subspace& a, const Subspace& b);

}  // namespace pilab
