#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pilab/matrix.hpp"
#include "pilab/subspace.hpp"

namespace pilab {

/// Finite-dimensional associative algebra given by structure constants:
/// e_i e_j = sum_k c(i, j, k) e_k.
class Algebra {
 public:
  Algebra() = default;

  /// Validates shape, associativity on all basis triples and the unit laws.
  /// Throws AssociativityViolation or an Error of kind unit_violation.
  static Algebra make(std::size_t dim, std::vector<Rational> mult,
                      std::optional<Vector> unit = std::nullopt);
  /// Nested form mult[i][j][k].
  static Algebra make(const std::vector<std::vector<Vector>>& mult,
                      std::optional<Vector> unit = std::nullopt);

  std::size_t dim() const noexcept { return dim_; }
  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
    return mult_[(i * dim_ + j) * dim_ + k];
  }
  const std::vector<Rational>& structure() const noexcept { return mult_; }
  const std::optional<Vector>& unit() const noexcept { return unit_; }

  Vector product(std::size_t i, std::size_t j) const;
  Vector multiply(const Vector& x, const Vector& y) const;
  /// Matrix of a -> x a.
  Matrix left(const Vector& x) const;
  /// Matrix of a -> a x.
  Matrix right(const Vector& x) const;
  const Matrix& left_basis(std::size_t i) const { return left_[i]; }
  const Matrix& right_basis(std::size_t i) const { return right_[i]; }

  /// Solves for a two-sided unit; nullopt if there is none.
  std::optional<Vector> find_unit() const;

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.dim_ == b.dim_ && a.mult_ == b.mult_ && a.unit_ == b.unit_;
  }

 private:
  struct Entry {
    std::size_t i, j, k;
    Rational c;
  };

  Algebra(std::size_t dim, std::vector<Rational> mult, std::optional<Vector> unit);
  void check_associative() const;
  void check_unit() const;

  std::size_t dim_ = 0;
  std::vector<Rational> mult_;
  std::vector<Entry> nonzero_;
  std::optional<Vector> unit_;
  std::vector<Matrix> left_, right_;
};

/// Subalgebra spanned by `sub` in the coordinates of its echelon basis.
/// Throws if `sub` is not closed under multiplication.
Algebra restrict(const Algebra& a, const Subspace& sub);

/// Quotient by a two-sided ideal, using the non-pivot columns of the ideal's
/// echelon basis as coordinates.
Algebra quotient(const Algebra& a, const Subspace& ideal);

/// Image of x in quotient(a, ideal) coordinates.
Vector quotient_coordinates(const Subspace& ideal, const Vector& x);

Algebra direct_sum(const std::vector<Algebra>& parts);

/// Same algebra in the basis given by the columns of p (new e_j = sum_i p(i,j) e_i).
Algebra change_basis(const Algebra& a, const Matrix& p);

/// M_k with matrix units e_{ab} at index a*k+b.
Algebra matrix_algebra(std::size_t k);
/// UT_k with e_{ij}, i <= j, in lexicographic order.
Algebra upper_triangular(std::size_t k);
/// F e_1 + ... + F e_m with orthogonal idempotents.
Algebra diagonal_algebra(std::size_t m);

}  // namespace pilab
