#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "pilab/kernels.hpp"
#include "pilab/matrix.hpp"

namespace pilab {

/// Reduced row echelon form: nonzero rows only, pivots strictly increasing,
/// pivot entries 1, pivot columns zero elsewhere.
struct Echelon {
  Matrix basis;
  std::vector<std::size_t> pivots;

  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Incrementally maintained fully reduced echelon basis of a row space.
class RowSpaceBuilder {
 public:
  explicit RowSpaceBuilder(std::size_t cols) : cols_(cols) {}

  /// Adds v; returns true iff the dimension grew.
  bool add(Vector v);
  bool contains(const Vector& v) const;
  /// Canonical remainder of v modulo the span.
  Vector reduce(const Vector& v) const;

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  Echelon finish() const;

 private:
  std::size_t cols_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Deterministic Gauss-Jordan: columns left to right, first nonzero row below
/// the current one becomes the pivot row.
Echelon rref(Matrix m);

std::size_t rank(const Matrix& m);

/// Canonical (RREF) basis of { x : m x = 0 }, one basis vector per row.
Matrix nullspace(const Matrix& m);

/// Particular solution of a x = b with all free variables zero.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

Rational determinant(const Matrix& m);

struct RowSpaceStats {
  std::size_t rows_seen = 0;
  std::size_t modular_rank = 0;
  std::size_t exact_rank = 0;
  bool modular_prepass = false;
  kernels::Isa isa = kernels::Isa::scalar;
};

/// Canonical RREF of the span of `count` rows, produced on demand in order by
/// `row_at`. A mod-p pass picks rows that are independent mod p (hence over
/// Q); the exact pass builds their RREF and then checks every other row
/// exactly, so the result never depends on the prime or on the ISA.
Echelon row_space(std::size_t count, std::size_t cols,
                  const std::function<Vector(std::size_t)>& row_at,
                  RowSpaceStats* stats = nullptr);

}  // namespace pilab
