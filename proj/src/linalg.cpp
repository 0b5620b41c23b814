#include "pilab/linalg.hpp"

#include <algorithm>

#include "pilab/errors.hpp"
#include "pilab/parallel.hpp"

namespace pilab {

namespace {

// row -= c * other, skipping zeros on both sides.
void submul(Vector& row, const Rational& c, const Vector& other, mpq_class& t) {
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (sgn(other[j]) == 0) continue;
    mpq_mul(t.get_mpq_t(), c.get_mpq_t(), other[j].get_mpq_t());
    mpq_sub(row[j].get_mpq_t(), row[j].get_mpq_t(), t.get_mpq_t());
  }
}

std::vector<Vector> rows_of(const Matrix& m) {
  std::vector<Vector> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows[r] = m.row_vector(r);
  return rows;
}

// In-place Gauss-Jordan; returns pivot columns, rows beyond the rank are zero.
std::vector<std::size_t> gauss_jordan(std::vector<Vector>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  mpq_class t;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && sgn(rows[sel][c]) == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      const Rational f = rows[i][c];
      submul(rows[i], f, rows[r], t);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Vector RowSpaceBuilder::reduce(const Vector& v) const {
  if (v.size() != cols_) throw Error(ErrorKind::dimension_mismatch, "row length");
  Vector out = v;
  mpq_class t;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (sgn(out[pivots_[k]]) == 0) continue;
    const Rational c = out[pivots_[k]];
    submul(out, c, rows_[k], t);
  }
  return out;
}

bool RowSpaceBuilder::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool RowSpaceBuilder::add(Vector v) {
  v = reduce(v);
  std::size_t lead = 0;
  while (lead < cols_ && sgn(v[lead]) == 0) ++lead;
  if (lead == cols_) return false;
  const Rational inv = 1 / v[lead];
  for (auto& x : v) x *= inv;
  mpq_class t;
  for (auto& row : rows_) {
    if (sgn(row[lead]) == 0) continue;
    const Rational c = row[lead];
    submul(row, c, v, t);
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, lead);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

Echelon RowSpaceBuilder::finish() const {
  return {Matrix::from_rows(rows_, cols_), pivots_};
}

Echelon rref(Matrix m) {
  auto rows = rows_of(m);
  auto pivots = gauss_jordan(rows, m.cols());
  rows.resize(pivots.size());
  return {Matrix::from_rows(rows, m.cols()), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

Matrix nullspace(const Matrix& m) {
  const Echelon e = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n);
    v[f] = 1;
    for (std::size_t k = 0; k < e.rank(); ++k) v[e.pivots[k]] = -e.basis(k, f);
    basis.push_back(std::move(v));
  }
  return rref(Matrix::from_rows(basis, n)).basis;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw Error(ErrorKind::dimension_mismatch, "solve: rhs length");
  std::vector<Vector> rows(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    rows[r] = a.row_vector(r);
    rows[r].push_back(b[r]);
  }
  const auto pivots = gauss_jordan(rows, a.cols() + 1);
  Vector x(a.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    if (pivots[k] == a.cols()) return std::nullopt;
    x[pivots[k]] = rows[k][a.cols()];
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::dimension_mismatch, "inverse of non-square");
  const std::size_t n = m.rows();
  std::vector<Vector> rows(n);
  for (std::size_t r = 0; r < n; ++r) {
    rows[r] = m.row_vector(r);
    rows[r].resize(2 * n);
    rows[r][n + r] = 1;
  }
  const auto pivots = gauss_jordan(rows, n);
  if (pivots.size() != n) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = rows[r][n + c];
  return inv;
}

Rational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::dimension_mismatch, "determinant of non-square");
  auto rows = rows_of(m);
  const std::size_t n = m.rows();
  Rational det = 1;
  mpq_class t;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && sgn(rows[sel][c]) == 0) ++sel;
    if (sel == n) return 0;
    if (sel != c) {
      std::swap(rows[sel], rows[c]);
      det = -det;
    }
    det *= rows[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(rows[i][c]) == 0) continue;
      const Rational f = rows[i][c] / rows[c][c];
      submul(rows[i], f, rows[c], t);
    }
  }
  return det;
}

Echelon row_space(std::size_t count, std::size_t cols,
                  const std::function<Vector(std::size_t)>& row_at, RowSpaceStats* stats) {
  constexpr std::size_t batch = 256;
  RowSpaceStats local;
  local.rows_seen = count;
  local.isa = kernels::active_isa();

  // Rows are produced in parallel batches and consumed in order.
  auto for_batches = [&](const std::function<bool(std::size_t, Vector&)>& take) {
    std::vector<Vector> buf;
    for (std::size_t lo = 0; lo < count; lo += batch) {
      const std::size_t hi = std::min(count, lo + batch);
      buf.assign(hi - lo, Vector{});
      parallel_for(hi - lo, [&](std::size_t i) {
        buf[i] = row_at(lo + i);
        if (buf[i].size() != cols) throw Error(ErrorKind::dimension_mismatch, "row_space row length");
      });
      for (std::size_t i = lo; i < hi; ++i) {
        if (!take(i, buf[i - lo])) return;
      }
    }
  };

  std::vector<std::size_t> chosen;
  bool modular_ok = cols > 0;
  if (modular_ok) {
    kernels::ModularEchelon ech(cols, local.isa);
    for_batches([&](std::size_t i, Vector& row) {
      std::vector<double> res(cols);
      for (std::size_t j = 0; j < cols; ++j) {
        const auto r = kernels::residue(row[j]);
        if (!r) {
          modular_ok = false;
          return false;
        }
        res[j] = *r;
      }
      if (ech.add(std::move(res))) chosen.push_back(i);
      return !ech.full();
    });
    local.modular_rank = ech.rank();
  }
  local.modular_prepass = modular_ok;

  RowSpaceBuilder exact(cols);
  if (modular_ok) {
    std::vector<Vector> picked(chosen.size());
    parallel_for(chosen.size(), [&](std::size_t k) { picked[k] = row_at(chosen[k]); });
    for (auto& v : picked) exact.add(std::move(v));
    // A row dependent mod p can still be independent over Q; check them all.
    if (exact.rank() < cols) {
      std::size_t next = 0;
      for_batches([&](std::size_t i, Vector& row) {
        if (next < chosen.size() && chosen[next] == i) {
          ++next;
          return true;
        }
        exact.add(std::move(row));
        return exact.rank() < cols;
      });
    }
  } else {
    for_batches([&](std::size_t, Vector& row) {
      exact.add(std::move(row));
      return exact.rank() < cols;
    });
  }
  local.exact_rank = exact.rank();
  if (stats) *stats = local;
  return exact.finish();
}

}  // namespace pilab
