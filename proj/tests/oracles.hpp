#pragma once

// Independent reference computations for the test suite. They share no code
// with the library beyond the Rational type and the input data structures.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <vector>

#include "pilab/action.hpp"
#include "pilab/algebra.hpp"

namespace oracle {

using Row = std::vector<mpq_class>;

/// Rank by fraction-free (Bareiss) elimination after clearing denominators.
inline std::size_t rank(const std::vector<Row>& rows_in) {
  if (rows_in.empty()) return 0;
  const std::size_t cols = rows_in[0].size();
  std::vector<std::vector<mpz_class>> m;
  for (const auto& r : rows_in) {
    mpz_class l = 1;
    for (const auto& x : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<mpz_class> z(cols);
    for (std::size_t j = 0; j < cols; ++j) z[j] = r[j].get_num() * (l / r[j].get_den());
    m.push_back(std::move(z));
  }
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t sel = rank;
    while (sel < m.size() && m[sel][c] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[rank]);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[rank][c] * m[i][j] - m[i][c] * m[rank][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

/// x * y from the structure constants.
inline Row multiply(const pilab::Algebra& a, const Row& x, const Row& y) {
  const std::size_t d = a.dim();
  Row out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j] == 0) continue;
      for (std::size_t k = 0; k < d; ++k) out[k] += x[i] * y[j] * a.c(i, j, k);
    }
  }
  return out;
}

inline Row apply_matrix(const pilab::Matrix& m, const Row& x) {
  Row out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * x[c];
  return out;
}

inline Row basis(std::size_t d, std::size_t i) {
  Row v(d);
  v[i] = 1;
  return v;
}

/// c^H_n as the rank of the full evaluation matrix, one row per monomial
/// x_{s(1)}^{h_1} ... x_{s(n)}^{h_n}, one column per (tuple, coordinate).
inline std::size_t codimension(const pilab::Algebra& a, const pilab::Action& act, std::size_t n) {
  const std::size_t d = a.dim();
  const std::size_t dh = act.dim_h();
  std::size_t tuples = 1;
  for (std::size_t i = 0; i < n; ++i) tuples *= d;
  std::vector<Row> rows;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::size_t label_count = 1;
    for (std::size_t i = 0; i < n; ++i) label_count *= dh;
    for (std::size_t lc = 0; lc < label_count; ++lc) {
      std::vector<std::size_t> labels(n);
      for (std::size_t i = 0, x = lc; i < n; ++i, x /= dh) labels[i] = x % dh;
      Row row;
      for (std::size_t t = 0; t < tuples; ++t) {
        std::vector<std::size_t> tuple(n);
        for (std::size_t i = n, x = t; i-- > 0; x /= d) tuple[i] = x % d;
        Row v = apply_matrix(act.op(labels[0]), basis(d, tuple[perm[0]]));
        for (std::size_t j = 1; j < n; ++j) v = multiply(a, v, apply_matrix(act.op(labels[j]), basis(d, tuple[perm[j]])));
        row.insert(row.end(), v.begin(), v.end());
      }
      rows.push_back(std::move(row));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return rank(rows);
}

/// Number of standard Young tableaux, by removing corners recursively.
inline std::uint64_t syt_count(std::vector<std::size_t> shape) {
  static std::map<std::vector<std::size_t>, std::uint64_t> memo;
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  if (shape.empty()) return 1;
  if (auto it = memo.find(shape); it != memo.end()) return it->second;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i + 1 < shape.size() && shape[i + 1] == shape[i]) continue;  // not a corner
    auto smaller = shape;
    --smaller[i];
    total += syt_count(smaller);
  }
  memo[shape] = total;
  return total;
}

/// Number of partitions of n.
inline std::uint64_t partition_count(std::size_t n) {
  std::vector<std::uint64_t> p(n + 1);
  p[0] = 1;
  for (std::size_t part = 1; part <= n; ++part)
    for (std::size_t m = part; m <= n; ++m) p[m] += p[m - part];
  return p[n];
}

/// Independent generators of a span, greedily kept by rank growth.
inline std::vector<Row> prune(const std::vector<Row>& gens) {
  std::vector<Row> kept;
  for (const auto& g : gens) {
    kept.push_back(g);
    if (rank(kept) < kept.size()) kept.pop_back();
  }
  return kept;
}

inline std::vector<Row> product_span(const pilab::Algebra& a, const std::vector<Row>& u, const std::vector<Row>& v) {
  std::vector<Row> gens;
  for (const auto& x : u)
    for (const auto& y : v) gens.push_back(multiply(a, x, y));
  return prune(gens);
}

/// max dim(B_{i_1} + ... + B_{i_r}) over index sequences, repeats allowed,
/// with B_{i_1} J B_{i_2} J ... J B_{i_r} != 0.
inline std::size_t exponent_with_repeats(const pilab::Algebra& a, const std::vector<std::vector<Row>>& comps,
                                         const std::vector<Row>& j, std::size_t p) {
  std::size_t best = 0;
  auto dfs = [&](auto&& self, const std::vector<Row>& prod, std::vector<bool>& used, std::size_t len) -> void {
    std::vector<Row> sum;
    for (std::size_t i = 0; i < comps.size(); ++i)
      if (used[i]) sum.insert(sum.end(), comps[i].begin(), comps[i].end());
    best = std::max(best, rank(sum));
    if (len >= p) return;
    const std::vector<Row> pj = product_span(a, prod, j);
    if (pj.empty()) return;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const std::vector<Row> next = product_span(a, pj, comps[i]);
      if (next.empty()) continue;
      const bool was = used[i];
      used[i] = true;
      self(self, next, used, len + 1);
      used[i] = was;
    }
  };
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (comps[i].empty()) continue;
    std::vector<bool> used(comps.size(), false);
    used[i] = true;
    dfs(dfs, comps[i], used, 1);
  }
  return best;
}

}  // namespace oracle
