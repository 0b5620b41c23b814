#include "pilab/symfun.hpp"

#include <algorithm>
#include <numeric>

#include "pilab/errors.hpp"

namespace pilab {

namespace {

void partitions_rec(std::size_t rest, std::size_t max_part, Partition& cur, std::vector<Partition>& out) {
  if (rest == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t p = std::min(rest, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(rest - p, p, cur, out);
    cur.pop_back();
  }
}

std::size_t size_of(const Partition& p) { return std::accumulate(p.begin(), p.end(), std::size_t{0}); }

void check_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) throw Error(ErrorKind::validation_error, "partition parts must be positive");
    if (i > 0 && p[i] > p[i - 1]) throw Error(ErrorKind::validation_error, "partition parts must not increase");
  }
}

// Murnaghan-Nakayama on beta numbers: removing a rim hook of length r moves
// one bead from b to b - r; the sign counts the beads jumped over.
long long mn(std::vector<std::size_t> beta, const Partition& mu, std::size_t k) {
  if (k == mu.size()) return 1;
  const std::size_t r = mu[k];
  long long total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const std::size_t b = beta[i];
    if (b < r) continue;
    const std::size_t target = b - r;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    std::size_t between = 0;
    for (auto x : beta)
      if (x > target && x < b) ++between;
    auto next = beta;
    next[i] = target;
    total += (between % 2 ? -1 : 1) * mn(std::move(next), mu, k + 1);
  }
  return total;
}

// Representative permutation with cycles on consecutive blocks.
std::vector<std::size_t> class_representative(const Partition& mu) {
  std::vector<std::size_t> sigma;
  std::size_t start = 0;
  for (auto len : mu) {
    for (std::size_t i = 0; i < len; ++i) sigma.push_back(start + (i + 1) % len);
    start += len;
  }
  return sigma;
}

// All permutations of {0..n-1} fixing each block setwise, with signs.
std::vector<std::pair<std::vector<std::size_t>, int>> block_group(const Tableau& blocks, std::size_t n) {
  std::vector<std::pair<std::vector<std::size_t>, int>> out;
  std::vector<std::size_t> id(n);
  std::iota(id.begin(), id.end(), 0);
  out.push_back({id, 1});
  for (const auto& block : blocks) {
    std::vector<std::size_t> order(block.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::pair<std::vector<std::size_t>, int>> next;
    do {
      int sign = 1;
      for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j)
          if (order[i] > order[j]) sign = -sign;
      for (const auto& [p, s] : out) {
        auto q = p;
        for (std::size_t i = 0; i < block.size(); ++i) q[block[i]] = block[order[i]];
        next.push_back({std::move(q), s * sign});
      }
    } while (std::next_permutation(order.begin(), order.end()));
    out = std::move(next);
  }
  return out;
}

Tableau columns_of(const Tableau& t) {
  Tableau cols;
  for (const auto& row : t)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (cols.size() <= c) cols.emplace_back();
      cols[c].push_back(row[c]);
    }
  return cols;
}

void check_tableau(const Tableau& t, std::size_t n) {
  std::vector<bool> seen(n, false);
  std::size_t count = 0;
  for (std::size_t r = 0; r < t.size(); ++r) {
    if (r > 0 && t[r].size() > t[r - 1].size()) throw Error(ErrorKind::validation_error, "tableau rows must not grow");
    for (auto v : t[r]) {
      if (v >= n || seen[v]) throw Error(ErrorKind::validation_error, "tableau filling is not a bijection");
      seen[v] = true;
      ++count;
    }
  }
  if (count != n) throw Error(ErrorKind::validation_error, "tableau size differs from the variable count");
}

HPolynomial group_sum(const Tableau& blocks, const HPolynomial& f, bool signed_sum) {
  HPolynomial out(f.n(), f.dim_h());
  for (const auto& [p, s] : block_group(blocks, f.n())) out += f.permuted(p).scaled(signed_sum ? s : 1);
  return out;
}

}  // namespace

std::string to_string(const Partition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
  return out + ")";
}

std::vector<Partition> partitions(std::size_t n) {
  if (n < 1 || n > 12) throw Error(ErrorKind::guard_exceeded, "partitions are enumerated for 1 <= n <= 12");
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::uint64_t hook_dim(const Partition& lambda) {
  check_partition(lambda);
  const std::size_t n = size_of(lambda);
  if (n > 20) throw Error(ErrorKind::guard_exceeded, "hook_dim overflows beyond n = 20");
  mpz_class num = 1;
  for (std::size_t i = 2; i <= n; ++i) num *= static_cast<unsigned long>(i);
  mpz_class den = 1;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (std::size_t j = 0; j < lambda[i]; ++j) {
      std::size_t below = 0;
      for (std::size_t k = i + 1; k < lambda.size() && lambda[k] > j; ++k) ++below;
      den *= static_cast<unsigned long>(lambda[i] - j + below);
    }
  return mpz_class(num / den).get_ui();
}

long long irreducible_character(const Partition& lambda, const Partition& mu) {
  check_partition(lambda);
  if (size_of(lambda) != size_of(mu)) throw Error(ErrorKind::dimension_mismatch, "partition sizes differ");
  std::vector<std::size_t> beta(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) beta[i] = lambda[i] + lambda.size() - 1 - i;
  return mn(beta, mu, 0);
}

std::uint64_t centralizer_size(const Partition& mu) {
  std::uint64_t z = 1;
  std::size_t i = 0;
  while (i < mu.size()) {
    std::size_t j = i;
    while (j < mu.size() && mu[j] == mu[i]) ++j;
    for (std::size_t m = 1; m <= j - i; ++m) z *= m * mu[i];
    i = j;
  }
  return z;
}

Rational image_trace(const EvaluationImage& img, const std::vector<std::size_t>& sigma) {
  const std::size_t n = img.n, da = img.dim_a;
  Rational tr = 0;
  for (std::size_t r = 0; r < img.rank(); ++r) {
    const std::size_t col = img.basis.pivots[r];
    std::size_t t = col / da;
    const std::size_t k = col % da;
    std::vector<std::size_t> digits(n);
    for (std::size_t j = n; j-- > 0;) {
      digits[j] = t % da;
      t /= da;
    }
    std::size_t moved = 0;
    for (std::size_t j = 0; j < n; ++j) moved = moved * da + digits[sigma[j]];
    tr += img.basis.basis(r, moved * da + k);
  }
  return tr;
}

std::vector<CocharacterRow> cocharacter(const EvaluationImage& img) {
  const std::size_t n = img.n;
  if (n > 5) throw Error(ErrorKind::guard_exceeded, "cocharacters are computed for n <= 5");
  const auto classes = partitions(n);
  std::vector<Rational> traces;
  for (const auto& mu : classes) traces.push_back(image_trace(img, class_representative(mu)));
  std::vector<CocharacterRow> rows;
  for (const auto& lambda : partitions(n)) {
    Rational m = 0;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      m += traces[c] * Rational(static_cast<long>(irreducible_character(lambda, classes[c]))) /
           Rational(static_cast<unsigned long>(centralizer_size(classes[c])));
    }
    if (m.get_den() != 1 || sgn(m) < 0) {
      throw Error(ErrorKind::non_integral_multiplicity,
                  "multiplicity of " + to_string(lambda) + " is " + pilab::to_string(m));
    }
    rows.push_back({lambda, m.get_num().get_si()});
  }
  return rows;
}

std::vector<CocharacterRow> cocharacter(const Algebra& a, const Action& act, std::size_t n, std::uint64_t cap) {
  if (n > 5) throw Error(ErrorKind::guard_exceeded, "cocharacters are computed for n <= 5");
  return cocharacter(codimension(a, act, n, cap));
}

HPolynomial row_symmetrize(const Tableau& t, const HPolynomial& f) {
  check_tableau(t, f.n());
  return group_sum(t, f, false);
}

HPolynomial column_alternate(const Tableau& t, const HPolynomial& f) {
  check_tableau(t, f.n());
  return group_sum(columns_of(t), f, true);
}

HPolynomial young_symmetrizer_apply(const Tableau& t, const HPolynomial& f, Symmetrizer variant) {
  if (variant == Symmetrizer::e) return row_symmetrize(t, column_alternate(t, f));
  return column_alternate(t, row_symmetrize(t, f));
}

bool multiplicity_vanishing_check(const std::vector<CocharacterRow>& rows, std::size_t d, std::size_t p,
                                  std::size_t dim_a) {
  for (const auto& r : rows) {
    if (r.multiplicity == 0) continue;
    std::size_t tail = 0;
    for (std::size_t i = d; i < r.lambda.size(); ++i) tail += r.lambda[i];
    if (tail >= p || r.lambda.size() > dim_a) return false;
  }
  return true;
}

}  // namespace pilab
