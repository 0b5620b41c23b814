#include "pilab/identities.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#include "pilab/errors.hpp"
#include "pilab/evaluator.hpp"
#include "pilab/parallel.hpp"

namespace pilab {

namespace {

double power(double base, std::size_t e) {
  double r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

double factorial(std::size_t n) {
  double r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= static_cast<double>(i);
  return r;
}

void require_within(const char* what, double entries, std::uint64_t cap) {
  if (entries > static_cast<double>(cap)) throw ResourceExceeded(what, entries, static_cast<double>(cap));
}

std::vector<std::vector<std::size_t>> all_permutations(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int sign_of(const std::vector<std::size_t>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

// Index of (t_{perm[0]}, ..., t_{perm[n-1]}) for the tuple with index `tuple`.
struct TupleIndexer {
  std::size_t n, base;

  std::vector<std::size_t> digits(std::size_t idx) const {
    std::vector<std::size_t> d(n);
    for (std::size_t j = n; j-- > 0;) {
      d[j] = idx % base;
      idx /= base;
    }
    return d;
  }
  std::size_t index(const std::vector<std::size_t>& d) const {
    std::size_t idx = 0;
    for (auto x : d) idx = idx * base + x;
    return idx;
  }
};

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

std::uint64_t resource_cap(std::optional<std::uint64_t> fallback) {
  if (const char* env = std::getenv("PILAB_CAP")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) return static_cast<std::uint64_t>(v);
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::validation_error, std::string("PILAB_CAP is not a positive integer: ") + env);
  }
  return fallback.value_or(default_cap);
}

std::vector<Monomial> monomial_basis(std::size_t n, std::size_t dim_h, std::uint64_t cap) {
  if (n == 0) throw Error(ErrorKind::validation_error, "monomial basis needs n >= 1");
  require_within("monomial basis", factorial(n) * power(static_cast<double>(dim_h), n), cap);
  const std::size_t labelings = ipow(dim_h, n);
  const TupleIndexer lab{n, dim_h};
  std::vector<Monomial> out;
  for (const auto& p : all_permutations(n))
    for (std::size_t l = 0; l < labelings; ++l) out.push_back({p, lab.digits(l)});
  return out;
}

std::vector<HPolynomial> monomial_polynomials(std::size_t n, const ActionAlgebra& h, std::uint64_t cap) {
  std::vector<HPolynomial> out;
  for (const auto& m : monomial_basis(n, h.dim(), cap)) {
    HPolynomial f(n, h.dim());
    f.add_term(m, 1);
    out.push_back(std::move(f));
  }
  return out;
}

bool is_identity(const HPolynomial& f, const Algebra& a, const Action& act, std::uint64_t cap) {
  const std::size_t n = f.n();
  require_within("identity test tuples", power(static_cast<double>(a.dim()), n), cap);
  const Evaluator eval(f, a, act);
  const std::size_t count = ipow(a.dim(), n);
  const TupleIndexer tuples{n, a.dim()};
  std::vector<char> nonzero(count, 0);
  parallel_for(count, [&](std::size_t i) { nonzero[i] = !is_zero(eval.at_basis(tuples.digits(i))); });
  return std::find(nonzero.begin(), nonzero.end(), 1) == nonzero.end();
}

EvaluationImage codimension(const Algebra& a, const Action& act, std::size_t n, std::uint64_t cap) {
  if (act.dim_a() != a.dim()) throw Error(ErrorKind::dimension_mismatch, "action does not match the algebra");
  if (n == 0) throw Error(ErrorKind::validation_error, "codimension needs n >= 1");
  const std::size_t da = a.dim();
  const std::size_t dh = act.dim_h();
  const double rows_d = factorial(n) * power(static_cast<double>(dh), n);
  const double cols_d = power(static_cast<double>(da), n + 1);
  require_within("evaluation matrix", rows_d * cols_d, cap);

  const auto monos = monomial_basis(n, dh, cap);
  const std::size_t tuples = ipow(da, n);
  const std::size_t labelings = ipow(dh, n);
  const TupleIndexer pos{n, da};
  const TupleIndexer lab{n, dh};

  // w[l * tuples + s] = prod_j rho(h_j) e_{s_j} for labeling l and position tuple s.
  std::vector<Vector> w(labelings * tuples);
  {
    std::vector<Vector> level(dh * da);
    for (std::size_t h = 0; h < dh; ++h)
      for (std::size_t s = 0; s < da; ++s) level[h * da + s] = act.op(h).column(s);
    std::vector<Vector> cur = level;
    std::size_t cur_lab = dh, cur_pos = da;
    for (std::size_t j = 1; j < n; ++j) {
      std::vector<Vector> next(cur_lab * dh * cur_pos * da);
      const std::size_t next_pos = cur_pos * da;
      parallel_for(cur_lab * dh, [&](std::size_t lh) {
        const std::size_t l = lh / dh, h = lh % dh;
        for (std::size_t p = 0; p < cur_pos; ++p) {
          const Vector& left = cur[l * cur_pos + p];
          for (std::size_t s = 0; s < da; ++s) {
            Vector& slot = next[lh * next_pos + p * da + s];
            slot = is_zero(left) ? Vector(da) : a.multiply(left, level[h * da + s]);
          }
        }
      });
      cur = std::move(next);
      cur_lab *= dh;
      cur_pos = next_pos;
    }
    w = std::move(cur);
  }

  auto row_at = [&](std::size_t r) {
    const Monomial& m = monos[r];
    const std::size_t l = lab.index(m.labels);
    Vector row(tuples * da);
    std::vector<std::size_t> s(n);
    for (std::size_t t = 0; t < tuples; ++t) {
      const auto digits = pos.digits(t);
      for (std::size_t j = 0; j < n; ++j) s[j] = digits[m.perm[j]];
      const Vector& v = w[l * tuples + pos.index(s)];
      for (std::size_t k = 0; k < da; ++k) row[t * da + k] = v[k];
    }
    return row;
  };
  EvaluationImage img;
  img.n = n;
  img.dim_a = da;
  img.basis = row_space(monos.size(), tuples * da, row_at, &img.stats);
  return img;
}

EvaluationImage graded_codimension(const GradedAlgebra& x, std::size_t n, std::uint64_t cap) {
  if (n == 0) throw Error(ErrorKind::validation_error, "codimension needs n >= 1");
  const Algebra& a = x.algebra;
  const std::size_t da = a.dim();
  const std::size_t dg = x.group.order();
  require_within("evaluation matrix",
                 factorial(n) * power(static_cast<double>(dg), n) * power(static_cast<double>(da), n + 1), cap);
  const auto monos = monomial_basis(n, dg, cap);
  const std::size_t tuples = ipow(da, n);
  const TupleIndexer pos{n, da};

  // Plain products e_{s_1} ... e_{s_n}.
  std::vector<Vector> prod(tuples);
  parallel_for(tuples, [&](std::size_t t) {
    const auto s = pos.digits(t);
    Vector v = unit_vector(da, s[0]);
    for (std::size_t j = 1; j < n && !is_zero(v); ++j) v = a.multiply(v, unit_vector(da, s[j]));
    prod[t] = std::move(v);
  });

  auto row_at = [&](std::size_t r) {
    const Monomial& m = monos[r];
    Vector row(tuples * da);
    std::vector<std::size_t> s(n);
    for (std::size_t t = 0; t < tuples; ++t) {
      const auto digits = pos.digits(t);
      bool homogeneous = true;
      for (std::size_t j = 0; j < n; ++j) {
        s[j] = digits[m.perm[j]];
        homogeneous = homogeneous && x.degree[s[j]] == m.labels[j];
      }
      if (!homogeneous) continue;
      const Vector& v = prod[pos.index(s)];
      for (std::size_t k = 0; k < da; ++k) row[t * da + k] = v[k];
    }
    return row;
  };
  EvaluationImage img;
  img.n = n;
  img.dim_a = da;
  img.basis = row_space(monos.size(), tuples * da, row_at, &img.stats);
  return img;
}

BoundsResult check_bounds(const Algebra& a, const Action& act, std::size_t n, std::uint64_t cap) {
  BoundsResult res;
  res.n = n;
  res.c_ordinary = codimension(a, Action::trivial(a.dim()), n, cap).rank();
  res.c_h = codimension(a, act, n, cap).rank();
  mpz_class dim_bound, h_pow;
  mpz_ui_pow_ui(dim_bound.get_mpz_t(), a.dim(), n + 1);
  mpz_ui_pow_ui(h_pow.get_mpz_t(), act.dim_h(), n);
  res.dim_bound = dim_bound;
  res.h_bound = h_pow * static_cast<unsigned long>(res.c_ordinary);
  const Rational ch = static_cast<unsigned long>(res.c_h);
  const Rational co = static_cast<unsigned long>(res.c_ordinary);
  res.report.add("c_n <= c^H_n", co <= ch, std::to_string(res.c_ordinary) + " <= " + std::to_string(res.c_h));
  res.report.add("c^H_n <= (dim H)^n c_n", ch <= res.h_bound,
                 std::to_string(res.c_h) + " <= " + to_string(res.h_bound));
  res.report.add("c^H_n <= (dim A)^(n+1)", ch <= res.dim_bound,
                 std::to_string(res.c_h) + " <= " + to_string(res.dim_bound));
  return res;
}

HPolynomial regev(std::size_t ell) {
  if (ell == 0) throw Error(ErrorKind::validation_error, "regev needs ell >= 1");
  if (ell >= 3) {
    throw Error(ErrorKind::feasibility_limit,
                "regev(" + std::to_string(ell) + ") has too many terms to expand symbolically");
  }
  const std::size_t m = ell * ell;
  HPolynomial f(2 * m, 1);
  const auto perms = all_permutations(m);
  for (const auto& s : perms) {
    const int ss = sign_of(s);
    for (const auto& t : perms) {
      Monomial mono{{}, std::vector<std::size_t>(2 * m, 0)};
      std::size_t start = 0;
      for (std::size_t b = 0; b < ell; ++b) {
        const std::size_t len = 2 * b + 1;
        for (std::size_t i = start; i < start + len; ++i) mono.perm.push_back(s[i]);
        for (std::size_t i = start; i < start + len; ++i) mono.perm.push_back(m + t[i]);
        start += len;
      }
      f.add_term(mono, ss * sign_of(t));
    }
  }
  return f;
}

}  // namespace pilab
