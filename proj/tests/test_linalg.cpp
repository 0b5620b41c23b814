#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pilab/errors.hpp"
#include "pilab/kernels.hpp"
#include "pilab/linalg.hpp"
#include "pilab/parallel.hpp"
#include "pilab/subspace.hpp"

using namespace pilab;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int range, int zero_bias) {
  std::uniform_int_distribution<int> val(-range, range), den(1, 4), z(0, 9);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (z(rng) >= zero_bias) {
        m(r, c) = Rational(val(rng), den(rng));
        m(r, c).canonicalize();
      }
  return m;
}

std::vector<oracle::Row> rows_of(const Matrix& m) {
  std::vector<oracle::Row> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row_vector(r));
  return out;
}

}  // namespace

TEST_CASE("rationals parse exactly and reject malformed input") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(to_string(parse_rational("-4/6")) == "-2/3");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("0.5"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("rref is canonical and its rank matches the Bareiss oracle") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
    const Matrix m = random_matrix(rng, rows, cols, 3, 4);
    const Echelon e = rref(m);
    CHECK(e.rank() == oracle::rank(rows_of(m)));
    for (std::size_t k = 0; k < e.rank(); ++k) {
      CHECK(e.basis(k, e.pivots[k]) == 1);
      for (std::size_t i = 0; i < e.rank(); ++i)
        if (i != k) CHECK(e.basis(i, e.pivots[k]) == 0);
    }
    // Row operations do not change the canonical form.
    Matrix shuffled = m;
    if (rows > 1) {
      for (std::size_t c = 0; c < cols; ++c) shuffled(0, c) += shuffled(rows - 1, c) * 3;
    }
    CHECK(rref(shuffled).basis == e.basis);
  }
}

TEST_CASE("nullspace, solve, inverse and determinant agree with each other") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const Matrix m = random_matrix(rng, n, n, 4, 3);
    const Matrix ns = nullspace(m);
    CHECK(ns.rows() + rank(m) == n);
    for (std::size_t k = 0; k < ns.rows(); ++k) CHECK(is_zero(m.apply(ns.row_vector(k))));
    const auto inv = inverse(m);
    CHECK(inv.has_value() == (determinant(m) != 0));
    if (inv) {
      CHECK((m * *inv).is_identity());
      Vector b(n);
      for (std::size_t i = 0; i < n; ++i) b[i] = Rational(static_cast<long>(i) - 2);
      const auto x = solve(m, b);
      REQUIRE(x.has_value());
      CHECK(m.apply(*x) == b);
      CHECK(determinant(m) * determinant(*inv) == 1);
    }
  }
  Matrix singular(2, 2);
  singular(0, 0) = 1;
  CHECK_FALSE(solve(singular, Vector{0, 1}).has_value());
}

TEST_CASE("scalar and AVX2 modular kernels are bit-identical") {
  if (!kernels::cpu_supports(kernels::Isa::avx2)) {
    MESSAGE("AVX2 not available; only the scalar kernel is exercised");
    return;
  }
  std::mt19937_64 rng(3);
  for (std::size_t n : {1u, 3u, 4u, 7u, 16u, 33u, 257u}) {
    std::vector<double> y(n), x(n);
    for (auto& v : y) v = static_cast<double>(rng() % kernels::modulus);
    for (auto& v : x) v = static_cast<double>(rng() % kernels::modulus);
    const double c = static_cast<double>(rng() % kernels::modulus);
    auto ys = y, ya = y;
    kernels::submul_mod(ys, x, c, kernels::Isa::scalar);
    kernels::submul_mod(ya, x, c, kernels::Isa::avx2);
    CHECK(ys == ya);
    for (std::size_t i = 0; i < n; ++i) {
      const auto want = (static_cast<unsigned __int128>(y[i]) + kernels::modulus * kernels::modulus -
                         static_cast<unsigned __int128>(c) * static_cast<std::uint64_t>(x[i])) %
                        kernels::modulus;
      CHECK(ys[i] == static_cast<double>(static_cast<std::uint64_t>(want)));
    }
    kernels::scale_mod(ys, c, kernels::Isa::scalar);
    kernels::scale_mod(ya, c, kernels::Isa::avx2);
    CHECK(ys == ya);
  }
}

TEST_CASE("row_space gives the same echelon form for every ISA and thread count") {
  std::mt19937 rng(17);
  const Matrix m = random_matrix(rng, 60, 24, 5, 6);
  auto run = [&] {
    RowSpaceStats st;
    Echelon e = row_space(m.rows(), m.cols(), [&](std::size_t i) { return m.row_vector(i); }, &st);
    CHECK(st.exact_rank == e.rank());
    CHECK(st.modular_rank <= st.exact_rank);
    return e;
  };
  const Echelon ref = rref(m);
  std::vector<kernels::Isa> isas{kernels::Isa::scalar};
  if (kernels::cpu_supports(kernels::Isa::avx2)) isas.push_back(kernels::Isa::avx2);
  for (auto isa : isas)
    for (std::size_t threads : {1u, 3u}) {
      kernels::force_isa(isa);
      set_thread_count(threads);
      const Echelon e = run();
      CHECK(e.basis == ref.basis);
      CHECK(e.pivots == ref.pivots);
    }
  kernels::force_isa(std::nullopt);
  set_thread_count(0);
}

TEST_CASE("row_space stays exact when the prime divides a denominator") {
  const Rational bad(1, static_cast<long>(kernels::modulus));
  Matrix m(2, 2);
  m(0, 0) = bad;
  m(1, 1) = 1;
  RowSpaceStats st;
  const Echelon e = row_space(2, 2, [&](std::size_t i) { return m.row_vector(i); }, &st);
  CHECK_FALSE(st.modular_prepass);
  CHECK(e.rank() == 2);
}

TEST_CASE("row_space catches rows that are dependent only modulo the prime") {
  Matrix m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(1, 1) = 1 + static_cast<long>(kernels::modulus);
  const Echelon e = row_space(2, 2, [&](std::size_t i) { return m.row_vector(i); });
  CHECK(e.rank() == 2);
}

TEST_CASE("subspaces are canonical") {
  const Subspace a = Subspace::span(3, {Vector{1, 1, 0}, Vector{0, 1, 1}});
  const Subspace b = Subspace::span(3, {Vector{1, 2, 1}, Vector{1, 0, -1}});
  CHECK(a == b);
  CHECK(a.contains(Vector{2, 3, 1}));
  CHECK_FALSE(a.contains(Vector{0, 0, 1}));
  const Subspace c = Subspace::span(3, {Vector{0, 0, 1}});
  CHECK(intersect(a, c).is_zero());
  CHECK((a + c).dim() == 3);
}

TEST_CASE("parallel_for covers every index exactly once") {
  for (std::size_t threads : {1u, 2u, 5u}) {
    set_thread_count(threads);
    std::vector<int> hits(101);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
    CHECK_THROWS(parallel_for(10, [](std::size_t i) {
      if (i == 7) throw Error(ErrorKind::validation_error, "boom");
    }));
  }
  set_thread_count(0);
}
