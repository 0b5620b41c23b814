#include <doctest.h>

#include "oracles.hpp"
#include "pilab/errors.hpp"
#include "pilab/exactalg.hpp"
#include "pilab/gallery.hpp"
#include "pilab/symfun.hpp"

using namespace pilab;

namespace {

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("partitions are complete, distinct and in reverse lexicographic order") {
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto ps = partitions(n);
    CHECK(ps.size() == oracle::partition_count(n));
    for (std::size_t i = 1; i < ps.size(); ++i) CHECK(ps[i - 1] > ps[i]);
    for (const auto& p : ps) {
      CHECK(std::accumulate(p.begin(), p.end(), std::size_t{0}) == n);
      CHECK(std::is_sorted(p.rbegin(), p.rend()));
    }
  }
  CHECK(partitions(3).front() == Partition{3});
  CHECK(partitions(3).back() == Partition{1, 1, 1});
  CHECK_THROWS(partitions(0));
  CHECK_THROWS(partitions(13));
}

TEST_CASE("hook formula agrees with standard tableau counts") {
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& p : partitions(n)) {
      CAPTURE(to_string(p));
      CHECK(hook_dim(p) == oracle::syt_count(p));
    }
}

TEST_CASE("character table orthogonality") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto ps = partitions(n);
    Rational class_sum = 0;
    for (const auto& mu : ps) class_sum += Rational(1, static_cast<unsigned long>(centralizer_size(mu)));
    CHECK(class_sum == 1);
    for (const auto& l : ps) {
      CHECK(irreducible_character(l, Partition(n, 1)) == static_cast<long long>(hook_dim(l)));
      for (const auto& m : ps) {
        Rational inner = 0;
        for (const auto& mu : ps)
          inner += Rational(static_cast<long>(irreducible_character(l, mu) * irreducible_character(m, mu))) /
                   static_cast<unsigned long>(centralizer_size(mu));
        CHECK(inner == (l == m ? 1 : 0));
      }
    }
  }
  // Sign character.
  CHECK(irreducible_character({1, 1, 1}, {2, 1}) == -1);
  CHECK(irreducible_character({2, 1}, {3}) == -1);
}

TEST_CASE("cocharacters are consistent with codimensions") {
  struct Case {
    Algebra a;
    Action act;
  };
  const Scenario flip = m2_sign_flip();
  const Scenario sw = sweedler();
  std::vector<Case> cases{{matrix_algebra(2), Action::trivial(4)},
                          {upper_triangular(2), Action::trivial(3)},
                          {diagonal_algebra(2), Action::trivial(2)},
                          {flip.algebra, flip.action},
                          {sw.algebra, sw.action}};
  for (const auto& c : cases) {
    for (std::size_t n = 1; n <= 3; ++n) {
      const EvaluationImage img = codimension(c.a, c.act, n);
      const auto rows = cocharacter(img);
      std::uint64_t total = 0;
      for (const auto& r : rows) {
        CHECK(r.multiplicity >= 0);
        total += static_cast<std::uint64_t>(r.multiplicity) * hook_dim(r.lambda);
      }
      CHECK(total == img.rank());
    }
  }
  // A commutative algebra has cocharacter chi_(n).
  const auto rows = cocharacter(diagonal_algebra(2), Action::trivial(2), 4);
  for (const auto& r : rows) CHECK(r.multiplicity == (r.lambda == Partition{4} ? 1 : 0));
  CHECK_THROWS(cocharacter(diagonal_algebra(1), Action::trivial(1), 6));
}

TEST_CASE("image_trace of the identity is the codimension") {
  const EvaluationImage img = codimension(upper_triangular(2), Action::trivial(3), 3);
  CHECK(image_trace(img, {0, 1, 2}) == img.rank());
}

TEST_CASE("vanishing of multiplicities outside the strip") {
  const Algebra ut2 = upper_triangular(2);
  const RadicalResult rad = radical(ut2);
  const Decomposition d = wedderburn_malcev(ut2, Action::trivial(3));
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto rows = cocharacter(ut2, Action::trivial(3), n);
    CHECK(multiplicity_vanishing_check(rows, pi_exponent(d), rad.p, 3));
  }
  CHECK_FALSE(multiplicity_vanishing_check({{{1, 1, 1}, 1}}, 1, 2, 3));
  CHECK_FALSE(multiplicity_vanishing_check({{{1, 1, 1, 1}, 1}}, 4, 2, 3));
}

TEST_CASE("Young symmetrizers") {
  const ActionAlgebra h = ActionAlgebra::trivial();
  const HPolynomial f = HPolynomial::word(h, {0, 1, 2});
  const Tableau t{{0, 1}, {2}};
  const Partition shape{2, 1};
  const Rational scale(static_cast<long>(factorial(3) / hook_dim(shape)));
  for (auto variant : {Symmetrizer::e, Symmetrizer::e_star}) {
    const HPolynomial ef = young_symmetrizer_apply(t, f, variant);
    CHECK_FALSE(ef.is_zero());
    // e_T is a quasi-idempotent: e_T e_T = (n!/f^lambda) e_T.
    CHECK(young_symmetrizer_apply(t, ef, variant) == ef.scaled(scale));
  }
  const HPolynomial col = column_alternate(t, f);
  CHECK(col.permuted({2, 1, 0}) == col.scaled(-1));
  const HPolynomial row = row_symmetrize(t, f);
  CHECK(row.permuted({1, 0, 2}) == row);

  // Swapping two entries of a column: e*_{T'} f = -e*_T((ij) f).
  const Tableau swapped{{2, 1}, {0}};
  const HPolynomial lhs = young_symmetrizer_apply(swapped, f, Symmetrizer::e_star);
  const HPolynomial rhs = young_symmetrizer_apply(t, f.permuted({2, 1, 0}), Symmetrizer::e_star).scaled(-1);
  CHECK(lhs == rhs);

  // Shapes with too many rows give identities of a commutative algebra.
  const Tableau column{{0}, {1}, {2}};
  CHECK(is_identity(young_symmetrizer_apply(column, f, Symmetrizer::e), diagonal_algebra(2), Action::trivial(2)));
}
