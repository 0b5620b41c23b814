#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pilab/actions.hpp"
#include "pilab/errors.hpp"
#include "pilab/evaluator.hpp"
#include "pilab/gallery.hpp"
#include "pilab/identities.hpp"

using namespace pilab;

namespace {

HPolynomial random_polynomial(std::mt19937& rng, std::size_t n, std::size_t dim_h, std::size_t terms) {
  HPolynomial f(n, dim_h);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t t = 0; t < terms; ++t) {
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::size_t> labels(n);
    for (auto& l : labels) l = rng() % dim_h;
    f.add_term({perm, labels}, Rational(static_cast<long>(rng() % 7) - 3));
  }
  return f;
}

std::vector<Scenario> small_gallery() {
  std::vector<Scenario> out;
  for (const auto& ex : exponent_examples()) out.push_back(ex.build());
  out.push_back(sweedler());
  out.push_back(m2_sign_flip());
  out.push_back(m2_transpose());
  out.push_back(m2_dual_z2());
  return out;
}

}  // namespace

TEST_CASE("H-polynomials are multilinear and canonical") {
  const ActionAlgebra h = group_algebra(GroupData::cyclic(2)).h;
  HPolynomial f(2, 2);
  CHECK_THROWS(f.add_term({{0, 0}, {0, 0}}, 1));
  CHECK_THROWS(f.add_term({{0, 1}, {0, 2}}, 1));
  f.add_term({{0, 1}, {0, 1}}, 2);
  f.add_term({{0, 1}, {0, 1}}, -2);
  CHECK(f.is_zero());
  const HPolynomial c = commutator(h);
  CHECK(c.size() == 2);
  CHECK(c.permuted({1, 0}) == c.scaled(-1));
  CHECK(alternate(HPolynomial::word(h, {0, 1}), {0, 1}) == c);
  CHECK(to_string(c, h) == "x1 x2 - x2 x1");
}

TEST_CASE("the prefix-sharing evaluator matches direct evaluation") {
  std::mt19937 rng(31);
  const Scenario s = m2_transpose();
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 1 + rng() % 4;
    const HPolynomial f = random_polynomial(rng, n, 2, 1 + rng() % 12);
    const Evaluator ev(f, s.algebra, s.action);
    std::vector<Vector> args(n, Vector(4));
    for (auto& a : args)
      for (auto& x : a) x = Rational(static_cast<long>(rng() % 5) - 2);
    CHECK(ev(args) == evaluate(f, s.algebra, s.action, args));
    std::vector<std::size_t> tuple(n);
    for (auto& x : tuple) x = rng() % 4;
    CHECK(ev.at_basis(tuple) == evaluate_basis(f, s.algebra, s.action, tuple));
  }
}

TEST_CASE("identity fixtures") {
  const Scenario flip = m2_sign_flip();
  CHECK(is_identity(symmetrized_commutator(flip.action.h(), 1), flip.algebra, flip.action));
  CHECK_FALSE(is_identity(symmetrized_commutator(flip.action.h(), -1), flip.algebra, flip.action));
  const Scenario tr = m2_transpose();
  CHECK(is_identity(symmetrized_commutator(tr.action.h(), -1), tr.algebra, tr.action));
  CHECK_FALSE(is_identity(symmetrized_commutator(tr.action.h(), 1), tr.algebra, tr.action));
  const Scenario dual = m2_dual_z2();
  CHECK(is_identity(labelled_commutator(dual.action.h(), 0), dual.algebra, dual.action));
  CHECK_FALSE(is_identity(labelled_commutator(dual.action.h(), 1), dual.algebra, dual.action));
  CHECK_FALSE(is_identity(commutator(ActionAlgebra::trivial()), matrix_algebra(2), Action::trivial(4)));
  CHECK(is_identity(commutator(ActionAlgebra::trivial()), diagonal_algebra(3), Action::trivial(3)));
}

TEST_CASE("monomial basis order and size") {
  const auto b = monomial_basis(3, 2);
  CHECK(b.size() == 6 * 8);
  CHECK(std::is_sorted(b.begin(), b.end()));
  CHECK_THROWS_AS(monomial_basis(9, 6, 1000), ResourceExceeded);
}

TEST_CASE("ordinary codimensions match the dense oracle on the gallery") {
  for (const Scenario& s : small_gallery()) {
    CAPTURE(s.name);
    const Action triv = Action::trivial(s.algebra.dim());
    for (std::size_t n = 1; n <= 3; ++n) {
      CAPTURE(n);
      CHECK(codimension(s.algebra, triv, n).rank() == oracle::codimension(s.algebra, triv, n));
    }
  }
}

TEST_CASE("H-codimensions match the dense oracle on small inputs") {
  for (const Scenario& s : small_gallery()) {
    CAPTURE(s.name);
    const std::size_t max_n = s.algebra.dim() * s.action.dim_h() <= 16 ? 3 : 2;
    for (std::size_t n = 1; n <= max_n; ++n) {
      CAPTURE(n);
      CHECK(codimension(s.algebra, s.action, n).rank() == oracle::codimension(s.algebra, s.action, n));
    }
  }
}

TEST_CASE("known codimension sequences") {
  // Commutative: c_n = 1. M_2: 1, 2, 5 for n = 1, 2, 3 (all of P_n).
  for (std::size_t n = 1; n <= 3; ++n) CHECK(codimension(diagonal_algebra(2), Action::trivial(2), n).rank() == 1);
  CHECK(codimension(matrix_algebra(2), Action::trivial(4), 2).rank() == 2);
  CHECK(codimension(matrix_algebra(2), Action::trivial(4), 3).rank() == 6);
  // UT_2: c_n = 2^{n-1}(n-2) + 2.
  CHECK(codimension(upper_triangular(2), Action::trivial(3), 3).rank() == 6);
}

TEST_CASE("graded codimension equals the codimension of the dual action") {
  for (const Scenario& s : {m2_dual_z2(), s3_graded_m2m2(), fs3_natural_grading()}) {
    CAPTURE(s.name);
    for (std::size_t n = 1; n <= 2; ++n)
      CHECK(graded_codimension(*s.graded, n).rank() == codimension(s.algebra, s.action, n).rank());
  }
}

TEST_CASE("codimension bounds") {
  for (const Scenario& s : small_gallery()) {
    CAPTURE(s.name);
    for (std::size_t n = 1; n <= 2; ++n) {
      const BoundsResult b = check_bounds(s.algebra, s.action, n);
      CHECK(b.report.pass());
      CHECK(b.report.items.size() == 3);
    }
  }
}

TEST_CASE("the entry cap is enforced") {
  CHECK_THROWS_AS(codimension(matrix_algebra(2), Action::trivial(4), 3, 100), ResourceExceeded);
  const Scenario s = s3_graded_m2m2();
  CHECK_THROWS_AS(graded_codimension(*s.graded, 3, 100), ResourceExceeded);
}

TEST_CASE("regev polynomial") {
  try {
    regev(3);
    FAIL("expected FeasibilityLimit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::feasibility_limit);
  }
  const HPolynomial r1 = regev(1);
  CHECK(r1.n() == 2);
  CHECK(evaluate_basis(r1, matrix_algebra(1), Action::trivial(1), {0, 0}) != Vector{0});
  const HPolynomial r2 = regev(2);
  CHECK(r2.n() == 8);
  // Alternating in the x variables and in the y variables.
  std::vector<std::size_t> swap_x{1, 0, 2, 3, 4, 5, 6, 7};
  std::vector<std::size_t> swap_y{0, 1, 2, 3, 5, 4, 6, 7};
  CHECK(r2.permuted(swap_x) == r2.scaled(-1));
  CHECK(r2.permuted(swap_y) == r2.scaled(-1));
}
