#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pilab/actions.hpp"
#include "pilab/errors.hpp"
#include "pilab/exactalg.hpp"
#include "pilab/gallery.hpp"

using namespace pilab;

namespace {

Matrix random_invertible(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> v(-2, 2);
  while (true) {
    Matrix p(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p(i, j) = v(rng);
    if (determinant(p) != 0) return p;
  }
}

Subspace span_of(std::size_t d, std::initializer_list<std::size_t> idx) {
  std::vector<Vector> g;
  for (auto i : idx) g.push_back(unit_vector(d, i));
  return Subspace::span(d, g);
}

std::vector<oracle::Row> rows(const Subspace& s) { return s.vectors(); }

}  // namespace

TEST_CASE("non-associative structure constants are rejected") {
  std::vector<Rational> mult(8);
  mult[(0 * 2 + 0) * 2 + 1] = 1;  // e1 e1 = e2
  mult[(1 * 2 + 0) * 2 + 0] = 1;  // e2 e1 = e1
  CHECK_THROWS_AS(Algebra::make(2, mult), AssociativityViolation);
  try {
    Algebra::make(2, mult);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::associativity_violation);
  }
}

TEST_CASE("a wrong unit is rejected") {
  try {
    Algebra::make(2, diagonal_algebra(2).structure(), Vector{1, 0});
    FAIL("expected a unit violation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::unit_violation);
  }
  CHECK(diagonal_algebra(2).find_unit() == Vector{1, 1});
}

TEST_CASE("radicals of standard algebras") {
  const RadicalResult ut2 = radical(upper_triangular(2));
  CHECK(ut2.j == span_of(3, {1}));
  CHECK(ut2.p == 2);
  const RadicalResult ut3 = radical(upper_triangular(3));
  CHECK(ut3.j.dim() == 3);
  CHECK(ut3.p == 3);
  const RadicalResult m2 = radical(matrix_algebra(2));
  CHECK(m2.j.is_zero());
  CHECK(m2.p == 1);
  const RadicalResult sw = radical(sweedler_hopf().h.algebra);
  CHECK(sw.j == span_of(4, {2, 3}));
  CHECK(sw.p == 2);
}

TEST_CASE("radical is invariant under change of basis") {
  std::mt19937 rng(2);
  for (int t = 0; t < 5; ++t) {
    const Matrix p = random_invertible(rng, 6);
    const Algebra a = change_basis(upper_triangular(3), p);
    const RadicalResult r = radical(a);
    CHECK(r.j.dim() == 3);
    CHECK(r.p == 3);
  }
}

TEST_CASE("central idempotents of a split semisimple algebra") {
  const Algebra a = direct_sum({matrix_algebra(2), diagonal_algebra(1), matrix_algebra(2)});
  const auto es = central_idempotents(a);
  REQUIRE(es.size() == 3);
  Vector sum(a.dim());
  for (std::size_t i = 0; i < es.size(); ++i) {
    axpy(sum, 1, es[i]);
    CHECK(a.multiply(es[i], es[i]) == es[i]);
    for (std::size_t j = 0; j < es.size(); ++j)
      if (i != j) CHECK(is_zero(a.multiply(es[i], es[j])));
    for (std::size_t k = 0; k < a.dim(); ++k)
      CHECK(a.multiply(es[i], unit_vector(a.dim(), k)) == a.multiply(unit_vector(a.dim(), k), es[i]));
  }
  CHECK(sum == *a.unit());
}

TEST_CASE("split H-simplicity via the Burnside test") {
  CHECK(is_h_simple(matrix_algebra(2), Action::trivial(4)).simple);
  CHECK_FALSE(is_h_simple(diagonal_algebra(2), Action::trivial(2)).simple);
  const Scenario swap = idempotents_cyclic(2);
  CHECK(is_h_simple(swap.algebra, swap.action).simple);
}

TEST_CASE("H-simple components of every gallery example") {
  for (const auto& ex : exponent_examples()) {
    CAPTURE(ex.name);
    const Scenario s = ex.build();
    const Decomposition d = wedderburn_malcev(s.algebra, s.action);
    Subspace b(s.algebra.dim());
    for (const auto& c : d.components) b = b + c;
    const auto comps = h_simple_components(s.algebra, s.action, b);
    Subspace total(s.algebra.dim());
    std::size_t dims = 0;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      total = total + comps[i];
      dims += comps[i].dim();
      CHECK_FALSE(first_non_invariant(s.action, comps[i]).has_value());
      CHECK(is_h_simple(restrict(s.algebra, comps[i]), restrict(s.action, comps[i])).simple);
      for (std::size_t j = 0; j < comps.size(); ++j)
        if (i != j) CHECK(subspace_product(s.algebra, comps[i], comps[j]).is_zero());
    }
    CHECK(total == b);
    CHECK(dims == b.dim());
  }
}

TEST_CASE("invariant Wedderburn-Malcev decompositions verify on the gallery") {
  for (const auto& ex : exponent_examples()) {
    CAPTURE(ex.name);
    const Scenario s = ex.build();
    const Decomposition d = wedderburn_malcev(s.algebra, s.action);
    const CheckReport rep = verify_decomposition(s.algebra, s.action, d);
    CHECK(rep.pass());
    CHECK(pi_exponent(d) == ex.expected);
  }
}

TEST_CASE("the lift corrects a twisted basis") {
  std::mt19937 rng(7);
  for (int t = 0; t < 4; ++t) {
    const Matrix p = random_invertible(rng, 6);
    const Algebra a = change_basis(upper_triangular(3), p);
    const Decomposition d = wedderburn_malcev(a, Action::trivial(6));
    CHECK(verify_decomposition(a, Action::trivial(6), d).pass());
    CHECK(pi_exponent(d) == 3);
  }
}

TEST_CASE("the equivariant lift works in a twisted basis with a group action") {
  std::mt19937 rng(19);
  const Scenario base = ut2ut2_swap();
  for (int t = 0; t < 3; ++t) {
    const Matrix p = random_invertible(rng, 6);
    const Matrix pinv = *inverse(p);
    std::vector<std::pair<Matrix, bool>> assignment;
    for (const auto& [m, anti] : base.assignment) assignment.emplace_back(pinv * m * p, anti);
    const Scenario s = make_group_scenario("twisted", change_basis(base.algebra, p), *base.group, assignment);
    const Decomposition d = wedderburn_malcev(s.algebra, s.action);
    CHECK(verify_decomposition(s.algebra, s.action, d).pass());
    CHECK(pi_exponent(d) == 4);
  }
}

TEST_CASE("wedderburn_malcev reports what it cannot average") {
  const Scenario sw = sweedler();
  try {
    wedderburn_malcev(sw.algebra, sw.action);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK((e.kind() == ErrorKind::averaging_unavailable || e.kind() == ErrorKind::not_invariant));
  }
  std::vector<Rational> nil(8);
  nil[(0 * 2 + 0) * 2 + 1] = 1;  // e1^2 = e2, no unit
  CHECK_THROWS_AS(wedderburn_malcev(Algebra::make(2, nil), Action::trivial(2)), ValidationError);
}

TEST_CASE("d(A) with and without repeated indices agree on the gallery") {
  for (const auto& ex : exponent_examples()) {
    CAPTURE(ex.name);
    const Scenario s = ex.build();
    const Decomposition d = wedderburn_malcev(s.algebra, s.action);
    std::vector<std::vector<oracle::Row>> comps;
    for (const auto& c : d.components) comps.push_back(rows(c));
    CHECK(oracle::exponent_with_repeats(s.algebra, comps, rows(d.radical), d.nilpotency_index) == pi_exponent(d));
  }
}

TEST_CASE("verify_decomposition rejects the non-invariant Sweedler complement") {
  const Scenario s = sweedler();
  const CheckReport rep = verify_decomposition(s.algebra, s.action, *s.decomposition);
  const CheckItem* bad = rep.first_failure();
  REQUIRE(bad != nullptr);
  CHECK(bad->name.rfind("J invariant under ", 0) == 0);
  CHECK(bad->name == "J invariant under g_b");
}
