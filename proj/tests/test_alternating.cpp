#include <doctest.h>

#include "pilab/alternating.hpp"
#include "pilab/errors.hpp"
#include "pilab/gallery.hpp"

using namespace pilab;

TEST_CASE("operator span of an H-simple algebra is all of End") {
  const Scenario swap = idempotents_cyclic(2);
  CHECK(operator_span_dim(swap.algebra, swap.action) == 4);
  CHECK(operator_span_dim(diagonal_algebra(2), Action::trivial(2)) == 2);
  CHECK(operator_span_dim(matrix_algebra(2), Action::trivial(4)) == 16);
}

TEST_CASE("alternating polynomials for a two-dimensional H-simple algebra") {
  const Scenario swap = idempotents_cyclic(2);
  for (std::size_t k = 1; k <= 2; ++k) {
    CAPTURE(k);
    const AlternatingPolynomial p = build_alternating(swap.algebra, swap.action, k);
    CHECK(p.sets.size() == 2 * k);
    CHECK(p.free.has_value());
    CHECK(p.mu != 0);
    const CheckReport rep = verify_alternating(p, swap.algebra, swap.action);
    CHECK(rep.pass());
  }
}

TEST_CASE("alternating polynomials for a one-dimensional algebra") {
  const AlternatingPolynomial p = build_alternating(diagonal_algebra(1), Action::trivial(1), 2);
  CHECK(verify_alternating(p, diagonal_algebra(1), Action::trivial(1)).pass());
}

TEST_CASE("build_alternating rejects algebras that are not H-simple") {
  try {
    build_alternating(diagonal_algebra(2), Action::trivial(2), 1);
    FAIL("expected NotHSimple");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_h_simple);
  }
}

TEST_CASE("Sweedler witness polynomials") {
  const Scenario s = sweedler();
  for (std::size_t n = 4; n <= 8; ++n) {
    CAPTURE(n);
    const AlternatingPolynomial p = sweedler_alternating(1, n);
    CHECK(p.f.n() == n);
    CHECK(verify_alternating(p, s.algebra, s.action).pass());
  }
  const AlternatingPolynomial p2 = sweedler_alternating(2, 8);
  CHECK(verify_alternating(p2, s.algebra, s.action).pass());
  CHECK_THROWS(sweedler_alternating(2, 7));
}
