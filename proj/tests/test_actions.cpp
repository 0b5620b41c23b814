#include <doctest.h>

#include <random>

#include "pilab/actions.hpp"
#include "pilab/errors.hpp"
#include "pilab/gallery.hpp"

using namespace pilab;

namespace {

std::vector<std::pair<std::string, HopfData>> hopf_gallery() {
  const GroupData z2 = GroupData::cyclic(2);
  const GroupData s3 = GroupData::symmetric3();
  const HopfData sw = sweedler_hopf();
  return {{"FZ2", group_algebra(z2)},          {"(FZ2)*", dual_group_hopf(z2)},
          {"FS3", group_algebra(s3)},          {"(FS3)*", dual_group_hopf(s3)},
          {"FZ3", group_algebra(GroupData::cyclic(3))}, {"sweedler", sw},
          {"sweedler dual", dual_hopf(sw)}};
}

Rational eps_of(const HopfData& h, const Vector& t) {
  Rational e = 0;
  for (std::size_t i = 0; i < h.dim(); ++i) e += h.counit[i] * t[i];
  return e;
}

}  // namespace

TEST_CASE("Hopf axioms hold on the constructed Hopf algebras") {
  for (const auto& [name, h] : hopf_gallery()) {
    CAPTURE(name);
    const CheckReport rep = check_hopf(h);
    CHECK(rep.pass());
    CHECK(rep.items.size() >= 4);
  }
}

TEST_CASE("every single-entry mutation breaks a Hopf axiom") {
  std::mt19937 rng(23);
  for (const auto& [name, h] : hopf_gallery()) {
    CAPTURE(name);
    const std::size_t d = h.dim();
    const std::size_t total = d * d * d + d + d * d;
    const std::size_t trials = std::min<std::size_t>(total, 60);
    for (std::size_t t = 0; t < trials; ++t) {
      const std::size_t pos = total <= 60 ? t : rng() % total;
      HopfData m = h;
      if (pos < d * d * d) {
        m.comul(pos / (d * d), pos % (d * d)) += 1;
      } else if (pos < d * d * d + d) {
        m.counit[pos - d * d * d] += 1;
      } else {
        const std::size_t q = pos - d * d * d - d;
        m.antipode(q / d, q % d) += 1;
      }
      CAPTURE(pos);
      CHECK_FALSE(check_hopf(m).pass());
    }
  }
}

TEST_CASE("the dual of the dual returns the original structure") {
  const HopfData sw = sweedler_hopf();
  const HopfData dd = dual_hopf(dual_hopf(sw));
  CHECK(dd.h.algebra == sw.h.algebra);
  CHECK(dd.comul == sw.comul);
  CHECK(dd.counit == sw.counit);
  CHECK(dd.antipode == sw.antipode);
}

TEST_CASE("left integrals") {
  const IntegralResult fz2 = left_integral(group_algebra(GroupData::cyclic(2)));
  CHECK(fz2.semisimple);
  CHECK(fz2.t == Vector{Rational(1, 2), Rational(1, 2)});

  const HopfData dz2 = dual_group_hopf(GroupData::cyclic(2));
  const IntegralResult d2 = left_integral(dz2);
  CHECK(d2.semisimple);
  CHECK(d2.t == Vector{1, 0});  // h_e
  REQUIRE(d2.tensor_identity.has_value());
  CHECK(*d2.tensor_identity);

  const IntegralResult d3 = left_integral(dual_group_hopf(GroupData::symmetric3()));
  CHECK(d3.semisimple);
  CHECK(d3.t == unit_vector(6, 0));
  REQUIRE(d3.tensor_identity.has_value());
  CHECK(*d3.tensor_identity);

  const HopfData sw = sweedler_hopf();
  const IntegralResult s = left_integral(sw);
  CHECK_FALSE(s.semisimple);
  CHECK(eps_of(sw, s.t) == 0);
  CHECK(s.t[0] == 0);
  CHECK(s.t[1] == 0);
  CHECK(s.t[2] != 0);
  CHECK(s.t[2] == s.t[3]);  // a multiple of b + cb
}

TEST_CASE("duality between gradings and (FG)* actions round-trips") {
  for (const GradedAlgebra& x : {*s3_graded_m2m2().graded, *fs3_natural_grading().graded, m2_z2_grading()}) {
    const Action act = duality_transform(x);
    CHECK(act.kind() == ActionKind::grading);
    const GradedAlgebra back = action_to_grading(x.algebra, act);
    CHECK(back.degree == x.degree);
    CHECK(back.group == x.group);
  }
  const Scenario swap = idempotents_cyclic(2);
  try {
    action_to_grading(swap.algebra, swap.action);
    FAIL("expected NotDiagonalizable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_diagonalizable);
  }
}

TEST_CASE("group actions: morphism types and homomorphism checks") {
  const Algebra m2 = matrix_algebra(2);
  Matrix transpose(4, 4);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) transpose(b * 2 + a, a * 2 + b) = 1;
  const GroupData z2_all = GroupData::make({{0, 1}, {1, 0}}, {"e", "g"}, {true, true});
  try {
    gaction_to_generalized(m2, z2_all, {{Matrix::identity(4), false}, {transpose, false}});
    FAIL("expected WrongMorphismType");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::wrong_morphism_type);
  }
  Matrix shear = Matrix::identity(4);
  shear(0, 1) = 1;
  try {
    gaction_to_generalized(m2, z2_all, {{Matrix::identity(4), false}, {shear, false}});
    FAIL("expected NotHomomorphism");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_homomorphism);
  }
  const Scenario tr = m2_transpose();
  CHECK(tr.action.kind() == ActionKind::group);
  CHECK_FALSE(tr.action.hopf().has_value());
  CHECK(check_generalized_action(tr.action.h(), tr.algebra, tr.action).pass());
  const Scenario flip = m2_sign_flip();
  REQUIRE(flip.action.hopf().has_value());
  CHECK(check_module_algebra(*flip.action.hopf(), flip.algebra, flip.action));
}

TEST_CASE("the transpose is not a Hopf action of FZ_2") {
  const Scenario tr = m2_transpose();
  CHECK_THROWS_AS(hopf_action(group_algebra(*tr.group), tr.algebra, tr.action.ops()), ValidationError);
}

TEST_CASE("Sweedler's algebra is a module algebra over its dual") {
  const SweedlerScenario sw = sweedler_scenario();
  CHECK(check_module_algebra(sw.dual, sw.a, sw.act));
  CHECK(sw.act.label(0) == "g_1");
  // g_b . b = c
  CHECK(sw.act.apply(2, unit_vector(4, 2)) == unit_vector(4, 1));
}

TEST_CASE("Maschke projections are equivariant bimodule projections") {
  const Scenario swap = [] {
    // F^3 with Z_2 swapping e_1 and e_2.
    Matrix p(3, 3);
    p(1, 0) = 1;
    p(0, 1) = 1;
    p(2, 2) = 1;
    return make_group_scenario("swap", diagonal_algebra(3), GroupData::cyclic(2),
                               {{Matrix::identity(3), false}, {p, false}});
  }();
  const Subspace i1 = Subspace::span(3, {unit_vector(3, 0), unit_vector(3, 1)});
  const Matrix proj = swap.algebra.left(Vector{1, 1, 0});
  const Matrix pg = maschke_projection_group(*swap.group, swap.action, swap.algebra, i1, proj);
  CHECK(pg * pg == pg);
  CHECK(pg * swap.action.op(1) == swap.action.op(1) * pg);
  const Matrix ph = maschke_projection(*swap.action.hopf(), swap.action, swap.algebra, i1, proj);
  CHECK(ph == pg);

  const Subspace e1 = Subspace::span(3, {unit_vector(3, 0)});
  try {
    maschke_projection_group(*swap.group, swap.action, swap.algebra, e1, swap.algebra.left(unit_vector(3, 0)));
    FAIL("expected NotInvariant");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_invariant);
  }
  try {
    maschke_projection_group(*swap.group, swap.action, swap.algebra, i1, Matrix::identity(3));
    FAIL("expected NotBimoduleProjection");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_bimodule_projection);
  }
}

TEST_CASE("Maschke averaging needs a semisimple Hopf algebra") {
  const SweedlerScenario sw = sweedler_scenario();
  const Subspace j = Subspace::span(4, {unit_vector(4, 2), unit_vector(4, 3)});
  try {
    maschke_projection(sw.dual, sw.act, sw.a, j, Matrix::identity(4));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_semisimple);
  }
}
