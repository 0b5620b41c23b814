#include "pilab/gallery.hpp"

#include "pilab/actions.hpp"
#include "pilab/alternating.hpp"
#include "pilab/errors.hpp"
#include "pilab/exactalg.hpp"

namespace pilab {

namespace {

// Matrix sending e_i to e_{image[i]}.
Matrix permutation_matrix(const std::vector<std::size_t>& image) {
  Matrix m(image.size(), image.size());
  for (std::size_t i = 0; i < image.size(); ++i) m(image[i], i) = 1;
  return m;
}

GroupData z2(bool second_in_g0) {
  return GroupData::make({{0, 1}, {1, 0}}, {"e", "g"}, {true, second_in_g0});
}

Subspace coordinate_span(std::size_t dim, const std::vector<std::size_t>& idx) {
  std::vector<Vector> gens;
  for (auto i : idx) gens.push_back(unit_vector(dim, i));
  return Subspace::span(dim, gens);
}

std::string power_string(std::size_t base, std::size_t e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), base, e);
  return p.get_str();
}

}  // namespace

Scenario s3_graded_m2m2() {
  const Algebra a = direct_sum({matrix_algebra(2), matrix_algebra(2)});
  // S_3 elements: e, (12), (13), (23), (123), (132).
  return make_graded_scenario("S3-graded M2+M2",
                              GradedAlgebra::make(a, GroupData::symmetric3(), {0, 1, 1, 0, 0, 3, 3, 0}));
}

Scenario fs3_natural_grading() {
  const GroupData g = GroupData::symmetric3();
  std::vector<std::size_t> degree(g.order());
  for (std::size_t i = 0; i < degree.size(); ++i) degree[i] = i;
  return make_graded_scenario("FS3 natural grading", GradedAlgebra::make(group_algebra(g).h.algebra, g, degree));
}

Scenario idempotents_cyclic(std::size_t m) {
  std::vector<std::pair<Matrix, bool>> assignment;
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<std::size_t> image(m);
    for (std::size_t i = 0; i < m; ++i) image[i] = (i + k) % m;
    assignment.emplace_back(permutation_matrix(image), false);
  }
  const std::string name = m == 2 ? "F^2 swap" : "F^" + std::to_string(m) + " Z" + std::to_string(m) + " cycle";
  return make_group_scenario(name, diagonal_algebra(m), GroupData::cyclic(m), std::move(assignment));
}

Scenario m2m2_transpose_swap() {
  std::vector<std::size_t> image(8);
  for (std::size_t t = 0; t < 2; ++t)
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) image[t * 4 + a * 2 + b] = (1 - t) * 4 + b * 2 + a;
  return make_group_scenario("M2+M2 transpose-swap", direct_sum({matrix_algebra(2), matrix_algebra(2)}), z2(false),
                             {{Matrix::identity(8), false}, {permutation_matrix(image), true}});
}

Scenario ut2ut2_swap() {
  // UT_2 basis: e11, e12, e22.
  std::vector<std::size_t> image(6);
  for (std::size_t t = 0; t < 2; ++t)
    for (std::size_t i = 0; i < 3; ++i) image[t * 3 + i] = (1 - t) * 3 + i;
  return make_group_scenario("UT2+UT2 swap", direct_sum({upper_triangular(2), upper_triangular(2)}), z2(true),
                             {{Matrix::identity(6), false}, {permutation_matrix(image), false}});
}

Scenario sweedler() {
  SweedlerScenario sw = sweedler_scenario();
  Scenario s = make_scenario("sweedler", sw.a, sw.act);
  // Basis 1, c, b, cb.
  s.decomposition = candidate_decomposition(s.algebra, coordinate_span(4, {2, 3}), {coordinate_span(4, {0, 1})});
  return s;
}

Scenario m2_sign_flip() {
  Matrix psi = Matrix::identity(4);
  psi(1, 1) = -1;
  psi(2, 2) = -1;
  return make_group_scenario("M2 sign flip", matrix_algebra(2), z2(true),
                             {{Matrix::identity(4), false}, {psi, false}});
}

Scenario m2_transpose() {
  return make_group_scenario("M2 transpose", matrix_algebra(2), z2(false),
                             {{Matrix::identity(4), false}, {permutation_matrix({0, 2, 1, 3}), true}});
}

GradedAlgebra m2_z2_grading() { return GradedAlgebra::make(matrix_algebra(2), z2(true), {0, 1, 1, 0}); }

Scenario m2_dual_z2() { return make_graded_scenario("M2 Z2-graded", m2_z2_grading()); }

HPolynomial symmetrized_commutator(const ActionAlgebra& h, int s) {
  HPolynomial f(2, h.dim());
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      const Rational c = Rational(a ? s : 1) * (b ? s : 1);
      f.add_term({{0, 1}, {a, b}}, c);
      f.add_term({{1, 0}, {b, a}}, -c);
    }
  return f;
}

HPolynomial labelled_commutator(const ActionAlgebra& h, std::size_t label) {
  HPolynomial f(2, h.dim());
  f.add_term({{0, 1}, {label, label}}, 1);
  f.add_term({{1, 0}, {label, label}}, -1);
  return f;
}

HPolynomial commutator(const ActionAlgebra& h) {
  return HPolynomial::word(h, {0, 1}) - HPolynomial::word(h, {1, 0});
}

std::vector<GalleryExample> exponent_examples() {
  return {
      {"S3-graded M2+M2", s3_graded_m2m2, 4},
      {"FS3 natural grading", fs3_natural_grading, 6},
      {"F^2 swap", [] { return idempotents_cyclic(2); }, 2},
      {"F^3 Z3 cycle", [] { return idempotents_cyclic(3); }, 3},
      {"M2+M2 transpose-swap", m2m2_transpose_swap, 8},
      {"UT2+UT2 swap", ut2ut2_swap, 4},
  };
}

std::size_t scenario_exponent(const Scenario& s) {
  if (s.decomposition) {
    const CheckReport rep = verify_decomposition(s.algebra, s.action, *s.decomposition);
    if (const CheckItem* bad = rep.first_failure()) throw ValidationError("decomposition", bad->name);
    return pi_exponent(*s.decomposition);
  }
  return pi_exponent(wedderburn_malcev(s.algebra, s.action));
}

ReportRow exponent_row(const std::string& name, const Scenario& s, std::size_t expected) {
  ReportRow row{name + " d(A)", "", "=" + std::to_string(expected), Status::fail};
  try {
    const std::size_t d = scenario_exponent(s);
    row.value = std::to_string(d);
    row.status = d == expected ? Status::pass : Status::fail;
  } catch (const Error& e) {
    row.value = std::string("error: ") + to_string(e.kind());
  }
  return row;
}

Report gallery_report(std::size_t max_n, std::uint64_t cap) {
  Report r;
  r.command = "gallery";
  std::string inputs;
  auto codim_rows = [&](const std::string& name, const Scenario& s) {
    for (std::size_t n = 1; n <= max_n; ++n) {
      const std::string q = name + " c^H_" + std::to_string(n);
      const std::string bound = "<=" + power_string(s.algebra.dim(), n + 1);
      try {
        const std::size_t c = codimension(s.algebra, s.action, n, cap).rank();
        mpz_class limit;
        mpz_ui_pow_ui(limit.get_mpz_t(), s.algebra.dim(), n + 1);
        r.check(q, std::to_string(c), bound, limit >= c);
      } catch (const Error& e) {
        r.check(q, std::string("error: ") + to_string(e.kind()), bound, false);
      }
    }
  };

  for (const auto& ex : exponent_examples()) {
    Scenario s;
    try {
      s = ex.build();
    } catch (const Error& e) {
      r.check(ex.name + " d(A)", std::string("error: ") + to_string(e.kind()), "=" + std::to_string(ex.expected),
              false);
      continue;
    }
    inputs += emit_scenario(s);
    r.rows.push_back(exponent_row(ex.name, s, ex.expected));
    codim_rows(ex.name, s);
  }

  const std::string sw_name = "sweedler";
  try {
    const Scenario s = sweedler();
    inputs += emit_scenario(s);
    const RadicalResult rad = radical(s.algebra);
    r.check(sw_name + " radical", rad.j == s.decomposition->radical ? "span{b, cb}" : to_string(rad.j.basis().data()),
            "=span{b, cb}", rad.j == s.decomposition->radical);
    const CheckReport rep = verify_decomposition(s.algebra, s.action, *s.decomposition);
    const CheckItem* bad = rep.first_failure();
    const bool j_fails = bad && bad->name.rfind("J invariant under ", 0) == 0;
    r.check(sw_name + " J invariant", bad ? "fails under " + bad->name.substr(bad->name.rfind(' ') + 1) : "holds",
            "fails", j_fails);
    for (std::size_t n = 1; n <= max_n; ++n) {
      const std::size_t c = codimension(s.algebra, s.action, n, cap).rank();
      mpz_class limit;
      mpz_ui_pow_ui(limit.get_mpz_t(), 4, n + 1);
      r.check(sw_name + " c^H_" + std::to_string(n), std::to_string(c), "<=" + limit.get_str(), limit >= c);
    }
    for (std::size_t n = 4; n <= 8; ++n) {
      const AlternatingPolynomial p = sweedler_alternating(1, n);
      const CheckReport w = verify_alternating(p, s.algebra, s.action);
      r.check(sw_name + " witness k=1 n=" + std::to_string(n), w.pass() ? "1" : w.first_failure()->detail, "=1",
              w.pass());
    }
  } catch (const Error& e) {
    r.check(sw_name, std::string("error: ") + to_string(e.kind()), "-", false);
  }
  r.digest = hex64(fnv1a(inputs));
  return r;
}

}  // namespace pilab
