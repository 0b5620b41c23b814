#include <doctest.h>

#include <random>
#include <sstream>

#include <json.hpp>

#include "pilab/actions.hpp"
#include "pilab/commands.hpp"
#include "pilab/errors.hpp"
#include "pilab/gallery.hpp"
#include "pilab/scenario.hpp"

#ifndef PILAB_SCENARIO_DIR
#error "PILAB_SCENARIO_DIR must point at the shipped scenarios"
#endif

using namespace pilab;

namespace {

const std::string dir = PILAB_SCENARIO_DIR;

std::vector<Scenario> all_scenarios() {
  std::vector<Scenario> out;
  for (const auto& ex : exponent_examples()) out.push_back(ex.build());
  for (auto s : {sweedler(), m2_sign_flip(), m2_transpose(), m2_dual_z2()}) out.push_back(std::move(s));
  return out;
}

struct Run {
  int code;
  std::string out, err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse and emit round-trip every scenario") {
  for (const Scenario& s : all_scenarios()) {
    CAPTURE(s.name);
    const std::string text = emit_scenario(s);
    const Scenario back = parse_scenario(text);
    CHECK(back == s);
    CHECK(emit_scenario(back) == text);
  }
}

TEST_CASE("shipped sweedler.json is the Sweedler scenario") {
  const Scenario s = load_scenario(dir + "/sweedler.json");
  CHECK(s == sweedler());
  const SweedlerScenario sw = sweedler_scenario();
  CHECK(s.algebra == sw.a);
  CHECK(s.action.ops() == sw.act.ops());
}

TEST_CASE("syntax errors are parse errors with a line number") {
  try {
    parse_scenario("{\n  \"algebra\": {\n    \"dim\": 1,,\n  }\n}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("malformed rationals are parse errors") {
  const std::string text =
      R"({"algebra": {"dim": 1, "mult": [[["1/0"]]]}, "action": {"kind": "trivial"}})";
  CHECK_THROWS_AS(parse_scenario(text), ParseError);
  const std::string flt = R"({"algebra": {"dim": 1, "mult": [[[0.5]]]}, "action": {"kind": "trivial"}})";
  CHECK_THROWS_AS(parse_scenario(flt), ParseError);
}

TEST_CASE("mathematical problems are validation errors naming the checker") {
  // e1 e1 = e2, e2 e1 = e1 is not associative.
  const std::string text = R"({"algebra": {"dim": 2, "mult": [[["0","1"],["0","0"]],[["1","0"],["0","0"]]]},
                               "action": {"kind": "trivial"}})";
  try {
    parse_scenario(text);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.checker == "associativity");
  }
  // A Hopf action that violates the module-algebra law.
  nlohmann::json j = nlohmann::json::parse(emit_scenario(sweedler()));
  j["action"]["operators"][1][0][0] = "2";
  CHECK_THROWS_AS(parse_scenario(j.dump()), ValidationError);
  nlohmann::json k = nlohmann::json::parse(emit_scenario(sweedler()));
  k["action"]["hopf"]["counit"][1] = "1";
  try {
    parse_scenario(k.dump());
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.checker == "hopf");
  }
}

TEST_CASE("polynomial files round-trip") {
  const Scenario s = m2_transpose();
  const HPolynomial f = symmetrized_commutator(s.action.h(), -1);
  CHECK(parse_polynomial(emit_polynomial(f, s.action.h()), s.action.h()) == f);
  // Null labels stand for the unit of H.
  const std::string text = R"({"n": 2, "terms": [{"coef": "1", "perm": [1, 2], "labels": [null, null]},
                                                 {"coef": "-1", "perm": [2, 1]}]})";
  CHECK(parse_polynomial(text, s.action.h()) == commutator(s.action.h()));
  CHECK_THROWS_AS(parse_polynomial(R"({"n": 2, "terms": [{"coef": "1", "perm": [1, 1]}]})", s.action.h()),
                  ValidationError);
  CHECK_THROWS_AS(parse_polynomial(R"({"n": 2, "terms": [{"coef": "1", "perm": [1]}]})", s.action.h()),
                  ParseError);
  CHECK_THROWS_AS(parse_polynomial(R"({"n": 1, "terms": [{"coef": "1", "perm": [1], "labels": ["q"]}]})",
                                   s.action.h()),
                  ValidationError);
}

TEST_CASE("perturbing a gallery structure constant fails its row") {
  std::mt19937 rng(41);
  for (const auto& ex : exponent_examples()) {
    CAPTURE(ex.name);
    const std::string text = emit_scenario(ex.build());
    for (int t = 0; t < 5; ++t) {
      nlohmann::json j = nlohmann::json::parse(text);
      const std::size_t d = j["algebra"]["dim"].get<std::size_t>();
      const std::size_t a = rng() % d, b = rng() % d, c = rng() % d;
      auto& cell = j["algebra"]["mult"][a][b][c];
      cell = to_string(parse_rational(cell.get<std::string>()) + 1);
      bool failed = false;
      try {
        failed = exponent_row(ex.name, parse_scenario(j.dump()), ex.expected).status == Status::fail;
      } catch (const Error&) {
        failed = true;
      }
      CHECK(failed);
    }
  }
}

TEST_CASE("cli exit codes and report rows") {
  const Run gal = cli({"gallery"});
  CHECK(gal.code == exit_pass);
  CHECK(gal.out.rfind("quantity\tvalue\tbound\tstatus\n", 0) == 0);

  const Run ex = cli({"exponent", dir + "/s3_graded_m2m2.json"});
  CHECK(ex.code == exit_pass);
  CHECK(ex.out.find("\nd(A)\t4\t") != std::string::npos);

  const Run codim = cli({"codim", "--n", "1", dir + "/sweedler.json"});
  CHECK(codim.code == exit_pass);
  CHECK(codim.out.find("\nc^H_1\t4\t-\t-\n") != std::string::npos);
  CHECK(codim.out.find("\t4\t<=16\tpass\n") != std::string::npos);

  const Run verify = cli({"verify", dir + "/sweedler.json"});
  CHECK(verify.code == exit_math_fail);
  CHECK(verify.out.find("J invariant under g_b?\tno\tyes\tfail") != std::string::npos);

  const Run ok = cli({"check-identity", dir + "/m2_transpose.json", "--poly", dir + "/m2_transpose.poly.json"});
  CHECK(ok.code == exit_pass);
  const Run not_id = cli({"check-identity", dir + "/m2_sign_flip.json", "--poly",
                          dir + "/m2_sign_flip.commutator.poly.json"});
  CHECK(not_id.code == exit_math_fail);

  CHECK(cli({}).code == exit_error);
  CHECK(cli({"frobnicate"}).code == exit_error);
  CHECK(cli({"codim", dir + "/sweedler.json"}).code == exit_error);  // missing --n
  CHECK(cli({"radical", dir + "/does-not-exist.json"}).code == exit_error);
  CHECK(cli({"exponent", dir + "/sweedler.json"}).code == exit_math_fail);
  CHECK(cli({"codim", "--n", "3", "--cap", "10", dir + "/sweedler.json"}).code == exit_error);
  CHECK(cli({"cochar", "--n", "6", dir + "/f2_swap.json"}).code == exit_error);
}

TEST_CASE("text output carries the same rows") {
  const Run text = cli({"radical", "--out", "text", dir + "/sweedler.json"});
  CHECK(text.code == exit_pass);
  CHECK(text.out.find("nilpotency index") != std::string::npos);
  CHECK(text.out.find("input digest") != std::string::npos);
}
