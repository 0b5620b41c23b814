#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pilab/action.hpp"
#include "pilab/exactalg.hpp"
#include "pilab/hpolynomial.hpp"

namespace pilab {

/// An algebra with an action and, optionally, a candidate decomposition.
struct Scenario {
  std::string name;
  Algebra algebra;
  Action action;
  std::optional<GroupData> group;                    // group and grading kinds
  std::vector<std::pair<Matrix, bool>> assignment;   // group kind: operator, anti flag
  std::optional<GradedAlgebra> graded;               // grading kind
  std::optional<Decomposition> decomposition;

  ActionKind kind() const noexcept { return action.kind(); }
};

bool operator==(const Scenario& a, const Scenario& b);

/// JSON text; rationals are strings "p" or "p/q". Throws ParseError for
/// syntax and shape problems and ValidationError when a checker rejects the data.
Scenario parse_scenario(const std::string& text);
std::string emit_scenario(const Scenario& s);
Scenario load_scenario(const std::string& path);

/// Builders that run the same checkers as the parser.
Scenario make_scenario(std::string name, Algebra a, Action act);
Scenario make_group_scenario(std::string name, Algebra a, GroupData g,
                             std::vector<std::pair<Matrix, bool>> assignment);
Scenario make_graded_scenario(std::string name, GradedAlgebra x);

/// Decomposition from a candidate radical and components; the nilpotency
/// index is that of the candidate radical.
Decomposition candidate_decomposition(const Algebra& a, Subspace radical, std::vector<Subspace> components);

/// {"n", "labels", "terms": [{"coef", "perm" (1-based), "labels"}]}; a null
/// label stands for the unit of H.
HPolynomial parse_polynomial(const std::string& text, const ActionAlgebra& h);
std::string emit_polynomial(const HPolynomial& f, const ActionAlgebra& h);

std::string read_file(const std::string& path);

}  // namespace pilab
