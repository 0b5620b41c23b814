#pragma once

#include <cstddef>
#include <vector>

#include "pilab/hpolynomial.hpp"

namespace pilab {

/// Evaluates one polynomial at many argument tuples. Terms are ordered by the
/// interleaved key (perm[0], labels[0], perm[1], ...) so consecutive terms
/// share partial products; a zero prefix skips every term extending it.
class Evaluator {
 public:
  Evaluator(const HPolynomial& f, const Algebra& a, const Action& act);

  Vector operator()(const std::vector<Vector>& args) const;
  Vector at_basis(const std::vector<std::size_t>& tuple) const;

 private:
  struct Term {
    std::vector<std::size_t> vars;
    std::vector<std::size_t> labels;
    Rational coef;
    std::size_t shared = 0;  // prefix length shared with the previous term
  };

  Vector run(const std::vector<std::vector<Vector>>& images) const;

  Algebra a_;
  Action act_;
  std::size_t n_;
  std::vector<Term> terms_;
};

}  // namespace pilab
