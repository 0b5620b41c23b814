#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pilab/hpolynomial.hpp"
#include "pilab/identities.hpp"

namespace pilab {

/// Weakly decreasing positive parts.
using Partition = std::vector<std::size_t>;

std::string to_string(const Partition& p);

/// All partitions of n in reverse lexicographic order; guard 1 <= n <= 12.
std::vector<Partition> partitions(std::size_t n);

/// n! over the product of hook lengths.
std::uint64_t hook_dim(const Partition& lambda);

/// Character of the irreducible module of shape lambda on the class with
/// cycle type mu (Murnaghan-Nakayama).
long long irreducible_character(const Partition& lambda, const Partition& mu);

/// Size of the centralizer of a permutation of cycle type mu.
std::uint64_t centralizer_size(const Partition& mu);

struct CocharacterRow {
  Partition lambda;
  long long multiplicity = 0;
};

/// Multiplicities of the irreducible characters in the S_n-character of the
/// evaluation image; guard n <= 5. Throws NonIntegralMultiplicity if an inner
/// product is not a non-negative integer.
std::vector<CocharacterRow> cocharacter(const EvaluationImage& img);
std::vector<CocharacterRow> cocharacter(const Algebra& a, const Action& act, std::size_t n,
                                        std::uint64_t cap = resource_cap());

/// Trace on the image of the permutation of slots with the given images.
Rational image_trace(const EvaluationImage& img, const std::vector<std::size_t>& sigma);

/// Rows of variable indices (0-based), a bijection onto 0..n-1.
using Tableau = std::vector<std::vector<std::size_t>>;

enum class Symmetrizer { e, e_star };  // a b and b a

/// Row symmetrization a_T and column alternation b_T acting on variables.
HPolynomial row_symmetrize(const Tableau& t, const HPolynomial& f);
HPolynomial column_alternate(const Tableau& t, const HPolynomial& f);
HPolynomial young_symmetrizer_apply(const Tableau& t, const HPolynomial& f, Symmetrizer variant);

/// Every row with m != 0 satisfies sum_{i>d} lambda_i < p and has at most dim A parts.
bool multiplicity_vanishing_check(const std::vector<CocharacterRow>& rows, std::size_t d, std::size_t p,
                                  std::size_t dim_a);

}  // namespace pilab
