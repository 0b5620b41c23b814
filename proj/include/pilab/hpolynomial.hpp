#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "pilab/action.hpp"

namespace pilab {

/// x^{h_0}_{perm[0]} x^{h_1}_{perm[1]} ... with variables and H-basis labels
/// indexed from 0. Position j carries variable perm[j] and label labels[j].
struct Monomial {
  std::vector<std::size_t> perm;
  std::vector<std::size_t> labels;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Multilinear H-polynomial in n variables; terms are kept sorted by
/// (perm, labels) with no zero coefficients.
class HPolynomial {
 public:
  HPolynomial(std::size_t n = 0, std::size_t dim_h = 1) : n_(n), dim_h_(dim_h) {}

  /// c * x_{perm[0]} ... with unlabelled positions carrying the unit of H.
  static HPolynomial word(const ActionAlgebra& h, const std::vector<std::size_t>& perm, const Rational& c = 1);

  std::size_t n() const noexcept { return n_; }
  std::size_t dim_h() const noexcept { return dim_h_; }
  const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const Monomial& m, const Rational& c);

  HPolynomial& operator+=(const HPolynomial& other);
  HPolynomial& operator-=(const HPolynomial& other);
  HPolynomial operator+(const HPolynomial& other) const;
  HPolynomial operator-(const HPolynomial& other) const;
  HPolynomial scaled(const Rational& c) const;

  /// sigma . f: every x_i becomes x_{sigma[i]}.
  HPolynomial permuted(const std::vector<std::size_t>& sigma) const;

  friend bool operator==(const HPolynomial& a, const HPolynomial& b) {
    return a.n_ == b.n_ && a.dim_h_ == b.dim_h_ && a.terms_ == b.terms_;
  }

 private:
  void check(const Monomial& m) const;

  std::size_t n_;
  std::size_t dim_h_;
  std::map<Monomial, Rational> terms_;
};

/// sum over permutations tau of varset of sign(tau) tau . f.
HPolynomial alternate(const HPolynomial& f, const std::vector<std::size_t>& varset);

/// f(args): rho(h_j) applied to the argument of each letter, products taken
/// left to right. Terms sharing a prefix share its partial product.
Vector evaluate(const HPolynomial& f, const Algebra& a, const Action& act, const std::vector<Vector>& args);

/// Same, with args given as basis indices.
Vector evaluate_basis(const HPolynomial& f, const Algebra& a, const Action& act,
                      const std::vector<std::size_t>& tuple);

/// Plain-text form such as "2 x1^{g_b} x2 - x2 x1".
std::string to_string(const HPolynomial& f, const ActionAlgebra& h);

}  // namespace pilab
