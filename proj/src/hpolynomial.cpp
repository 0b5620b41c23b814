#include "pilab/hpolynomial.hpp"

#include <algorithm>
#include <numeric>

#include "pilab/errors.hpp"
#include "pilab/evaluator.hpp"

namespace pilab {

HPolynomial HPolynomial::word(const ActionAlgebra& h, const std::vector<std::size_t>& perm, const Rational& c) {
  HPolynomial f(perm.size(), h.dim());
  const Vector& unit = h.unit();
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < unit.size(); ++i)
    if (sgn(unit[i]) != 0) support.push_back(i);
  // Expand the unit label at every position.
  std::vector<std::size_t> pick(perm.size(), 0);
  while (true) {
    Monomial m{perm, std::vector<std::size_t>(perm.size())};
    Rational coef = c;
    for (std::size_t j = 0; j < perm.size(); ++j) {
      m.labels[j] = support[pick[j]];
      coef *= unit[support[pick[j]]];
    }
    f.add_term(m, coef);
    std::size_t j = 0;
    while (j < pick.size() && ++pick[j] == support.size()) pick[j++] = 0;
    if (j == pick.size()) break;
  }
  return f;
}

void HPolynomial::check(const Monomial& m) const {
  if (m.perm.size() != n_ || m.labels.size() != n_) {
    throw Error(ErrorKind::dimension_mismatch, "monomial length differs from the variable count");
  }
  std::vector<bool> seen(n_, false);
  for (std::size_t j = 0; j < n_; ++j) {
    if (m.perm[j] >= n_ || seen[m.perm[j]]) throw Error(ErrorKind::validation_error, "monomial is not multilinear");
    seen[m.perm[j]] = true;
    if (m.labels[j] >= dim_h_) throw Error(ErrorKind::dimension_mismatch, "label out of range");
  }
}

void HPolynomial::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  check(m);
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

HPolynomial& HPolynomial::operator+=(const HPolynomial& other) {
  if (other.n_ != n_ || other.dim_h_ != dim_h_) throw Error(ErrorKind::dimension_mismatch, "polynomial shapes differ");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

HPolynomial& HPolynomial::operator-=(const HPolynomial& other) { return *this += other.scaled(-1); }

HPolynomial HPolynomial::operator+(const HPolynomial& other) const {
  HPolynomial out = *this;
  out += other;
  return out;
}

HPolynomial HPolynomial::operator-(const HPolynomial& other) const {
  HPolynomial out = *this;
  out -= other;
  return out;
}

HPolynomial HPolynomial::scaled(const Rational& c) const {
  HPolynomial out(n_, dim_h_);
  if (sgn(c) == 0) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, v * c);
  return out;
}

HPolynomial HPolynomial::permuted(const std::vector<std::size_t>& sigma) const {
  if (sigma.size() != n_) throw Error(ErrorKind::dimension_mismatch, "permutation length");
  HPolynomial out(n_, dim_h_);
  for (const auto& [m, c] : terms_) {
    Monomial p = m;
    for (auto& v : p.perm) v = sigma[v];
    out.add_term(p, c);
  }
  return out;
}

HPolynomial alternate(const HPolynomial& f, const std::vector<std::size_t>& varset) {
  for (auto v : varset)
    if (v >= f.n()) throw Error(ErrorKind::dimension_mismatch, "alternation variable out of range");
  std::vector<std::size_t> order(varset.size());
  std::iota(order.begin(), order.end(), 0);
  HPolynomial out(f.n(), f.dim_h());
  do {
    std::vector<std::size_t> sigma(f.n());
    std::iota(sigma.begin(), sigma.end(), 0);
    for (std::size_t k = 0; k < varset.size(); ++k) sigma[varset[k]] = varset[order[k]];
    int sign = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t j = i + 1; j < order.size(); ++j)
        if (order[i] > order[j]) sign = -sign;
    out += f.permuted(sigma).scaled(sign);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

Vector evaluate(const HPolynomial& f, const Algebra& a, const Action& act, const std::vector<Vector>& args) {
  return Evaluator(f, a, act)(args);
}

Vector evaluate_basis(const HPolynomial& f, const Algebra& a, const Action& act,
                      const std::vector<std::size_t>& tuple) {
  std::vector<Vector> args;
  for (auto t : tuple) args.push_back(unit_vector(a.dim(), t));
  return evaluate(f, a, act, args);
}

std::string to_string(const HPolynomial& f, const ActionAlgebra& h) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    Rational mag = abs(c);
    out += first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + ");
    first = false;
    std::string word;
    for (std::size_t j = 0; j < m.perm.size(); ++j) {
      if (!word.empty()) word += ' ';
      word += "x" + std::to_string(m.perm[j] + 1);
      if (h.unit() != unit_vector(h.dim(), m.labels[j])) word += "^{" + h.labels[m.labels[j]] + "}";
    }
    if (mag != 1 || word.empty()) out += to_string(mag) + (word.empty() ? "" : " ");
    out += word;
  }
  return out;
}

}  // namespace pilab
