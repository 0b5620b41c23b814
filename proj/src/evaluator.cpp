#include "pilab/evaluator.hpp"

#include <algorithm>

#include "pilab/errors.hpp"

namespace pilab {

Evaluator::Evaluator(const HPolynomial& f, const Algebra& a, const Action& act)
    : a_(a), act_(act), n_(f.n()) {
  if (act.dim_a() != a.dim()) throw Error(ErrorKind::dimension_mismatch, "action does not match the algebra");
  if (act.dim_h() != f.dim_h()) throw Error(ErrorKind::dimension_mismatch, "labels do not match the action");
  for (const auto& [m, c] : f.terms()) terms_.push_back({m.perm, m.labels, c, 0});
  auto key_less = [](const Term& x, const Term& y) {
    for (std::size_t j = 0; j < x.vars.size(); ++j) {
      if (x.vars[j] != y.vars[j]) return x.vars[j] < y.vars[j];
      if (x.labels[j] != y.labels[j]) return x.labels[j] < y.labels[j];
    }
    return false;
  };
  std::sort(terms_.begin(), terms_.end(), key_less);
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    std::size_t s = 0;
    while (s < n_ && terms_[i].vars[s] == terms_[i - 1].vars[s] && terms_[i].labels[s] == terms_[i - 1].labels[s]) ++s;
    terms_[i].shared = s;
  }
}

Vector Evaluator::operator()(const std::vector<Vector>& args) const {
  if (args.size() != n_) throw Error(ErrorKind::dimension_mismatch, "argument count");
  std::vector<std::vector<Vector>> images(n_, std::vector<Vector>(act_.dim_h()));
  for (std::size_t v = 0; v < n_; ++v)
    for (std::size_t h = 0; h < act_.dim_h(); ++h) images[v][h] = act_.apply(h, args[v]);
  return run(images);
}

Vector Evaluator::at_basis(const std::vector<std::size_t>& tuple) const {
  if (tuple.size() != n_) throw Error(ErrorKind::dimension_mismatch, "argument count");
  std::vector<std::vector<Vector>> images(n_, std::vector<Vector>(act_.dim_h()));
  for (std::size_t v = 0; v < n_; ++v)
    for (std::size_t h = 0; h < act_.dim_h(); ++h) images[v][h] = act_.op(h).column(tuple[v]);
  return run(images);
}

Vector Evaluator::run(const std::vector<std::vector<Vector>>& images) const {
  const std::size_t dim = a_.dim();
  Vector out(dim);
  if (n_ == 0) {
    for (const auto& t : terms_) {
      if (!a_.unit()) throw Error(ErrorKind::validation_error, "empty word needs a unit");
      axpy(out, t.coef, *a_.unit());
    }
    return out;
  }
  std::vector<Vector> prefix(n_);
  std::size_t zero_at = n_;  // first level whose partial product is zero
  for (const auto& t : terms_) {
    const std::size_t start = t.shared;
    if (zero_at < start) continue;
    zero_at = n_;
    for (std::size_t j = start; j < n_; ++j) {
      const Vector& f = images[t.vars[j]][t.labels[j]];
      prefix[j] = j == 0 ? f : a_.multiply(prefix[j - 1], f);
      if (is_zero(prefix[j])) {
        zero_at = j;
        break;
      }
    }
    if (zero_at == n_) axpy(out, t.coef, prefix[n_ - 1]);
  }
  return out;
}

}  // namespace pilab
