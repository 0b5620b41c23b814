#include "pilab/rational.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "pilab/errors.hpp"

namespace pilab {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::dimension_mismatch: return "DimensionMismatch";
    case ErrorKind::associativity_violation: return "AssociativityViolation";
    case ErrorKind::unit_violation: return "UnitViolation";
    case ErrorKind::not_nilpotent_radical: return "NotNilpotentRadical";
    case ErrorKind::not_semisimple: return "NotSemisimple";
    case ErrorKind::not_invariant: return "NotInvariant";
    case ErrorKind::not_split: return "NotSplit";
    case ErrorKind::lifting_failed: return "LiftingFailed";
    case ErrorKind::averaging_unavailable: return "AveragingUnavailable";
    case ErrorKind::not_homomorphism: return "NotHomomorphism";
    case ErrorKind::wrong_morphism_type: return "WrongMorphismType";
    case ErrorKind::not_diagonalizable: return "NotDiagonalizable";
    case ErrorKind::no_integral: return "NoIntegral";
    case ErrorKind::not_bimodule_projection: return "NotBimoduleProjection";
    case ErrorKind::resource_exceeded: return "ResourceExceeded";
    case ErrorKind::feasibility_limit: return "FeasibilityLimit";
    case ErrorKind::not_h_simple: return "NotHSimple";
    case ErrorKind::non_integral_multiplicity: return "NonIntegralMultiplicity";
    case ErrorKind::guard_exceeded: return "GuardExceeded";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::validation_error: return "ValidationError";
    case ErrorKind::postcondition_failed: return "PostconditionFailed";
  }
  return "Error";
}

AssociativityViolation::AssociativityViolation(std::size_t i, std::size_t j,
                                               std::size_t k,
                                               const std::string& lhs,
                                               const std::string& rhs)
    : Error(ErrorKind::associativity_violation,
            "associativity fails on basis triple (" + std::to_string(i) + "," +
                std::to_string(j) + "," + std::to_string(k) + "): (e_i e_j) e_k = " +
                lhs + " but e_i (e_j e_k) = " + rhs),
      i(i), j(j), k(k), lhs(lhs), rhs(rhs) {}

std::string ResourceExceeded::format_count(double v) {
  std::ostringstream os;
  if (v < 1e15) {
    os << static_cast<long long>(std::llround(v));
  } else {
    os.precision(3);
    os << v;
  }
  return os.str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text, std::size_t line) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  const std::string_view num = slash == std::string_view::npos ? s : s.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    throw ParseError(line, "malformed rational \"" + std::string(text) + "\"");
  }
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  mpz_class p(n, 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw ParseError(line, "zero denominator in \"" + std::string(text) + "\"");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Vector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + "]";
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

void axpy(Vector& y, const Rational& c, const Vector& x) {
  if (sgn(c) == 0) return;
  mpq_class t;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    mpq_mul(t.get_mpq_t(), c.get_mpq_t(), x[i].get_mpq_t());
    mpq_add(y[i].get_mpq_t(), y[i].get_mpq_t(), t.get_mpq_t());
  }
}

}  // namespace pilab
