#include <cmath>

#include "pilab/kernels.hpp"

namespace pilab::kernels::detail {

namespace {

constexpr double kP = static_cast<double>(modulus);
constexpr double kInvP = 1.0 / static_cast<double>(modulus);

inline double reduce(double r) {
  // |r| < 2^53 and exact; q may be off by one, fixed below.
  const double q = std::floor(r * kInvP);
  r -= q * kP;
  if (r < 0) r += kP;
  if (r >= kP) r -= kP;
  return r;
}

}  // namespace

void submul_mod_scalar(double* y, const double* x, double c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = reduce(y[i] - c * x[i]);
}

void scale_mod_scalar(double* y, double c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = reduce(c * y[i]);
}

}  // namespace pilab::kernels::detail
