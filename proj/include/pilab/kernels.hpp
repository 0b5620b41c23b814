#pragma once

// Modular elimination kernels. Residues are stored in doubles: with a prime
// below 2^26 every product of two residues is an integer below 2^52 and is
// therefore exact, which lets the scalar and the AVX2 variant produce
// bit-identical results.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pilab/rational.hpp"

namespace pilab::kernels {

enum class Isa { scalar, avx2 };

const char* to_string(Isa isa) noexcept;

/// Largest prime below 2^26.
inline constexpr std::uint64_t modulus = 67108859;

bool cpu_supports(Isa isa) noexcept;

/// ISA used by default: PILAB_SIMD=scalar|avx2|auto, else the best one the
/// CPU supports.
Isa active_isa();

/// Overrides active_isa() for the current process (nullopt restores env/auto).
void force_isa(std::optional<Isa> isa);

std::uint64_t inverse_mod(std::uint64_t a);

/// a/b mod p; nullopt when p divides the denominator.
std::optional<double> residue(const Rational& r);

/// y[i] = (y[i] - c * x[i]) mod p; all inputs in [0, p).
void submul_mod(std::span<double> y, std::span<const double> x, double c, Isa isa);

/// y[i] = (c * y[i]) mod p.
void scale_mod(std::span<double> y, double c, Isa isa);

namespace detail {
void submul_mod_scalar(double* y, const double* x, double c, std::size_t n);
void scale_mod_scalar(double* y, double c, std::size_t n);
void submul_mod_avx2(double* y, const double* x, double c, std::size_t n);
void scale_mod_avx2(double* y, double c, std::size_t n);
}  // namespace detail

/// Row echelon basis over F_p used to select independent rows.
class ModularEchelon {
 public:
  ModularEchelon(std::size_t cols, Isa isa) : cols_(cols), isa_(isa) {}

  /// Reduces `row` in place; keeps it and returns true if it is independent.
  bool add(std::vector<double> row);

  std::size_t rank() const noexcept { return rows_.size(); }
  bool full() const noexcept { return rows_.size() == cols_; }

 private:
  std::size_t cols_;
  Isa isa_;
  std::vector<std::vector<double>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace pilab::kernels
