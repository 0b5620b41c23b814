#include <atomic>
#include <cstdlib>
#include <string>

#include "pilab/errors.hpp"
#include "pilab/kernels.hpp"

namespace pilab::kernels {

namespace {

// -1: not forced; otherwise static_cast<int>(Isa).
std::atomic<int> g_forced{-1};

}  // namespace

const char* to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "?";
}

bool cpu_supports(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(PILAB_HAVE_AVX2_TU) && (defined(__x86_64__) || defined(__i386__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

void force_isa(std::optional<Isa> isa) { g_forced = isa ? static_cast<int>(*isa) : -1; }

Isa active_isa() {
  if (const int f = g_forced.load(); f >= 0) return static_cast<Isa>(f);
  const Isa best = cpu_supports(Isa::avx2) ? Isa::avx2 : Isa::scalar;
  const char* env = std::getenv("PILAB_SIMD");
  if (env == nullptr) return best;
  const std::string v(env);
  if (v == "scalar") return Isa::scalar;
  if (v == "avx2") {
    if (!cpu_supports(Isa::avx2)) {
      throw Error(ErrorKind::validation_error, "PILAB_SIMD=avx2 but the CPU lacks AVX2");
    }
    return Isa::avx2;
  }
  if (v == "auto" || v.empty()) return best;
  throw Error(ErrorKind::validation_error, "PILAB_SIMD must be scalar, avx2 or auto");
}

std::uint64_t inverse_mod(std::uint64_t a) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(modulus), new_r = static_cast<std::int64_t>(a % modulus);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw Error(ErrorKind::postcondition_failed, "residue is not invertible");
  if (t < 0) t += static_cast<std::int64_t>(modulus);
  return static_cast<std::uint64_t>(t);
}

std::optional<double> residue(const Rational& r) {
  const mpz_class p(static_cast<unsigned long>(modulus));
  mpz_class num = r.get_num() % p;
  if (num < 0) num += p;
  const mpz_class den = r.get_den() % p;
  if (den == 0) return std::nullopt;
  const std::uint64_t n = num.get_ui();
  const std::uint64_t d = inverse_mod(den.get_ui());
  return static_cast<double>((n * d) % modulus);
}

void submul_mod(std::span<double> y, std::span<const double> x, double c, Isa isa) {
  if (isa == Isa::avx2) {
    detail::submul_mod_avx2(y.data(), x.data(), c, y.size());
  } else {
    detail::submul_mod_scalar(y.data(), x.data(), c, y.size());
  }
}

void scale_mod(std::span<double> y, double c, Isa isa) {
  if (isa == Isa::avx2) {
    detail::scale_mod_avx2(y.data(), c, y.size());
  } else {
    detail::scale_mod_scalar(y.data(), c, y.size());
  }
}

bool ModularEchelon::add(std::vector<double> row) {
  if (row.size() != cols_) throw Error(ErrorKind::dimension_mismatch, "modular row length");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const double c = row[pivots_[k]];
    if (c != 0.0) submul_mod(row, rows_[k], c, isa_);
  }
  std::size_t lead = 0;
  while (lead < cols_ && row[lead] == 0.0) ++lead;
  if (lead == cols_) return false;
  const auto inv = static_cast<double>(inverse_mod(static_cast<std::uint64_t>(row[lead])));
  scale_mod(row, inv, isa_);
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(row));
  return true;
}

}  // namespace pilab::kernels
