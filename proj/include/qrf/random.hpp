#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <string_view>

#include <Eigen/Dense>

namespace qrf {

/// FNV-1a 64-bit hash; used to derive per-check seeds and config hashes.
inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

/// Deterministic random source. Gaussian variates use an explicit
/// Box-Muller transform instead of std::normal_distribution so that the
/// produced sequence is identical across standard library implementations.
class Prng {
public:
  explicit Prng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n).
  int uniform_int(int n) {
    return static_cast<int>(engine_() % static_cast<std::uint64_t>(n));
  }

  double gaussian() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  std::complex<double> complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re / std::sqrt(2.0), im / std::sqrt(2.0)};
  }

  Eigen::MatrixXcd gaussian_matrix(Eigen::Index dim) {
    Eigen::MatrixXcd m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
      for (Eigen::Index j = 0; j < dim; ++j) m(i, j) = complex_gaussian();
    return m;
  }

  Eigen::MatrixXcd gaussian_hermitian(Eigen::Index dim) {
    const Eigen::MatrixXcd m = gaussian_matrix(dim);
    return 0.5 * (m + m.adjoint()).eval();
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace qrf
