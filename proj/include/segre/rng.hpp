// SPDX-License-Identifier: MIT
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace segre {

/// Seeded random source with deterministic stream splitting.
///
/// Every experiment derives all of its randomness from one 64-bit seed.
/// Child streams are obtained with fork(k): stream k of seed s is a
/// mt19937_64 engine seeded with splitmix64(s + GAMMA * (k + 1)), so any
/// subcomputation can be replayed from (seed, fork path) alone.
/// Gaussian variates use an explicit Box-Muller transform on 53-bit
/// uniforms; no implementation-defined distributions are involved.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), gen_(mix(seed)) {}

  std::uint64_t seed() const { return seed_; }

  Rng fork(std::uint64_t stream) const {
    return Rng(mix(seed_ + kGamma * (stream + 1)));
  }

  /// Uniform double in [0, 1).
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  /// Standard real Gaussian N(0, 1).
  double gaussian() {
    if (have_cache_) {
      have_cache_ = false;
      return cache_;
    }
    const double u1 = static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;
    const double u2 = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    cache_ = r * std::sin(a);
    have_cache_ = true;
    return r * std::cos(a);
  }

  /// Circular standard complex Gaussian CN(0, 1): E|z|^2 = 1.
  std::complex<double> complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re * M_SQRT1_2, im * M_SQRT1_2};
  }

  Eigen::VectorXcd gaussian_vector(Eigen::Index n) {
    Eigen::VectorXcd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = complex_gaussian();
    return v;
  }

  Eigen::MatrixXcd gaussian_matrix(Eigen::Index rows, Eigen::Index cols) {
    Eigen::MatrixXcd m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
      for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = complex_gaussian();
    return m;
  }

  static std::uint64_t mix(std::uint64_t z) {
    z += kGamma;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  std::uint64_t seed_;
  std::mt19937_64 gen_;
  double cache_ = 0.0;
  bool have_cache_ = false;
};

}  // namespace segre
