// Copyright (c) the soliton-lab developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef SOLITONLAB_FFT_HPP
#define SOLITONLAB_FFT_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace soliton {

// Iterative radix-2 complex FFT for power-of-two sizes.
//
// Twiddles and the bit-reversal permutation are cached at construction, so
// a plan is immutable and safe to share across threads; transforms work in
// place on caller-owned buffers.
class Fft {
 public:
  explicit Fft(std::size_t n);

  // Unnormalized forward transform, X_m = sum_j x_j exp(-2 pi i j m / n).
  void forward(std::complex<double>* data) const;
  // Inverse transform including the 1/n factor.
  void inverse(std::complex<double>* data) const;

  void forward(std::vector<std::complex<double>>& data) const;
  void inverse(std::vector<std::complex<double>>& data) const;

  std::size_t size() const { return n_; }

  static bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

 private:
  std::size_t n_;
  std::vector<std::size_t> bitrev_;
  std::vector<std::complex<double>> twiddle_;  // exp(-2 pi i j / n), j < n/2
};

}  // namespace soliton

#endif  // SOLITONLAB_FFT_HPP
