// Copyright (c) the soliton-lab developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "solitonlab/fft.hpp"

#include <cmath>

#include "solitonlab/errors.hpp"

namespace soliton {

Fft::Fft(std::size_t n) : n_(n) {
  if (!is_power_of_two(n)) throw DimensionError("Fft: size must be a power of two");
  bitrev_.resize(n);
  std::size_t log2n = 0;
  while ((std::size_t{1} << log2n) < n) ++log2n;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = 0;
    for (std::size_t b = 0; b < log2n; ++b)
      if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (log2n - 1 - b);
    bitrev_[i] = r;
  }
  twiddle_.resize(n / 2);
  const double step = -2.0 * M_PI / static_cast<double>(n);
  for (std::size_t j = 0; j < n / 2; ++j)
    twiddle_[j] = std::polar(1.0, step * static_cast<double>(j));
}

void Fft::forward(std::complex<double>* a) const {
  const std::size_t n = n_;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = bitrev_[i];
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n / len;
    for (std::size_t base = 0; base < n; base += len) {
      for (std::size_t j = 0; j < half; ++j) {
        const std::complex<double> w = twiddle_[j * stride];
        const std::complex<double> u = a[base + j];
        const std::complex<double> t = w * a[base + j + half];
        a[base + j] = u + t;
        a[base + j + half] = u - t;
      }
    }
  }
}

void Fft::inverse(std::complex<double>* a) const {
  for (std::size_t i = 0; i < n_; ++i) a[i] = std::conj(a[i]);
  forward(a);
  const double scale = 1.0 / static_cast<double>(n_);
  for (std::size_t i = 0; i < n_; ++i) a[i] = std::conj(a[i]) * scale;
}

void Fft::forward(std::vector<std::complex<double>>& data) const {
  if (data.size() != n_) throw DimensionError("Fft: buffer size mismatch");
  forward(data.data());
}

void Fft::inverse(std::vector<std::complex<double>>& data) const {
  if (data.size() != n_) throw DimensionError("Fft: buffer size mismatch");
  inverse(data.data());
}

}  // namespace soliton
