// Copyright (c) the soliton-lab developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "solitonlab/grid.hpp"

#include <cmath>

#include "solitonlab/errors.hpp"
#include "solitonlab/fft.hpp"

namespace soliton {

Grid1D::Grid1D(std::size_t n, double length) : n_(n), length_(length) {
  if (n < 16 || !Fft::is_power_of_two(n))
    throw DimensionError("Grid1D: n must be a power of two, n >= 16");
  if (!(length > 0.0) || !std::isfinite(length))
    throw DimensionError("Grid1D: length must be positive and finite");
  dx_ = length / static_cast<double>(n);  // exact: n is a power of two
  nodes_.resize(n);
  wavenumbers_.resize(n);
  const double k0 = 2.0 * M_PI / length;
  for (std::size_t j = 0; j < n; ++j) {
    nodes_[j] = -0.5 * length + dx_ * static_cast<double>(j);
    const auto m = static_cast<std::ptrdiff_t>(j);
    const auto half = static_cast<std::ptrdiff_t>(n / 2);
    wavenumbers_[j] = k0 * static_cast<double>(m < half ? m : m - static_cast<std::ptrdiff_t>(n));
  }
}

std::shared_ptr<const Grid1D> Grid1D::make(std::size_t n, double length) {
  return std::shared_ptr<const Grid1D>(new Grid1D(n, length));
}

}  // namespace soliton
