// Copyright (c) the soliton-lab developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef SOLITONLAB_GRID_HPP
#define SOLITONLAB_GRID_HPP

#include <cstddef>
#include <memory>
#include <vector>

namespace soliton {

// Uniform periodic grid on [-L/2, L/2) with power-of-two point count.
//
// Wavenumbers follow the standard DFT layout: k_m = 2 pi m / L for
// m < n/2, then the negative branch; the Nyquist slot carries -pi n / L.
class Grid1D {
 public:
  static std::shared_ptr<const Grid1D> make(std::size_t n, double length);

  std::size_t n() const { return n_; }
  double length() const { return length_; }
  double dx() const { return dx_; }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& wavenumbers() const { return wavenumbers_; }
  double node(std::size_t j) const { return nodes_[j]; }
  double wavenumber(std::size_t m) const { return wavenumbers_[m]; }

  bool compatible_with(const Grid1D& other) const {
    return n_ == other.n_ && length_ == other.length_;
  }

 private:
  Grid1D(std::size_t n, double length);

  std::size_t n_;
  double length_;
  double dx_;
  std::vector<double> nodes_;
  std::vector<double> wavenumbers_;
};

using GridPtr = std::shared_ptr<const Grid1D>;

}  // namespace soliton

#endif  // SOLITONLAB_GRID_HPP
