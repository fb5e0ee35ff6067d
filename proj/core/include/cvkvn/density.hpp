// Copyright 2026 The cvkvn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace cvkvn {

/// Density sampled on a tensor grid.  `values` holds probability density
/// (not cell mass) in row-major order with axis 0 slowest.
struct DensityTable {
  std::vector<std::vector<double>> axes;
  std::vector<double> values;

  std::size_t num_axes() const { return axes.size(); }
  std::size_t size() const { return values.size(); }
  /// Product of the (uniform) axis spacings.
  double cell_volume() const;
  /// Coordinates of the flattened cell index.
  std::vector<double> point(std::size_t flat) const;

  double total_mass() const;
  std::vector<double> mean() const;
  /// Central second moments, row-major num_axes x num_axes.
  std::vector<double> covariance() const;
};

/// Same shape and identical axis coordinates (to 1e-12 relative).
bool same_grid(const DensityTable& a, const DensityTable& b);

struct Moments {
  std::vector<double> mean;
  std::vector<double> covariance;  // row-major
};

Moments moments_of(const DensityTable& d);

/// `x1,...,xd,density` header plus one row per cell.
std::string density_csv(const DensityTable& d);
/// `kind,i,j,value` with kind in {mean, covariance}; indices one-based, j
/// empty for means.
std::string moments_csv(const Moments& m);
/// `x1,...,xd` header plus one row per sample.
std::string samples_csv(const std::vector<std::vector<double>>& samples);

}  // namespace cvkvn
