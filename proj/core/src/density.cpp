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

#include "cvkvn/density.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cvkvn/circuit.hpp"

namespace cvkvn {

double DensityTable::cell_volume() const {
  double v = 1.0;
  for (const auto& ax : axes) v *= ax.size() > 1 ? ax[1] - ax[0] : 1.0;
  return v;
}

std::vector<double> DensityTable::point(std::size_t flat) const {
  std::vector<double> x(axes.size());
  for (std::size_t d = axes.size(); d-- > 0;) {
    x[d] = axes[d][flat % axes[d].size()];
    flat /= axes[d].size();
  }
  return x;
}

double DensityTable::total_mass() const {
  double s = 0.0;
  for (double v : values) s += v;
  return s * cell_volume();
}

std::vector<double> DensityTable::mean() const { return moments_of(*this).mean; }
std::vector<double> DensityTable::covariance() const { return moments_of(*this).covariance; }

bool same_grid(const DensityTable& a, const DensityTable& b) {
  if (a.axes.size() != b.axes.size() || a.values.size() != b.values.size()) return false;
  for (std::size_t d = 0; d < a.axes.size(); ++d) {
    if (a.axes[d].size() != b.axes[d].size()) return false;
    for (std::size_t i = 0; i < a.axes[d].size(); ++i) {
      double x = a.axes[d][i], y = b.axes[d][i];
      if (std::abs(x - y) > 1e-12 * std::max({1.0, std::abs(x), std::abs(y)})) return false;
    }
  }
  return true;
}

Moments moments_of(const DensityTable& d) {
  const std::size_t k = d.num_axes();
  Moments m{std::vector<double>(k, 0.0), std::vector<double>(k * k, 0.0)};
  double mass = 0.0;
  for (std::size_t c = 0; c < d.size(); ++c) {
    const double w = d.values[c];
    if (w == 0.0) continue;
    auto x = d.point(c);
    mass += w;
    for (std::size_t i = 0; i < k; ++i) m.mean[i] += w * x[i];
  }
  if (mass <= 0.0) throw std::domain_error("density has no mass");
  for (auto& v : m.mean) v /= mass;
  for (std::size_t c = 0; c < d.size(); ++c) {
    const double w = d.values[c];
    if (w == 0.0) continue;
    auto x = d.point(c);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m.covariance[i * k + j] += w * (x[i] - m.mean[i]) * (x[j] - m.mean[j]);
  }
  for (auto& v : m.covariance) v /= mass;
  return m;
}

std::string density_csv(const DensityTable& d) {
  std::string out;
  for (std::size_t i = 0; i < d.num_axes(); ++i) out += "x" + std::to_string(i + 1) + ",";
  out += "density\n";
  for (std::size_t c = 0; c < d.size(); ++c) {
    for (double x : d.point(c)) out += format_double(x) + ",";
    out += format_double(d.values[c]) + "\n";
  }
  return out;
}

std::string moments_csv(const Moments& m) {
  const std::size_t k = m.mean.size();
  std::string out = "kind,i,j,value\n";
  for (std::size_t i = 0; i < k; ++i) out += "mean," + std::to_string(i + 1) + ",," + format_double(m.mean[i]) + "\n";
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      out += "covariance," + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
             format_double(m.covariance[i * k + j]) + "\n";
  return out;
}

std::string samples_csv(const std::vector<std::vector<double>>& samples) {
  std::string out;
  const std::size_t k = samples.empty() ? 0 : samples.front().size();
  for (std::size_t i = 0; i < k; ++i) out += (i ? ",x" : "x") + std::to_string(i + 1);
  out += "\n";
  for (const auto& s : samples) {
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + format_double(s[i]);
    out += "\n";
  }
  return out;
}

}  // namespace cvkvn
