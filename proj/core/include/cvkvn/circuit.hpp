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

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cvkvn {

/// Elementary continuous-variable gates.  With X, P the quadratures of a
/// qumode and s the gate parameter:
///
///   MomentumDisplacement  D_j(s)    = exp(i s X_j)
///   QuadraticPhase        P_j(s)    = exp(i s X_j^2 / 2)
///   CubicPhase            V_j(s)    = exp(i s X_j^3 / 3)
///   QuarticPhase          Q_j(s)    = exp(i s X_j^4)
///   Rotation              R_j(s)    = exp(i s (X_j^2 + P_j^2) / 2)
///   ControlledZ           CZ_jk(s)  = exp(i s X_j X_k)
///   ControlledX           CX_jk(s)  = exp(-i s X_j P_k)
///   Fourier               F_j       = R_j(pi/2) up to a global phase
///   FourierInverse        F_j^dagger
///
/// CX_jk(s) translates the target coordinate x_k by +s * x_j.
enum class GateKind {
  MomentumDisplacement,
  QuadraticPhase,
  CubicPhase,
  QuarticPhase,
  Rotation,
  ControlledZ,
  ControlledX,
  Fourier,
  FourierInverse,
};

/// Short token used in the text format (`D`, `P`, `V`, `Q`, `R`, `CZ`, `CX`,
/// `F`, `FINV`).
std::string_view token(GateKind kind);
std::optional<GateKind> gate_kind_from_token(std::string_view token);

bool is_two_mode(GateKind kind);
bool has_parameter(GateKind kind);

struct Gate {
  GateKind kind = GateKind::MomentumDisplacement;
  /// modes[0] is the acted-on mode (control for CX); modes[1] is used by
  /// two-mode gates only (target for CX).
  std::array<std::size_t, 2> modes{0, 0};
  double param = 0.0;

  static Gate displacement(std::size_t j, double s) { return {GateKind::MomentumDisplacement, {j, 0}, s}; }
  static Gate quadratic_phase(std::size_t j, double s) { return {GateKind::QuadraticPhase, {j, 0}, s}; }
  static Gate cubic_phase(std::size_t j, double s) { return {GateKind::CubicPhase, {j, 0}, s}; }
  static Gate quartic_phase(std::size_t j, double s) { return {GateKind::QuarticPhase, {j, 0}, s}; }
  static Gate rotation(std::size_t j, double s) { return {GateKind::Rotation, {j, 0}, s}; }
  static Gate cz(std::size_t j, std::size_t k, double s) { return {GateKind::ControlledZ, {j, k}, s}; }
  static Gate cx(std::size_t control, std::size_t target, double s) {
    return {GateKind::ControlledX, {control, target}, s};
  }
  static Gate fourier(std::size_t j) { return {GateKind::Fourier, {j, 0}, 0.0}; }
  static Gate fourier_inverse(std::size_t j) { return {GateKind::FourierInverse, {j, 0}, 0.0}; }

  /// Throws std::invalid_argument on a repeated mode, an out-of-range mode or
  /// a non-finite parameter.
  void validate(std::size_t num_modes) const;
  Gate inverse() const;
  /// `KIND mode[,mode] [param]`, modes zero-based.
  std::string to_string() const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Ordered gate list; gates()[0] is applied first.
class GateSequence {
 public:
  explicit GateSequence(std::size_t num_modes) : num_modes_(num_modes) {}

  std::size_t num_modes() const { return num_modes_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  void push_back(const Gate& g);
  void append(const GateSequence& other);
  /// The inverse circuit: reversed order, each gate inverted.
  GateSequence inverse() const;

  /// One gate per line, preceded by a `# qumodes N` header.
  std::string to_text() const;
  /// Reads the text format.  Blank lines and other `#` comments are ignored;
  /// the mode count comes from the header, else from `num_modes`.
  static GateSequence parse(std::string_view text, std::optional<std::size_t> num_modes = std::nullopt);

  friend bool operator==(const GateSequence&, const GateSequence&) = default;

 private:
  std::size_t num_modes_;
  std::vector<Gate> gates_;
};

/// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

}  // namespace cvkvn
