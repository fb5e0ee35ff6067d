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

#include "cvkvn/circuit.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cvkvn {

namespace {

struct KindInfo {
  GateKind kind;
  std::string_view token;
  bool two_mode;
  bool parameter;
};

constexpr std::array<KindInfo, 9> kKinds{{
    {GateKind::MomentumDisplacement, "D", false, true},
    {GateKind::QuadraticPhase, "P", false, true},
    {GateKind::CubicPhase, "V", false, true},
    {GateKind::QuarticPhase, "Q", false, true},
    {GateKind::Rotation, "R", false, true},
    {GateKind::ControlledZ, "CZ", true, true},
    {GateKind::ControlledX, "CX", true, true},
    {GateKind::Fourier, "F", false, false},
    {GateKind::FourierInverse, "FINV", false, false},
}};

const KindInfo& info(GateKind kind) {
  for (const auto& k : kKinds)
    if (k.kind == kind) return k;
  throw std::logic_error("unknown gate kind");
}

std::size_t parse_mode(std::string_view s, std::size_t line) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("gate listing line " + std::to_string(line) + ": bad mode '" +
                                std::string(s) + "'");
  return v;
}

}  // namespace

std::string_view token(GateKind kind) { return info(kind).token; }

std::optional<GateKind> gate_kind_from_token(std::string_view t) {
  for (const auto& k : kKinds)
    if (k.token == t) return k.kind;
  return std::nullopt;
}

bool is_two_mode(GateKind kind) { return info(kind).two_mode; }
bool has_parameter(GateKind kind) { return info(kind).parameter; }

void Gate::validate(std::size_t num_modes) const {
  if (modes[0] >= num_modes || (is_two_mode(kind) && modes[1] >= num_modes))
    throw std::invalid_argument(std::string(token(kind)) + " gate mode out of range for " +
                                std::to_string(num_modes) + " qumodes");
  if (is_two_mode(kind) && modes[0] == modes[1])
    throw std::invalid_argument(std::string(token(kind)) + " gate needs two distinct modes");
  if (!std::isfinite(param)) throw std::invalid_argument("gate parameter must be finite");
}

Gate Gate::inverse() const {
  Gate g = *this;
  if (kind == GateKind::Fourier) {
    g.kind = GateKind::FourierInverse;
  } else if (kind == GateKind::FourierInverse) {
    g.kind = GateKind::Fourier;
  } else {
    g.param = -param;
  }
  return g;
}

std::string Gate::to_string() const {
  std::string out(token(kind));
  out += " " + std::to_string(modes[0]);
  if (is_two_mode(kind)) out += "," + std::to_string(modes[1]);
  if (has_parameter(kind)) out += " " + format_double(param);
  return out;
}

void GateSequence::push_back(const Gate& g) {
  g.validate(num_modes_);
  gates_.push_back(g);
}

void GateSequence::append(const GateSequence& other) {
  if (other.num_modes_ != num_modes_)
    throw std::invalid_argument("cannot append a circuit over a different number of qumodes");
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

GateSequence GateSequence::inverse() const {
  GateSequence out(num_modes_);
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) out.gates_.push_back(it->inverse());
  return out;
}

std::string GateSequence::to_text() const {
  std::string out = "# qumodes " + std::to_string(num_modes_) + "\n";
  for (const auto& g : gates_) out += g.to_string() + "\n";
  return out;
}

GateSequence GateSequence::parse(std::string_view text, std::optional<std::size_t> num_modes) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::pair<Gate, std::size_t>> parsed;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string kind_tok;
    if (!(ls >> kind_tok)) continue;
    if (kind_tok[0] == '#') {
      std::string key;
      std::size_t n = 0;
      if (kind_tok == "#" && (ls >> key) && key == "qumodes" && (ls >> n)) num_modes = n;
      continue;
    }
    auto kind = gate_kind_from_token(kind_tok);
    if (!kind)
      throw std::invalid_argument("gate listing line " + std::to_string(line_no) + ": unknown gate '" +
                                  kind_tok + "'");
    Gate g{*kind, {0, 0}, 0.0};
    std::string modes_tok;
    if (!(ls >> modes_tok))
      throw std::invalid_argument("gate listing line " + std::to_string(line_no) + ": missing modes");
    auto comma = modes_tok.find(',');
    if (is_two_mode(*kind) != (comma != std::string::npos))
      throw std::invalid_argument("gate listing line " + std::to_string(line_no) + ": wrong mode count");
    g.modes[0] = parse_mode(std::string_view(modes_tok).substr(0, comma), line_no);
    if (comma != std::string::npos)
      g.modes[1] = parse_mode(std::string_view(modes_tok).substr(comma + 1), line_no);
    if (has_parameter(*kind)) {
      std::string p;
      if (!(ls >> p))
        throw std::invalid_argument("gate listing line " + std::to_string(line_no) + ": missing parameter");
      auto [ptr, ec] = std::from_chars(p.data(), p.data() + p.size(), g.param);
      if (ec != std::errc() || ptr != p.data() + p.size())
        throw std::invalid_argument("gate listing line " + std::to_string(line_no) + ": bad parameter '" +
                                    p + "'");
    }
    std::string extra;
    if (ls >> extra)
      throw std::invalid_argument("gate listing line " + std::to_string(line_no) + ": trailing '" + extra +
                                  "'");
    parsed.emplace_back(g, line_no);
  }
  if (!num_modes) throw std::invalid_argument("gate listing has no '# qumodes N' header");
  GateSequence seq(*num_modes);
  for (const auto& [g, ln] : parsed) seq.push_back(g);
  return seq;
}

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw std::runtime_error("format_double failed");
  return std::string(buf, ptr);
}

}  // namespace cvkvn
