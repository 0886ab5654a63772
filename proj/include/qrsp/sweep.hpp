// Copyright 2026 The qrsp authors
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

#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qrsp/noise.hpp"

namespace qrsp {

// Formats a double with 12 significant digits, locale-independent.
inline std::string format_g12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// One swept quantity. Valid names: "alpha2", "gamma2", "rate".
struct SweepAxis {
  std::string name;
  double min = 0.0;
  double max = 1.0;
  int steps = 51;
};

// A fidelity scan over one or two axes; whatever is not swept must appear in
// fixed. The conditional outcome is fixed to 2, where the closed forms live.
// Both conventions are always emitted as CSV columns; convention records which
// one a downstream plot should read.
struct SweepSpec {
  NoiseKind kind = NoiseKind::AmplitudeDamping;
  std::vector<SweepAxis> axes;
  std::map<std::string, double> fixed;
  int outcome = 2;
  FidelityConvention convention = FidelityConvention::PaperUnnormalized;
  std::string preset;              // empty for hand-built specs
  std::vector<std::string> notes;  // extra "# ..." metadata lines
};

namespace detail {

inline bool known_axis_name(const std::string& n) {
  return n == "alpha2" || n == "gamma2" || n == "rate";
}

}  // namespace detail

inline void validate(const SweepSpec& spec) {
  if (spec.axes.empty() || spec.axes.size() > 2) {
    throw std::invalid_argument("sweep needs one or two axes");
  }
  if (spec.outcome != 2) {
    throw std::invalid_argument("sweep outcome is fixed to 2");
  }
  std::map<std::string, int> seen;
  for (const auto& ax : spec.axes) {
    if (!detail::known_axis_name(ax.name)) {
      throw std::invalid_argument("unknown axis '" + ax.name + "'");
    }
    if (ax.steps < 2) throw std::invalid_argument("axis needs at least 2 steps");
    if (!(ax.min < ax.max)) throw std::invalid_argument("axis range must be increasing");
    seen[ax.name]++;
  }
  for (const auto& [name, value] : spec.fixed) {
    if (!detail::known_axis_name(name)) {
      throw std::invalid_argument("unknown fixed quantity '" + name + "'");
    }
    seen[name]++;
    (void)value;
  }
  for (const char* name : {"alpha2", "gamma2", "rate"}) {
    const auto it = seen.find(name);
    if (it == seen.end() || it->second == 0) {
      throw std::invalid_argument(std::string("quantity '") + name + "' is neither swept nor fixed");
    }
    if (it->second > 1) {
      throw std::invalid_argument(std::string("quantity '") + name + "' given twice");
    }
  }
  for (const auto& ax : spec.axes) {
    if (ax.min < 0.0 || ax.max > 1.0) throw std::invalid_argument("axis range out of [0, 1]");
  }
  for (const auto& [name, value] : spec.fixed) {
    if (value < 0.0 || value > 1.0) {
      throw std::invalid_argument("fixed value for '" + name + "' out of [0, 1]");
    }
  }
}

inline const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {
      "fig3a", "fig3b", "fig3c", "fig3d", "fig4a", "fig4b",
      "fig4c", "fig4d", "fig5a", "fig5b", "fig5c", "fig5d",
  };
  return names;
}

// Canned scans in three families: 3 is amplitude-damping, 4 is phase-flip,
// 5 is bit-flip; letters a-d pick which quantities sweep.
inline SweepSpec preset_sweep(const std::string& name) {
  if (name.size() != 5 || name.substr(0, 3) != "fig" || name[3] < '3' || name[3] > '5' ||
      name[4] < 'a' || name[4] > 'd') {
    throw std::invalid_argument("unknown preset '" + name + "'");
  }
  SweepSpec spec;
  spec.preset = name;
  switch (name[3]) {
    case '3':
      spec.kind = NoiseKind::AmplitudeDamping;
      break;
    case '4':
      spec.kind = NoiseKind::PhaseFlip;
      break;
    default:
      spec.kind = NoiseKind::BitFlip;
      break;
  }
  switch (name[4]) {
    case 'a':
      spec.axes = {{"gamma2", 0.0, 1.0, 51}, {"rate", 0.0, 1.0, 51}};
      spec.fixed = {{"alpha2", 0.3}};
      break;
    case 'b':
      spec.axes = {{"alpha2", 0.0, 1.0, 51}, {"rate", 0.0, 1.0, 51}};
      spec.fixed = {{"gamma2", 0.3}};
      break;
    case 'c':
      spec.axes = {{"alpha2", 0.0, 1.0, 51}, {"gamma2", 0.0, 1.0, 51}};
      spec.fixed = {{"rate", 0.5}};
      spec.notes = {"# note: fixed rate=0.5 is this kind's own noise rate"};
      break;
    default:
      spec.axes = {{"rate", 0.0, 1.0, 51}};
      spec.fixed = {{"alpha2", 0.4}, {"gamma2", 0.3}};
      spec.notes = {
          "# note: two-qubit target is sqrt(gamma2)|00> + sqrt(1-gamma2)|11>;",
          "# note: a |01>-form variant lies outside this target family"};
      break;
  }
  return spec;
}

// Streams the scan as CSV: "#" metadata lines, a header, then one row per
// grid point holding the axis values and three fidelity routes
// (axis1[,axis2],F_closed,F_numeric_paper,F_numeric_normalized).
inline void run_sweep(const SweepSpec& spec, std::ostream& out) {
  validate(spec);

  out << "# qrsp sweep" << (spec.preset.empty() ? "" : " preset=" + spec.preset) << "\n";
  out << "# noise=" << to_string(spec.kind) << " outcome=" << spec.outcome << "\n";
  if (!spec.fixed.empty()) {
    out << "# fixed:";
    for (const auto& [name, value] : spec.fixed) out << " " << name << "=" << format_g12(value);
    out << "\n";
  }
  for (std::size_t i = 0; i < spec.axes.size(); ++i) {
    const auto& ax = spec.axes[i];
    out << "# axis" << (i + 1) << ": " << ax.name << " in [" << format_g12(ax.min) << ", "
        << format_g12(ax.max) << "] steps=" << ax.steps << "\n";
  }
  for (const auto& note : spec.notes) out << note << "\n";
  out << "axis1";
  if (spec.axes.size() == 2) out << ",axis2";
  out << ",F_closed,F_numeric_paper,F_numeric_normalized\n";

  // The noisy input depends only on the rate and the recovery operator only
  // on the squared coefficients; cache both across the grid.
  std::map<double, DensityMatrix> eps_by_rate;
  std::pair<double, double> m_key{-1.0, -1.0};
  Matrix m_cached;
  StateVector target(3);

  auto emit_row = [&](const std::vector<double>& axis_values) {
    double alpha2 = 0.0, gamma2 = 0.0, rate = 0.0;
    auto assign = [&](const std::string& name, double value) {
      if (name == "alpha2") alpha2 = value;
      if (name == "gamma2") gamma2 = value;
      if (name == "rate") rate = value;
    };
    for (std::size_t i = 0; i < spec.axes.size(); ++i) assign(spec.axes[i].name, axis_values[i]);
    for (const auto& [name, value] : spec.fixed) assign(name, value);

    const ProtocolParams p = ProtocolParams::from_squares(alpha2, gamma2);
    auto eps_it = eps_by_rate.find(rate);
    if (eps_it == eps_by_rate.end()) {
      eps_it = eps_by_rate.emplace(rate, noisy_cluster(spec.kind, rate)).first;
    }
    if (m_key != std::make_pair(alpha2, gamma2)) {
      m_key = {alpha2, gamma2};
      m_cached = outcome_operator(spec.outcome, p);
      target = make_targets(p).joint;
    }

    const DensityMatrix rho = apply_outcome_operator(eps_it->second, m_cached);
    const double f_paper = fidelity_pure(target, rho);
    const double tr = rho.trace().real();
    const double f_norm = tr < 1e-300 ? 0.0 : f_paper / tr;
    const double f_closed = closed_form_fidelity(spec.kind, p, rate);

    for (double v : axis_values) out << format_g12(v) << ",";
    out << format_g12(f_closed) << "," << format_g12(f_paper) << "," << format_g12(f_norm) << "\n";
  };

  auto axis_value = [](const SweepAxis& ax, int i) {
    return ax.min + (ax.max - ax.min) * static_cast<double>(i) / (ax.steps - 1);
  };

  if (spec.axes.size() == 1) {
    for (int i = 0; i < spec.axes[0].steps; ++i) emit_row({axis_value(spec.axes[0], i)});
  } else {
    for (int i = 0; i < spec.axes[0].steps; ++i) {
      for (int j = 0; j < spec.axes[1].steps; ++j) {
        emit_row({axis_value(spec.axes[0], i), axis_value(spec.axes[1], j)});
      }
    }
  }
}

}  // namespace qrsp
