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

#include <array>
#include <cmath>
#include <cstdint>
#include <ctime>
#include <string>

#include <json.hpp>

#include "qrsp/noise.hpp"
#include "qrsp/version.hpp"

namespace qrsp {

struct ReportOptions {
  bool with_timestamp = true;
  int samples = 0;  // draw this many outcomes when > 0
  std::uint64_t seed = 0;
};

namespace detail {

inline std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace detail

// Machine-readable record of one noisy protocol evaluation. Field order is
// fixed so identical inputs always serialize to identical bytes (timestamp
// excluded unless requested).
inline nlohmann::ordered_json make_run_report(const ProtocolParams& p, NoiseKind kind, double rate,
                                              const ReportOptions& options = {}) {
  nlohmann::ordered_json report;
  report["tool"] = "qrsp";
  report["version"] = QRSP_VERSION;
  if (options.with_timestamp) report["timestamp"] = detail::utc_timestamp();

  report["inputs"] = {
      {"alpha2", p.alpha * p.alpha}, {"beta2", p.beta * p.beta},
      {"gamma2", p.gamma * p.gamma}, {"delta2", p.delta * p.delta},
      {"noise", to_string(kind)},    {"rate", rate},
  };

  const DensityMatrix eps = noisy_cluster(kind, rate);
  const StateVector target = make_targets(p).joint;

  std::array<double, 4> probabilities{};
  double average = 0.0;
  double worst_deviation = 0.0;
  auto outcomes = nlohmann::ordered_json::array();
  for (int outcome = 1; outcome <= 4; ++outcome) {
    const DensityMatrix out = conditional_output(eps, outcome, p);
    const double tr = out.trace().real();
    const double f_paper = fidelity_pure(target, out);
    const double f_norm = tr < 1e-300 ? 0.0 : f_paper / tr;
    // The unnormalized input carries 4x the physical trace, so tr/4 is the
    // outcome probability of the normalized protocol.
    probabilities[static_cast<std::size_t>(outcome - 1)] = tr / 4.0;
    average += 0.25 * f_paper;

    nlohmann::ordered_json rec;
    rec["outcome"] = outcome;
    rec["probability"] = tr / 4.0;
    rec["fidelity_paper"] = f_paper;
    rec["fidelity_normalized"] = f_norm;
    if (outcome == 2) {
      const double closed = closed_form_fidelity(kind, p, rate);
      rec["closed_form"] = closed;
      worst_deviation = std::abs(closed - f_paper);
    }
    outcomes.push_back(std::move(rec));
  }
  report["outcomes"] = std::move(outcomes);
  report["average_fidelity"] = average;
  report["closed_form_deviation"] = worst_deviation;

  if (options.samples > 0) {
    std::array<int, 4> counts{};
    for (int s = 0; s < options.samples; ++s) {
      const int o = sample_outcome(probabilities, options.seed + static_cast<std::uint64_t>(s));
      counts[static_cast<std::size_t>(o - 1)]++;
    }
    nlohmann::ordered_json sampling;
    sampling["seed"] = options.seed;
    sampling["samples"] = options.samples;
    sampling["counts"] = counts;
    auto frequencies = nlohmann::ordered_json::array();
    for (int c : counts) frequencies.push_back(static_cast<double>(c) / options.samples);
    sampling["frequencies"] = std::move(frequencies);
    report["sampling"] = std::move(sampling);
  }
  return report;
}

}  // namespace qrsp
