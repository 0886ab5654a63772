// Copyright 2026 The qrsp authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sstream>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "qrsp/noise.hpp"
#include "qrsp/sweep.hpp"

namespace {

struct ParsedCsv {
  std::vector<std::string> comments;
  std::string header;
  std::vector<std::vector<double>> rows;
};

ParsedCsv parse_csv(const std::string& text) {
  ParsedCsv parsed;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      parsed.comments.push_back(line);
      continue;
    }
    if (parsed.header.empty()) {
      parsed.header = line;
      continue;
    }
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
    parsed.rows.push_back(std::move(row));
  }
  return parsed;
}

std::string sweep_to_string(const qrsp::SweepSpec& spec) {
  std::ostringstream out;
  qrsp::run_sweep(spec, out);
  return out.str();
}

qrsp::SweepSpec tiny_rate_sweep(qrsp::NoiseKind kind, double alpha2, double gamma2, int steps) {
  qrsp::SweepSpec spec;
  spec.kind = kind;
  spec.axes = {{"rate", 0.0, 1.0, steps}};
  spec.fixed = {{"alpha2", alpha2}, {"gamma2", gamma2}};
  return spec;
}

}  // namespace

TEST_CASE("12-digit float formatting") {
  CHECK(qrsp::format_g12(0.0) == "0");
  CHECK(qrsp::format_g12(1.0) == "1");
  CHECK(qrsp::format_g12(0.5) == "0.5");
  CHECK(qrsp::format_g12(1.0 / 3.0) == "0.333333333333");
  CHECK(qrsp::format_g12(0.1 + 0.2) == "0.3");  // 12 digits hide the ulp noise
  CHECK(qrsp::format_g12(1e-3) == "0.001");
}

TEST_CASE("sweep validation accepts well-formed specs") {
  CHECK_NOTHROW(qrsp::validate(tiny_rate_sweep(qrsp::NoiseKind::PhaseFlip, 0.5, 0.5, 2)));

  qrsp::SweepSpec two_axis;
  two_axis.axes = {{"alpha2", 0.0, 1.0, 3}, {"gamma2", 0.0, 1.0, 3}};
  two_axis.fixed = {{"rate", 0.5}};
  CHECK_NOTHROW(qrsp::validate(two_axis));
}

TEST_CASE("sweep validation rejects malformed specs") {
  qrsp::SweepSpec spec;
  CHECK_THROWS_AS(qrsp::validate(spec), std::invalid_argument);  // no axes

  spec = tiny_rate_sweep(qrsp::NoiseKind::BitFlip, 0.5, 0.5, 2);
  spec.axes.push_back({"alpha2", 0.0, 1.0, 2});
  spec.axes.push_back({"gamma2", 0.0, 1.0, 2});
  CHECK_THROWS_AS(qrsp::validate(spec), std::invalid_argument);  // three axes

  spec = tiny_rate_sweep(qrsp::NoiseKind::BitFlip, 0.5, 0.5, 2);
  spec.outcome = 1;
  CHECK_THROWS_AS(qrsp::validate(spec), std::invalid_argument);  // closed form lives on 2

  spec = tiny_rate_sweep(qrsp::NoiseKind::BitFlip, 0.5, 0.5, 2);
  spec.axes[0].name = "lambda";
  CHECK_THROWS_AS(qrsp::validate(spec), std::invalid_argument);  // unknown name

  spec = tiny_rate_sweep(qrsp::NoiseKind::BitFlip, 0.5, 0.5, 2);
  spec.fixed["rate"] = 0.3;
  CHECK_THROWS_AS(qrsp::validate(spec), std::invalid_argument);  // rate both swept and fixed

  spec = tiny_rate_sweep(qrsp::NoiseKind::BitFlip, 0.5, 0.5, 2);
  spec.fixed.erase("gamma2");
  CHECK_THROWS_AS(qrsp::validate(spec), std::invalid_argument);  // gamma2 uncovered

  spec = tiny_rate_sweep(qrsp::NoiseKind::BitFlip, 0.5, 0.5, 2);
  spec.axes[0].steps = 1;
  CHECK_THROWS_AS(qrsp::validate(spec), std::invalid_argument);  // too few steps

  spec = tiny_rate_sweep(qrsp::NoiseKind::BitFlip, 0.5, 0.5, 2);
  spec.axes[0] = {"rate", 0.7, 0.2, 5};
  CHECK_THROWS_AS(qrsp::validate(spec), std::invalid_argument);  // decreasing range

  spec = tiny_rate_sweep(qrsp::NoiseKind::BitFlip, 0.5, 0.5, 2);
  spec.axes[0] = {"rate", 0.0, 1.5, 5};
  CHECK_THROWS_AS(qrsp::validate(spec), std::invalid_argument);  // range beyond 1

  spec = tiny_rate_sweep(qrsp::NoiseKind::BitFlip, 1.2, 0.5, 2);
  CHECK_THROWS_AS(qrsp::validate(spec), std::invalid_argument);  // fixed value beyond 1
}

TEST_CASE("preset catalogue") {
  const auto& names = qrsp::preset_names();
  REQUIRE(names.size() == 12);
  for (const auto& name : names) {
    const auto spec = qrsp::preset_sweep(name);
    CHECK(spec.preset == name);
    CHECK_NOTHROW(qrsp::validate(spec));
    const int steps = spec.axes[0].steps;
    CHECK(steps == 51);
  }
  CHECK_THROWS_AS(qrsp::preset_sweep("fig6a"), std::invalid_argument);
  CHECK_THROWS_AS(qrsp::preset_sweep("fig3e"), std::invalid_argument);
  CHECK_THROWS_AS(qrsp::preset_sweep(""), std::invalid_argument);
}

TEST_CASE("preset families pin noise kind and geometry") {
  const auto fig3a = qrsp::preset_sweep("fig3a");
  CHECK(fig3a.kind == qrsp::NoiseKind::AmplitudeDamping);
  REQUIRE(fig3a.axes.size() == 2);
  CHECK(fig3a.axes[0].name == "gamma2");
  CHECK(fig3a.axes[1].name == "rate");
  CHECK(fig3a.axes[0].min == 0.0);
  CHECK(fig3a.axes[0].max == 1.0);
  CHECK(fig3a.fixed.at("alpha2") == 0.3);

  const auto fig4b = qrsp::preset_sweep("fig4b");
  CHECK(fig4b.kind == qrsp::NoiseKind::PhaseFlip);
  CHECK(fig4b.axes[0].name == "alpha2");
  CHECK(fig4b.fixed.at("gamma2") == 0.3);

  const auto fig5c = qrsp::preset_sweep("fig5c");
  CHECK(fig5c.kind == qrsp::NoiseKind::BitFlip);
  CHECK(fig5c.axes[0].name == "alpha2");
  CHECK(fig5c.axes[1].name == "gamma2");
  CHECK(fig5c.fixed.at("rate") == 0.5);
  CHECK_FALSE(fig5c.notes.empty());

  const auto fig5d = qrsp::preset_sweep("fig5d");
  REQUIRE(fig5d.axes.size() == 1);
  CHECK(fig5d.axes[0].name == "rate");
  CHECK(fig5d.fixed.at("alpha2") == 0.4);
  CHECK(fig5d.fixed.at("gamma2") == 0.3);
  CHECK_FALSE(fig5d.notes.empty());
}

TEST_CASE("two-point phase-flip sweep emits the exact endpoint rows") {
  auto spec = tiny_rate_sweep(qrsp::NoiseKind::PhaseFlip, 0.5, 0.5, 2);
  const std::string text = sweep_to_string(spec);

  // With balanced coefficients the closed form drops from 1 to 0.
  CHECK(text.find("\n0,1,") != std::string::npos);
  CHECK(text.find("\n1,0,") != std::string::npos);

  const auto parsed = parse_csv(text);
  CHECK(parsed.header == "axis1,F_closed,F_numeric_paper,F_numeric_normalized");
  REQUIRE(parsed.rows.size() == 2);
  REQUIRE(parsed.rows[0].size() == 4);
  CHECK(parsed.rows[0][0] == 0.0);
  CHECK(parsed.rows[0][1] == 1.0);
  CHECK(parsed.rows[1][0] == 1.0);
  CHECK(parsed.rows[1][1] == 0.0);
}

TEST_CASE("metadata lines carry kind, outcome, fixed values, and axis ranges") {
  const std::string text = sweep_to_string(qrsp::preset_sweep("fig5d"));
  CHECK(text.find("# qrsp sweep preset=fig5d\n") != std::string::npos);
  CHECK(text.find("# noise=bit-flip outcome=2\n") != std::string::npos);
  CHECK(text.find("# fixed: alpha2=0.4 gamma2=0.3\n") != std::string::npos);
  CHECK(text.find("# axis1: rate in [0, 1] steps=51\n") != std::string::npos);

  const std::string grid = sweep_to_string(qrsp::preset_sweep("fig3c"));
  CHECK(grid.find("# noise=amplitude-damping outcome=2\n") != std::string::npos);
  CHECK(grid.find("# fixed: rate=0.5\n") != std::string::npos);
  CHECK(grid.find("# axis1: alpha2 in [0, 1] steps=51\n") != std::string::npos);
  CHECK(grid.find("# axis2: gamma2 in [0, 1] steps=51\n") != std::string::npos);
  CHECK(grid.find("axis1,axis2,F_closed,F_numeric_paper,F_numeric_normalized\n") !=
        std::string::npos);
}

TEST_CASE("two-axis sweeps run in row-major axis order") {
  qrsp::SweepSpec spec;
  spec.kind = qrsp::NoiseKind::BitFlip;
  spec.axes = {{"alpha2", 0.0, 1.0, 3}, {"gamma2", 0.0, 1.0, 2}};
  spec.fixed = {{"rate", 0.25}};
  const auto parsed = parse_csv(sweep_to_string(spec));

  CHECK(parsed.header == "axis1,axis2,F_closed,F_numeric_paper,F_numeric_normalized");
  REQUIRE(parsed.rows.size() == 6);
  const double expect_axis1[] = {0.0, 0.0, 0.5, 0.5, 1.0, 1.0};
  const double expect_axis2[] = {0.0, 1.0, 0.0, 1.0, 0.0, 1.0};
  for (int i = 0; i < 6; ++i) {
    CHECK(parsed.rows[static_cast<std::size_t>(i)][0] == expect_axis1[i]);
    CHECK(parsed.rows[static_cast<std::size_t>(i)][1] == expect_axis2[i]);
  }
}

TEST_CASE("numeric columns agree with the closed form on emitted rows") {
  for (const auto kind : {qrsp::NoiseKind::AmplitudeDamping, qrsp::NoiseKind::PhaseFlip,
                          qrsp::NoiseKind::BitFlip}) {
    const auto parsed = parse_csv(sweep_to_string(tiny_rate_sweep(kind, 0.3, 0.6, 5)));
    REQUIRE(parsed.rows.size() == 5);
    for (const auto& row : parsed.rows) {
      REQUIRE(row.size() == 4);
      CHECK(row[2] == Catch::Approx(row[1]).margin(1e-10));  // F_numeric_paper vs F_closed
      CHECK(row[3] >= 0.0);
      CHECK(row[3] <= 1.0 + 1e-12);  // normalized stays physical
    }
    // Rate 0 head row is exact unity for every kind.
    CHECK(parsed.rows[0][1] == 1.0);
  }
}

TEST_CASE("sweep output is deterministic") {
  const auto spec = qrsp::preset_sweep("fig4d");
  CHECK(sweep_to_string(spec) == sweep_to_string(spec));
}

TEST_CASE("sweeping alpha2 covers degenerate corners without error") {
  qrsp::SweepSpec spec;
  spec.kind = qrsp::NoiseKind::AmplitudeDamping;
  spec.axes = {{"alpha2", 0.0, 1.0, 3}};
  spec.fixed = {{"gamma2", 0.3}, {"rate", 0.2}};
  const auto parsed = parse_csv(sweep_to_string(spec));
  REQUIRE(parsed.rows.size() == 3);
  for (const auto& row : parsed.rows) {
    CHECK(row[2] == Catch::Approx(row[1]).margin(1e-10));
  }
}
