// SPDX-License-Identifier: Apache-2.0
//
// rasec: secrecy-rate optimization for rotatable-antenna MIMO wiretap channels
// Copyright (C) 2026 the rasec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <string>
#include <vector>

#include "rasec/baselines.hpp"
#include "rasec/scenario.hpp"

namespace rasec {

// One experiment axis. Values are applied onto a base config per cell.
enum class SweepAxis { kTxCount, kThetaMax, kDirectivity, kPmaxDbm, kReceivers, kRxCount, kEveCount, kStreams };

SweepAxis sweep_axis_from_name(const std::string& name);
std::string sweep_axis_name(SweepAxis axis);

struct SweepSpec {
    SweepAxis axis = SweepAxis::kTxCount;
    std::vector<double> values;
    int seeds_per_point = 20;
    std::uint64_t seed0 = 1;  // first seed; cells use seed0 .. seed0 + seeds - 1
    std::vector<Baseline> baselines{Baseline::kProposed};

    void validate() const;
};

// Applies one axis value onto a config copy. Array-count axes require a
// perfect square value (panels stay square).
ScenarioConfig apply_axis(const ScenarioConfig& base, SweepAxis axis, double value);

struct SweepCell {
    SweepAxis axis;
    double value = 0.0;
    std::uint64_t seed = 0;
    Baseline baseline = Baseline::kProposed;
    bool ok = false;
    BaselineResult result;
    std::string error;
    double wall_ms = 0.0;
};

struct SweepOutput {
    std::vector<SweepCell> cells;
    std::string results_csv;    // deterministic per-cell table
    std::string aggregate_csv;  // per-point means and standard errors
    std::string timing_csv;     // wall-clock per cell (not deterministic)
};

// Runs every (value, seed, baseline) cell on a worker pool. Cell errors are
// recorded as flagged rows; the sweep continues. Output row order is fixed
// by cell index, so the results and aggregate tables are byte-stable for a
// given (config, spec).
SweepOutput run_sweep(const SweepSpec& spec, const ScenarioConfig& base, int threads = 0);

}  // namespace rasec
