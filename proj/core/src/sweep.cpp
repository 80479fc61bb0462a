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

#include "rasec/sweep.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <thread>

#include "rasec/csv.hpp"

namespace rasec {

namespace {

int square_side(double value, const char* axis) {
    const double side = std::sqrt(value);
    const int rounded = static_cast<int>(std::lround(side));
    if (rounded < 1 || std::abs(rounded * rounded - value) > 1e-9) {
        throw std::invalid_argument(std::string(axis) +
                                    " sweep values must be perfect squares (square panels)");
    }
    return rounded;
}

int env_thread_default() {
    if (const char* env = std::getenv("RASEC_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace

SweepAxis sweep_axis_from_name(const std::string& name) {
    if (name == "N") return SweepAxis::kTxCount;
    if (name == "theta_max") return SweepAxis::kThetaMax;
    if (name == "p") return SweepAxis::kDirectivity;
    if (name == "P_max") return SweepAxis::kPmaxDbm;
    if (name == "K") return SweepAxis::kReceivers;
    if (name == "M") return SweepAxis::kRxCount;
    if (name == "Q") return SweepAxis::kEveCount;
    if (name == "d") return SweepAxis::kStreams;
    throw std::invalid_argument("unknown sweep axis: " + name);
}

std::string sweep_axis_name(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::kTxCount: return "N";
        case SweepAxis::kThetaMax: return "theta_max";
        case SweepAxis::kDirectivity: return "p";
        case SweepAxis::kPmaxDbm: return "P_max";
        case SweepAxis::kReceivers: return "K";
        case SweepAxis::kRxCount: return "M";
        case SweepAxis::kEveCount: return "Q";
        case SweepAxis::kStreams: return "d";
    }
    return "unknown";
}

void SweepSpec::validate() const {
    if (values.empty()) throw std::invalid_argument("SweepSpec: no axis values");
    if (seeds_per_point < 1) throw std::invalid_argument("SweepSpec: seeds_per_point must be >= 1");
    if (baselines.empty()) throw std::invalid_argument("SweepSpec: no baselines");
}

ScenarioConfig apply_axis(const ScenarioConfig& base, SweepAxis axis, double value) {
    ScenarioConfig cfg = base;
    switch (axis) {
        case SweepAxis::kTxCount: {
            const int side = square_side(value, "N");
            cfg.tx_x = side;
            cfg.tx_y = side;
            break;
        }
        case SweepAxis::kThetaMax:
            cfg.theta_max_rad = value;
            break;
        case SweepAxis::kDirectivity:
            cfg.directivity = value;
            break;
        case SweepAxis::kPmaxDbm:
            cfg.p_max_dbm = value;
            break;
        case SweepAxis::kReceivers:
            cfg.receivers = static_cast<int>(std::lround(value));
            break;
        case SweepAxis::kRxCount: {
            const int side = square_side(value, "M");
            cfg.rx_x = side;
            cfg.rx_y = side;
            break;
        }
        case SweepAxis::kEveCount: {
            const int side = square_side(value, "Q");
            cfg.eve_x = side;
            cfg.eve_y = side;
            break;
        }
        case SweepAxis::kStreams:
            cfg.streams = static_cast<int>(std::lround(value));
            break;
    }
    return cfg;
}

SweepOutput run_sweep(const SweepSpec& spec, const ScenarioConfig& base, int threads) {
    spec.validate();
    base.validate();
    if (threads <= 0) threads = env_thread_default();

    SweepOutput out;
    for (const double value : spec.values) {
        for (int s = 0; s < spec.seeds_per_point; ++s) {
            for (const Baseline b : spec.baselines) {
                SweepCell cell;
                cell.axis = spec.axis;
                cell.value = value;
                cell.seed = spec.seed0 + static_cast<std::uint64_t>(s);
                cell.baseline = b;
                out.cells.push_back(cell);
            }
        }
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= out.cells.size()) return;
            SweepCell& cell = out.cells[i];
            const auto started = std::chrono::steady_clock::now();
            try {
                ScenarioConfig cfg = apply_axis(base, cell.axis, cell.value);
                cfg.seed = cell.seed;
                const Scenario sc = make_scenario(cfg);
                cell.result = run_baseline(cell.baseline, sc);
                cell.ok = true;
            } catch (const std::exception& e) {
                cell.ok = false;
                cell.error = e.what();
            }
            cell.wall_ms = std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - started)
                               .count();
        }
    };

    const int pool = std::min<int>(threads, static_cast<int>(out.cells.size()));
    std::vector<std::thread> workers;
    workers.reserve(pool > 1 ? pool : 0);
    if (pool <= 1) {
        worker();
    } else {
        for (int i = 0; i < pool; ++i) workers.emplace_back(worker);
        for (auto& w : workers) w.join();
    }

    // Deterministic tables in cell-index order.
    std::string results = "axis,value,seed,baseline,status,secrecy_rate_bits,iterations,final_F_nats,message\n";
    std::string timing = "axis,value,seed,baseline,wall_ms\n";
    for (const auto& cell : out.cells) {
        const std::string prefix = sweep_axis_name(cell.axis) + "," + csv::format(cell.value) + "," +
                                   csv::format(cell.seed) + "," + baseline_name(cell.baseline);
        if (cell.ok) {
            results += prefix + ",ok," + csv::format(cell.result.secrecy_bits) + "," +
                       csv::format(cell.result.iterations) + "," +
                       csv::format(cell.result.surrogate_nats) + ",\n";
        } else {
            results += prefix + ",error,,,," + csv::escape(cell.error) + "\n";
        }
        timing += prefix + "," + csv::format(cell.wall_ms) + "\n";
    }
    out.results_csv = std::move(results);
    out.timing_csv = std::move(timing);

    // Aggregate mean / standard error per (value, baseline) over seeds.
    std::string agg = "axis,value,baseline,samples,mean_secrecy_rate_bits,stderr_secrecy_rate_bits\n";
    for (const double value : spec.values) {
        for (const Baseline b : spec.baselines) {
            std::vector<double> xs;
            for (const auto& cell : out.cells) {
                if (cell.ok && cell.value == value && cell.baseline == b) {
                    xs.push_back(cell.result.secrecy_bits);
                }
            }
            double mean = 0.0, se = 0.0;
            if (!xs.empty()) {
                for (const double x : xs) mean += x;
                mean /= static_cast<double>(xs.size());
                if (xs.size() > 1) {
                    double var = 0.0;
                    for (const double x : xs) var += (x - mean) * (x - mean);
                    var /= static_cast<double>(xs.size() - 1);
                    se = std::sqrt(var / static_cast<double>(xs.size()));
                }
            }
            agg += sweep_axis_name(spec.axis) + "," + csv::format(value) + "," + baseline_name(b) +
                   "," + csv::format(static_cast<int>(xs.size())) + "," + csv::format(mean) + "," +
                   csv::format(se) + "\n";
        }
    }
    out.aggregate_csv = std::move(agg);
    return out;
}

}  // namespace rasec
