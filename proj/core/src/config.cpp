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

#include "rasec/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rasec {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void reject_unknown(const json& j, std::initializer_list<const char*> known,
                    const std::string& where) {
    for (const auto& [key, value] : j.items()) {
        bool found = false;
        for (const char* k : known) {
            if (key == k) {
                found = true;
                break;
            }
        }
        if (!found) throw std::invalid_argument("unknown key '" + key + "' in " + where);
    }
}

template <typename T>
void maybe(const json& j, const char* key, T& out) {
    if (j.contains(key)) out = j.at(key).get<T>();
}

void maybe_vec3(const json& j, const char* key, Vec3& out) {
    if (!j.contains(key)) return;
    const auto arr = j.at(key).get<std::vector<double>>();
    if (arr.size() != 3) throw std::invalid_argument(std::string(key) + " must have 3 entries");
    out = Vec3{arr[0], arr[1], arr[2]};
}

SolverConfig parse_solver(const json& j) {
    SolverConfig s;
    reject_unknown(j,
                   {"outer_tol", "max_outer", "bisect_tol", "max_bisect", "armijo_c", "backtrack",
                    "rho_min", "fw_max_iters", "fw_tol", "init_signal_fraction", "epi_max_iters",
                    "epi_tol", "epi_step0", "dual_step0"},
                   "solver");
    maybe(j, "outer_tol", s.outer_tol);
    maybe(j, "max_outer", s.max_outer);
    maybe(j, "bisect_tol", s.bisect_tol);
    maybe(j, "max_bisect", s.max_bisect);
    maybe(j, "armijo_c", s.armijo_c);
    maybe(j, "backtrack", s.backtrack);
    maybe(j, "rho_min", s.rho_min);
    maybe(j, "fw_max_iters", s.fw_max_iters);
    maybe(j, "fw_tol", s.fw_tol);
    maybe(j, "init_signal_fraction", s.init_signal_fraction);
    maybe(j, "epi_max_iters", s.epi_max_iters);
    maybe(j, "epi_tol", s.epi_tol);
    maybe(j, "epi_step0", s.epi_step0);
    maybe(j, "dual_step0", s.dual_step0);
    return s;
}

}  // namespace

ScenarioConfig parse_scenario_config(const std::string& json_text) {
    const json j = json::parse(json_text);
    reject_unknown(j,
                   {"frequency_hz", "wavelength_m", "spacing_wavelengths", "tx", "rx", "eve",
                    "streams", "receivers", "theta_max_rad", "directivity_p", "p_max_dbm",
                    "noise_rx_dbm", "noise_eve_dbm", "noise_dbm", "dist_min_m", "dist_max_m",
                    "placement_zenith_rad", "cluster_count", "cluster_box_min", "cluster_box_max",
                    "cluster_rcs_m2", "node_posture", "seed", "solver"},
                   "scenario config");

    ScenarioConfig cfg;
    if (j.contains("frequency_hz")) {
        cfg.wavelength_m = 299792458.0 / j.at("frequency_hz").get<double>();
    }
    maybe(j, "wavelength_m", cfg.wavelength_m);
    maybe(j, "spacing_wavelengths", cfg.spacing_wavelengths);

    auto panel = [&](const char* key, int& x, int& y) {
        if (!j.contains(key)) return;
        const json& p = j.at(key);
        reject_unknown(p, {"nx", "ny"}, key);
        maybe(p, "nx", x);
        maybe(p, "ny", y);
    };
    panel("tx", cfg.tx_x, cfg.tx_y);
    panel("rx", cfg.rx_x, cfg.rx_y);
    panel("eve", cfg.eve_x, cfg.eve_y);

    maybe(j, "streams", cfg.streams);
    maybe(j, "receivers", cfg.receivers);
    maybe(j, "theta_max_rad", cfg.theta_max_rad);
    maybe(j, "directivity_p", cfg.directivity);
    maybe(j, "p_max_dbm", cfg.p_max_dbm);
    if (j.contains("noise_dbm")) {
        cfg.noise_rx_dbm = j.at("noise_dbm").get<double>();
        cfg.noise_eve_dbm = cfg.noise_rx_dbm;
    }
    maybe(j, "noise_rx_dbm", cfg.noise_rx_dbm);
    maybe(j, "noise_eve_dbm", cfg.noise_eve_dbm);
    maybe(j, "dist_min_m", cfg.dist_min_m);
    maybe(j, "dist_max_m", cfg.dist_max_m);
    maybe(j, "placement_zenith_rad", cfg.placement_zenith_rad);
    maybe(j, "cluster_count", cfg.cluster_count);
    maybe_vec3(j, "cluster_box_min", cfg.cluster_box_min);
    maybe_vec3(j, "cluster_box_max", cfg.cluster_box_max);
    maybe(j, "cluster_rcs_m2", cfg.cluster_rcs_m2);
    if (j.contains("node_posture")) {
        const std::string posture = j.at("node_posture").get<std::string>();
        if (posture == "identity") {
            cfg.node_posture = Posture::kIdentity;
        } else if (posture == "face_tx") {
            cfg.node_posture = Posture::kFaceTransmitter;
        } else {
            throw std::invalid_argument("node_posture must be 'identity' or 'face_tx'");
        }
    }
    maybe(j, "seed", cfg.seed);
    if (j.contains("solver")) cfg.solver = parse_solver(j.at("solver"));

    cfg.validate();
    return cfg;
}

ScenarioConfig load_scenario_config(const std::string& path) {
    return parse_scenario_config(slurp(path));
}

std::string scenario_config_to_json(const ScenarioConfig& cfg) {
    json j;
    j["wavelength_m"] = cfg.wavelength_m;
    j["spacing_wavelengths"] = cfg.spacing_wavelengths;
    j["tx"] = {{"nx", cfg.tx_x}, {"ny", cfg.tx_y}};
    j["rx"] = {{"nx", cfg.rx_x}, {"ny", cfg.rx_y}};
    j["eve"] = {{"nx", cfg.eve_x}, {"ny", cfg.eve_y}};
    j["streams"] = cfg.streams;
    j["receivers"] = cfg.receivers;
    j["theta_max_rad"] = cfg.theta_max_rad;
    j["directivity_p"] = cfg.directivity;
    j["p_max_dbm"] = cfg.p_max_dbm;
    j["noise_rx_dbm"] = cfg.noise_rx_dbm;
    j["noise_eve_dbm"] = cfg.noise_eve_dbm;
    j["dist_min_m"] = cfg.dist_min_m;
    j["dist_max_m"] = cfg.dist_max_m;
    j["placement_zenith_rad"] = cfg.placement_zenith_rad;
    j["cluster_count"] = cfg.cluster_count;
    j["cluster_box_min"] = {cfg.cluster_box_min(0), cfg.cluster_box_min(1), cfg.cluster_box_min(2)};
    j["cluster_box_max"] = {cfg.cluster_box_max(0), cfg.cluster_box_max(1), cfg.cluster_box_max(2)};
    j["cluster_rcs_m2"] = cfg.cluster_rcs_m2;
    j["node_posture"] = cfg.node_posture == Posture::kIdentity ? "identity" : "face_tx";
    j["seed"] = cfg.seed;
    j["solver"] = {{"outer_tol", cfg.solver.outer_tol},
                   {"max_outer", cfg.solver.max_outer},
                   {"bisect_tol", cfg.solver.bisect_tol},
                   {"max_bisect", cfg.solver.max_bisect},
                   {"armijo_c", cfg.solver.armijo_c},
                   {"backtrack", cfg.solver.backtrack},
                   {"rho_min", cfg.solver.rho_min},
                   {"fw_max_iters", cfg.solver.fw_max_iters},
                   {"fw_tol", cfg.solver.fw_tol},
                   {"init_signal_fraction", cfg.solver.init_signal_fraction},
                   {"epi_max_iters", cfg.solver.epi_max_iters},
                   {"epi_tol", cfg.solver.epi_tol},
                   {"epi_step0", cfg.solver.epi_step0},
                   {"dual_step0", cfg.solver.dual_step0}};
    return j.dump(2) + "\n";
}

SweepSpec parse_sweep_spec(const std::string& json_text) {
    const json j = json::parse(json_text);
    reject_unknown(j, {"axis", "values", "seeds_per_point", "seed0", "baselines"}, "sweep spec");
    SweepSpec spec;
    spec.axis = sweep_axis_from_name(j.at("axis").get<std::string>());
    spec.values = j.at("values").get<std::vector<double>>();
    maybe(j, "seeds_per_point", spec.seeds_per_point);
    maybe(j, "seed0", spec.seed0);
    if (j.contains("baselines")) {
        spec.baselines.clear();
        for (const auto& name : j.at("baselines").get<std::vector<std::string>>()) {
            spec.baselines.push_back(baseline_from_name(name));
        }
    }
    spec.validate();
    return spec;
}

SweepSpec load_sweep_spec(const std::string& path) { return parse_sweep_spec(slurp(path)); }

}  // namespace rasec
