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

#include <optional>
#include <string>
#include <vector>

#include "rasec/ao_solver.hpp"
#include "rasec/channel.hpp"
#include "rasec/geometry.hpp"

namespace rasec {

inline double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watt_to_dbm(double watt) { return 10.0 * std::log10(watt) + 30.0; }

// Receiver / eavesdropper panel posture rule. The transmitter panel always
// sits in the global x-y plane (identity posture); a node panel either does
// the same or is tilted so its cap axis points back at the transmitter.
enum class Posture { kIdentity, kFaceTransmitter };

// Full experiment description. Every run is a pure function of one of these.
struct ScenarioConfig {
    double wavelength_m = 0.0857;            // 3.5 GHz carrier
    double spacing_wavelengths = 0.5;        // Delta = lambda / 2
    int tx_x = 5, tx_y = 5;                  // N = 25
    int rx_x = 2, rx_y = 2;                  // M = 4
    int eve_x = 2, eve_y = 2;                // Q = 4
    int streams = 2;                         // d
    int receivers = 1;                       // K
    double theta_max_rad = 1.0471975511965976;  // pi / 3
    double directivity = 1.0;                // p
    double p_max_dbm = 20.0;
    double noise_rx_dbm = -80.0;             // sigma_0^2 = sigma_k^2
    double noise_eve_dbm = -80.0;            // sigma_e^2
    double dist_min_m = 20.0;
    double dist_max_m = 40.0;
    double placement_zenith_rad = 1.0471975511965976;  // node cone half-angle
    int cluster_count = 3;
    Vec3 cluster_box_min{-20.0, -20.0, 5.0};
    Vec3 cluster_box_max{20.0, 20.0, 25.0};
    double cluster_rcs_m2 = 1.0;
    Posture node_posture = Posture::kFaceTransmitter;
    std::uint64_t seed = 1;
    SolverConfig solver;

    int n_tx() const { return tx_x * tx_y; }
    int n_rx() const { return rx_x * rx_y; }
    int n_eve() const { return eve_x * eve_y; }
    double spacing_m() const { return spacing_wavelengths * wavelength_m; }
    double p_max_w() const { return dbm_to_watt(p_max_dbm); }
    RadioParams radio() const;
    void validate() const;
};

// Materialized scenario: node placement, cluster realization, initial
// orientations and one propagation cache per legitimate receiver.
struct Scenario {
    ScenarioConfig cfg;
    Cap cap;
    ArrayLayout tx_panel;
    std::vector<ArrayLayout> rx_panels;  // one per receiver
    ArrayLayout eve_panel;
    std::vector<Cluster> clusters;
    arma::mat init_tx;                   // 3 x N cap-uniform initial boresights
    std::vector<arma::mat> init_rx;      // per receiver, 3 x M
    std::vector<ChannelModel> links;     // per receiver (shared tx / eve geometry)

    int n_tx() const { return cfg.n_tx(); }
    int n_rx() const { return cfg.n_rx(); }
    int n_eve() const { return cfg.n_eve(); }
    int receivers() const { return cfg.receivers; }
    double p_max_w() const { return cfg.p_max_w(); }
    double noise_rx_w() const { return dbm_to_watt(cfg.noise_rx_dbm); }
    double noise_eve_w() const { return dbm_to_watt(cfg.noise_eve_dbm); }

    // Identical geometry with a different pattern exponent (isotropic
    // baseline rebuilds the amplitudes, G0 depends on p).
    Scenario with_directivity(double p) const;
};

// Deterministic scenario synthesis: same config (including seed) reproduces
// the same scenario bit for bit. Throws after repeated placement collisions.
Scenario make_scenario(const ScenarioConfig& cfg);

}  // namespace rasec
