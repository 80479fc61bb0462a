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

#include "rasec/scenario.hpp"

#include <cmath>
#include <numbers>

#include "rasec/rng.hpp"

namespace rasec {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMinNodeSeparation = 1.0;  // meters
constexpr int kPlacementRetries = 100;

Vec3 draw_node_position(CounterRng& rng, const ScenarioConfig& cfg) {
    const double dist = rng.uniform(cfg.dist_min_m, cfg.dist_max_m);
    const double zen = rng.uniform(0.0, cfg.placement_zenith_rad);
    const double azi = rng.uniform(0.0, 2.0 * kPi);
    return Vec3{dist * std::sin(zen) * std::cos(azi), dist * std::sin(zen) * std::sin(azi),
                dist * std::cos(zen)};
}

Mat33 node_rotation(const ScenarioConfig& cfg, const Vec3& position) {
    if (cfg.node_posture == Posture::kIdentity) return Mat33(arma::fill::eye);
    const Vec3 back = arma::normalise(Vec3(-position));  // toward the transmitter at the origin
    return rotation_from_z_to(back);
}

arma::mat draw_orientations(CounterRng& rng, const Cap& cap, int count) {
    arma::mat out(3, count);
    for (int i = 0; i < count; ++i) {
        const double u1 = rng.next_unit();
        const double u2 = rng.next_unit();
        out.col(i) = cap_point_from_uniforms(cap, u1, u2);
    }
    return out;
}

}  // namespace

RadioParams ScenarioConfig::radio() const {
    RadioParams params;
    params.wavelength = wavelength_m;
    params.directivity = directivity;
    params.noise_rx_w = dbm_to_watt(noise_rx_dbm);
    params.noise_eve_w = dbm_to_watt(noise_eve_dbm);
    return params;
}

void ScenarioConfig::validate() const {
    radio().validate();
    if (tx_x < 1 || tx_y < 1 || rx_x < 1 || rx_y < 1 || eve_x < 1 || eve_y < 1) {
        throw std::invalid_argument("ScenarioConfig: array counts must be >= 1");
    }
    if (!(spacing_wavelengths > 0.0)) {
        throw std::invalid_argument("ScenarioConfig: spacing must be positive");
    }
    if (streams < 1 || streams > std::min(n_tx(), n_rx())) {
        throw std::invalid_argument("ScenarioConfig: streams must satisfy 1 <= d <= min(N, M)");
    }
    if (receivers < 1) throw std::invalid_argument("ScenarioConfig: receivers must be >= 1");
    if (!(theta_max_rad >= 0.0) || theta_max_rad > kPi / 2.0 + 1e-15) {
        throw std::invalid_argument("ScenarioConfig: theta_max must lie in [0, pi/2]");
    }
    if (!(dist_min_m > 0.0) || dist_max_m < dist_min_m) {
        throw std::invalid_argument("ScenarioConfig: invalid distance range");
    }
    if (cluster_count < 0) throw std::invalid_argument("ScenarioConfig: cluster count must be >= 0");
    for (int i = 0; i < 3; ++i) {
        if (cluster_box_max(i) < cluster_box_min(i)) {
            throw std::invalid_argument("ScenarioConfig: cluster box is inverted");
        }
    }
    if (!(cluster_rcs_m2 > 0.0)) {
        throw std::invalid_argument("ScenarioConfig: cluster RCS must be positive");
    }
    solver.validate();
}

Scenario make_scenario(const ScenarioConfig& cfg) {
    cfg.validate();

    Scenario sc;
    sc.cfg = cfg;
    sc.cap = Cap(cfg.theta_max_rad);

    const double delta = cfg.spacing_m();
    sc.tx_panel = ArrayLayout(cfg.tx_x, cfg.tx_y, delta, Vec3{0.0, 0.0, 0.0}, Mat33(arma::fill::eye));

    // Node placement: receivers in index order, then the eavesdropper.
    // Resample the whole set when any pair collides.
    CounterRng place_rng(cfg.seed, Stream::kNodePlacement);
    std::vector<Vec3> nodes;
    bool placed = false;
    for (int attempt = 0; attempt < kPlacementRetries && !placed; ++attempt) {
        nodes.clear();
        for (int k = 0; k < cfg.receivers + 1; ++k) {
            nodes.push_back(draw_node_position(place_rng, cfg));
        }
        placed = true;
        for (std::size_t i = 0; i < nodes.size() && placed; ++i) {
            if (arma::norm(nodes[i]) < kMinNodeSeparation) placed = false;
            for (std::size_t j = i + 1; j < nodes.size() && placed; ++j) {
                if (arma::norm(Vec3(nodes[i] - nodes[j])) < kMinNodeSeparation) placed = false;
            }
        }
    }
    if (!placed) throw std::runtime_error("make_scenario: node placement failed (overlapping nodes)");

    for (int k = 0; k < cfg.receivers; ++k) {
        sc.rx_panels.emplace_back(cfg.rx_x, cfg.rx_y, delta, nodes[k], node_rotation(cfg, nodes[k]));
    }
    const Vec3 eve_pos = nodes.back();
    sc.eve_panel = ArrayLayout(cfg.eve_x, cfg.eve_y, delta, eve_pos, node_rotation(cfg, eve_pos));

    CounterRng cluster_rng(cfg.seed, Stream::kClusterGeometry);
    CounterRng phase_rng(cfg.seed, Stream::kClusterPhase);
    for (int d = 0; d < cfg.cluster_count; ++d) {
        Cluster cl;
        for (int i = 0; i < 3; ++i) {
            cl.position(i) = cluster_rng.uniform(cfg.cluster_box_min(i), cfg.cluster_box_max(i));
        }
        cl.rcs = cfg.cluster_rcs_m2;
        cl.phase = phase_rng.uniform(0.0, 2.0 * kPi);
        sc.clusters.push_back(cl);
    }

    CounterRng orient_rng(cfg.seed, Stream::kOrientationInit);
    sc.init_tx = draw_orientations(orient_rng, sc.cap, cfg.n_tx());
    for (int k = 0; k < cfg.receivers; ++k) {
        sc.init_rx.push_back(draw_orientations(orient_rng, sc.cap, cfg.n_rx()));
    }

    const RadioParams radio = cfg.radio();
    for (int k = 0; k < cfg.receivers; ++k) {
        sc.links.emplace_back(sc.tx_panel, sc.rx_panels[k], sc.eve_panel, sc.clusters, radio);
    }
    return sc;
}

Scenario Scenario::with_directivity(double p) const {
    Scenario out = *this;
    out.cfg.directivity = p;
    const RadioParams radio = out.cfg.radio();
    out.links.clear();
    for (int k = 0; k < cfg.receivers; ++k) {
        out.links.emplace_back(out.tx_panel, out.rx_panels[k], out.eve_panel, out.clusters, radio);
    }
    return out;
}

}  // namespace rasec
