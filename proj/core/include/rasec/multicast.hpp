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

#include <vector>

#include "rasec/ao_solver.hpp"
#include "rasec/scenario.hpp"

namespace rasec {

// Per-receiver auxiliaries plus the shared eavesdropper blocks.
struct MulticastAux {
    std::vector<arma::cx_mat> U;      // K x (M x d)
    std::vector<arma::cx_mat> Omega;  // K x (d x d)
    arma::cx_mat Ue;                  // Q x N
    arma::cx_mat Omega_e;             // N x N
    arma::cx_mat Omega_x;             // Q x Q
};

// Worst-receiver secrecy rate min_k [R_k - R_e]_+ in bits/s/Hz.
double multicast_sr(const std::vector<arma::cx_mat>& hk, const arma::cx_mat& he,
                    const BeamformState& bf, double noise_rx_w, double noise_eve_w);

MulticastAux update_auxiliaries_multicast(const std::vector<arma::cx_mat>& hk,
                                          const arma::cx_mat& he, const BeamformState& bf,
                                          double noise_rx_w, double noise_eve_w);

// Lower-bound surrogate F_bar = min_k h_{1,k} + h_2 + h_3 in nats. For any
// valid auxiliaries F_bar / ln 2 <= min_k R_k - R_e (max-min <= min-max).
double lower_bound_F(const MulticastAux& aux, const BeamformState& bf,
                     const std::vector<arma::cx_mat>& hk, const arma::cx_mat& he,
                     double noise_rx_w, double noise_eve_w);

// Per-receiver epigraph constraint value g_k; theta* = max_k g_k and
// h_{1,k} = -g_k.
double epigraph_constraint(const MulticastAux& aux, int k, const BeamformState& bf,
                           const arma::cx_mat& hk, double noise_rx_w);

struct EpigraphResult {
    BeamformState bf;
    double vartheta = 0.0;     // max_k g_k at the solution
    double objective = 0.0;    // epigraph objective value
    int iterations = 0;
    double kkt_residual = 0.0; // relative projected active-set subgradient norm
};

// Min-max beamforming via projected subgradient on (W, We) inside the power
// ball, warm-started from an exact uniformly-weighted solve and periodically
// re-anchored by exact solves at the running active-set frequencies.
EpigraphResult update_beamformers_multicast(const MulticastAux& aux,
                                            const std::vector<arma::cx_mat>& hk,
                                            const arma::cx_mat& he, double p_max,
                                            double noise_rx_w, double noise_eve_w,
                                            const SolverConfig& cfg,
                                            const BeamformState* warm = nullptr);

struct MulticastOrientResult {
    double vartheta = 0.0;
    std::vector<double> g;  // constraint values at the new orientations
    int fw_iterations = 0;
};

// Lagrangian orientation update: Frank-Wolfe sweeps on the weighted loss,
// then one dual step mu_k <- [mu_k + beta (g_k - vartheta)]_+ with
// vartheta = max_k g_k. Channel states are updated in place.
MulticastOrientResult update_orientations_multicast(const MulticastAux& aux,
                                                    const BeamformState& bf,
                                                    std::vector<ChannelState>& states,
                                                    std::vector<double>& mu, const Cap& cap,
                                                    double beta_step, double noise_rx_w,
                                                    double noise_eve_w, const SolverConfig& cfg,
                                                    bool move_tx = true, bool move_rx = true);

struct MulticastTraceRecord {
    int iteration = 0;
    double lower_bound_nats = 0.0;
    double secrecy_bits = 0.0;
    double vartheta = 0.0;
};

using MulticastTraceSink = std::function<void(const MulticastTraceRecord&)>;

struct MulticastAoResult {
    BeamformState bf;
    arma::mat ft;
    std::vector<arma::mat> fr;
    std::vector<double> mu;
    std::vector<MulticastTraceRecord> trace;
    bool converged = false;
    int iterations = 0;
    double lower_bound_nats = 0.0;
    double secrecy_bits = 0.0;
};

// Full multicast alternating optimization over auxiliaries, epigraph
// beamforming and Lagrangian orientation updates. Initial orientations
// default to the scenario draw; fixed-orientation schemes pass overrides
// plus a restricted mode.
MulticastAoResult run_ao_multicast(const Scenario& sc, const SolverConfig& cfg,
                                   const MulticastTraceSink& sink = {},
                                   OrientMode mode = OrientMode::kJoint,
                                   const arma::mat* ft_init = nullptr,
                                   const std::vector<arma::mat>* fr_init = nullptr);

}  // namespace rasec
