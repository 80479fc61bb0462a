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

#include <functional>
#include <vector>

#include "rasec/channel.hpp"
#include "rasec/rate.hpp"

namespace rasec {

// One quadratic block of the beamforming update: W(xi) = (A + xi I)^{-1} B.
struct QuadraticUpdate {
    arma::cx_mat A;  // N x N Hermitian PSD
    arma::cx_mat B;  // N x d (signal) or N x N (artificial noise)
};

struct SolverConfig {
    double outer_tol = 1e-4;   // relative F change stopping the AO loop
    int max_outer = 50;
    double bisect_tol = 1e-8;  // relative power mismatch
    int max_bisect = 200;
    double armijo_c = 1e-4;
    double backtrack = 0.5;    // step shrink factor beta
    double rho_min = 1e-6;
    int fw_max_iters = 60;     // I_max of the orientation loop
    double fw_tol = 1e-5;      // relative L change stopping the FW loop
    double init_signal_fraction = 0.9;  // share of P_max given to W at init

    // Multicast epigraph beamforming (projected subgradient).
    int epi_max_iters = 3000;
    double epi_tol = 1e-6;       // KKT residual target, relative scale
    double epi_step0 = 0.5;      // initial normalized step
    double dual_step0 = 0.1;     // outer-loop stepsize beta_0 for mu updates

    void validate() const;
};

// Orientation blocks a solver run is allowed to move.
enum class OrientMode { kJoint, kTransmitOnly, kFrozen };

// Total transmit power P(xi) of both blocks at multiplier xi (Appendix-A
// power curve). At xi = 0 the pseudo-inverse convention applies.
double power_curve(double xi, const QuadraticUpdate& sig, const QuadraticUpdate& an);

// Assembles the two quadratic blocks from the current auxiliaries.
std::pair<QuadraticUpdate, QuadraticUpdate> make_quadratic_updates(
    const AuxState& aux, const arma::cx_mat& h, const arma::cx_mat& he, double noise_eve_w);

struct BeamformUpdate {
    BeamformState bf;
    double xi = 0.0;
    double power = 0.0;
    int bisect_iterations = 0;
};

// Semi-closed-form W / We update: the unconstrained solution when the power
// constraint is slack, otherwise bisection on xi over (0, xi_ub].
BeamformUpdate update_beamformers(const AuxState& aux, const arma::cx_mat& h,
                                  const arma::cx_mat& he, double p_max, double noise_eve_w,
                                  const SolverConfig& cfg);

// Same update from prebuilt quadratic blocks (the multicast path reuses it).
BeamformUpdate solve_power_constrained(const QuadraticUpdate& sig, const QuadraticUpdate& an,
                                       double p_max, const SolverConfig& cfg);

// Right-singular-vector initialization: W carries alpha * P_max split evenly
// over d streams, We spreads the remainder over an identity scaling.
BeamformState initial_beamformers(const arma::cx_mat& h, double p_max, int streams, double alpha);

struct TraceRecord {
    int iteration = 0;
    double surrogate_nats = 0.0;  // F after the outer iteration
    double secrecy_bits = 0.0;    // clamped R_s at the same point
    double power = 0.0;
};

using TraceSink = std::function<void(const TraceRecord&)>;

struct AoResult {
    BeamformState bf;
    AuxState aux;  // auxiliaries the final beamformers were derived from
    arma::mat ft;  // 3 x N final local transmit boresights
    arma::mat fr;  // 3 x M final local receive boresights
    std::vector<TraceRecord> trace;
    bool converged = false;
    int iterations = 0;
    double surrogate_nats = 0.0;
    double secrecy_bits = 0.0;
};

// Alternating optimization: auxiliaries -> beamformers -> orientations until
// the relative F change drops below cfg.outer_tol. F is checked to be
// non-decreasing; a violation beyond 1e-8 throws.
AoResult run_ao(const ChannelModel& model, const Cap& cap, double p_max, int streams,
                const arma::mat& ft_init, const arma::mat& fr_init, const SolverConfig& cfg,
                OrientMode mode = OrientMode::kJoint, const TraceSink& sink = {});

}  // namespace rasec
