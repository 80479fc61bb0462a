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

#include "rasec/ao_solver.hpp"
#include "rasec/channel.hpp"
#include "rasec/rate.hpp"

namespace rasec {

// Constant coefficient matrices of the orientation objective
// L = Tr(H Wx H^H C) + Tr(He Wx He^H Cx) + Tr(He We We^H He^H Ce)
//   - 2 Re Tr(D H^H) - 2 Re Tr(De He^H).
struct OrientObjective {
    arma::cx_mat Wx;    // W W^H + We We^H (N x N)
    arma::cx_mat WeWe;  // We We^H (N x N)
    arma::cx_mat C;     // U Omega U^H (M x M)
    arma::cx_mat Cx;    // sigma_e^{-2} Omega_x (Q x Q)
    arma::cx_mat Ce;    // Ue Omega_e Ue^H (Q x Q)
    arma::cx_mat D;     // U Omega W^H (M x N)
    arma::cx_mat De;    // Ue Omega_e We^H (Q x N)
};

OrientObjective make_orient_objective(const AuxState& aux, const BeamformState& bf,
                                      double noise_eve_w);

// Orientation loss at the given channels. Minimizing L is equivalent to
// maximizing F at fixed auxiliaries and beamformers.
double orient_loss(const OrientObjective& obj, const arma::cx_mat& h, const arma::cx_mat& he);

// Euclidean gradients of L with respect to one local boresight.
Vec3 orient_grad_tx(const OrientObjective& obj, const ChannelState& state, int n);
Vec3 orient_grad_rx(const OrientObjective& obj, const ChannelState& state, int m);

struct FwStats {
    int iterations = 0;
    double initial_loss = 0.0;
    double final_loss = 0.0;
    bool converged = false;
};

// Riemannian Frank-Wolfe block sweep over transmit then receive antennas
// with Armijo backtracking; updates the channel state in place.
FwStats optimize_orientations(const OrientObjective& obj, ChannelState& state, const Cap& cap,
                              const SolverConfig& cfg, bool move_tx = true, bool move_rx = true);

}  // namespace rasec
