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

#include "rasec/linalg.hpp"

namespace rasec {

// Precoder W (N x d) and artificial-noise factor We (N x N), so the AN
// covariance is Rz = We We^H.
struct BeamformState {
    arma::cx_mat W;
    arma::cx_mat We;

    double power() const;
    bool power_feasible(double p_max, double tol = 1e-9) const;
};

// Closed-form block-ascent auxiliaries of the MMSE reformulation.
struct AuxState {
    arma::cx_mat U;        // M x d receive filter
    arma::cx_mat Omega;    // d x d weight, Hermitian PD
    arma::cx_mat Ue;       // Q x N eavesdropper AN filter
    arma::cx_mat Omega_e;  // N x N weight
    arma::cx_mat Omega_x;  // Q x Q weight
};

// Achievable rate of the legitimate link in bits/s/Hz,
// log2 det(I + H W W^H H^H Sigma0^{-1}) with Sigma0 = H We We^H H^H + sigma0^2 I.
double rate_legit(const arma::cx_mat& h, const BeamformState& bf, double noise_w);

// Wiretap rate log2 det(I + He W W^H He^H Sigma_e^{-1}),
// Sigma_e = He We We^H He^H + sigma_e^2 I.
double rate_eave(const arma::cx_mat& he, const BeamformState& bf, double noise_w);

// Secrecy rate [R - R_e]_+ in bits/s/Hz.
double secrecy_rate(const arma::cx_mat& h, const arma::cx_mat& he, const BeamformState& bf,
                    double noise_rx_w, double noise_eve_w);

// MSE matrix E of the data estimate (d x d).
arma::cx_mat mse_matrix(const arma::cx_mat& h, const BeamformState& bf, const arma::cx_mat& u,
                        double noise_w);

// MSE matrix E_e of the AN estimate at the eavesdropper (N x N).
arma::cx_mat mse_matrix_an(const arma::cx_mat& he, const arma::cx_mat& we, const arma::cx_mat& ue,
                           double noise_w);

// E_x = I + sigma_e^{-2} He (W W^H + We We^H) He^H (Q x Q).
arma::cx_mat mse_matrix_leak(const arma::cx_mat& he, const BeamformState& bf, double noise_w);

// First-order-optimal auxiliaries for fixed channels and beamformers.
// Throws on a rank-deficient MSE matrix (d larger than the usable rank).
AuxState update_auxiliaries(const arma::cx_mat& h, const arma::cx_mat& he, const BeamformState& bf,
                            double noise_rx_w, double noise_eve_w);

// Surrogate objective F = h1 + h2 + h3 in nats. At the optimal auxiliaries
// F / ln 2 equals the unclamped R - R_e exactly.
double surrogate_F(const AuxState& aux, const BeamformState& bf, const arma::cx_mat& h,
                   const arma::cx_mat& he, double noise_rx_w, double noise_eve_w);

}  // namespace rasec
