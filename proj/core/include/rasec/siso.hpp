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

#include <utility>
#include <vector>

#include "rasec/channel.hpp"
#include "rasec/geometry.hpp"

namespace rasec {

// Single-antenna LoS wiretap geometry: one transmit RA, one receive RA, one
// isotropic eavesdropper antenna, no clusters, no artificial noise.
struct SisoGeometry {
    Vec3 t, r, e;        // node positions
    Mat33 R_t, R_r;      // panel postures
    double p = 1.0;      // directivity exponent
    double gamma_b = 0.0;  // P |a|^2 / sigma_0^2 before the receive gain
    double gamma_e = 0.0;  // P |a_e|^2 / sigma_e^2

    // Derived planar frame.
    Vec3 u_tr, u_rt, u_te;
    double psi = 0.0;    // separation angle between u_tr and u_te
    Vec3 v1, v2;         // orthonormal basis of span{u_tr, u_te} (invalid when collinear)
    bool collinear = false;
};

// Builds the geometry and SNR factors from positions and radio constants.
SisoGeometry make_siso_geometry(const Vec3& t, const Vec3& r, const Vec3& e, const Mat33& R_t,
                                const Mat33& R_r, double p_max_w, const RadioParams& params);

// Same, with the SNR factors supplied directly (used by tests).
SisoGeometry make_siso_geometry_gamma(const Vec3& t, const Vec3& r, const Vec3& e,
                                      const Mat33& R_t, const Mat33& R_r, double p,
                                      double gamma_b, double gamma_e);

// Cap-constrained receive alignment: f_r* and the resulting gain factor.
std::pair<Vec3, double> align_receive(const SisoGeometry& geom, const Cap& cap);

struct ThetaInterval {
    double lo = 0.0;
    double hi = 0.0;
};

// Sub-intervals of [0, pi/2] where the planar transmit parameterization
// satisfies the zenith constraint a cos(theta) - b sin(theta) >= cos(theta_max).
std::vector<ThetaInterval> feasible_interval(const SisoGeometry& geom, const Cap& cap);

struct SisoSolution {
    double theta_star = 0.0;
    Vec3 f_t, f_r;               // local boresights
    double secrecy_bits = 0.0;   // clamped
    bool transmit = true;        // w* = sqrt(P) when true, 0 otherwise
    double receive_gain = 0.0;   // f*_{r,t}
    double gain_legit = 0.0;     // f_{t,r} at the solution
    double gain_eve = 0.0;       // f_{t,e} at the solution
    double theta0 = 0.0;         // leakage-nulling angle max{0, pi/2 - psi}
    bool theta0_feasible = false;
    bool collinear = false;
    bool planar_fallback = false;  // empty feasible interval, projected optimum used
    std::vector<std::pair<double, double>> landscape;  // (theta, J) samples
};

// 1D planar search over the feasible interval with the analytic candidate
// points {0, theta0, interval endpoints} always evaluated.
SisoSolution solve_siso(const SisoGeometry& geom, const Cap& cap, int grid_size = 4096);

}  // namespace rasec
