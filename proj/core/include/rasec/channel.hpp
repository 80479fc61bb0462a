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

#include "rasec/geometry.hpp"
#include "rasec/linalg.hpp"

namespace rasec {

// Carrier and antenna-pattern constants shared by every link.
struct RadioParams {
    double wavelength = 0.0857;  // meters
    double directivity = 1.0;    // pattern exponent p >= 0
    double noise_rx_w = 1e-11;   // sigma_0^2
    double noise_eve_w = 1e-11;  // sigma_e^2

    double beta0() const;          // (lambda / 4 pi)^2
    double boresight_gain() const; // G_0 = 2 (2 p + 1)
    void validate() const;
};

// One scattering cluster of the bi-static NLoS model.
struct Cluster {
    Vec3 position;
    double rcs = 1.0;    // radar cross section sigma_d, m^2
    double phase = 0.0;  // chi_d in [0, 2 pi), drawn once per realization
};

// Antenna gain pattern G(epsilon): G0 cos^{2p}(epsilon) on the front
// hemisphere, zero behind.
double gain_pattern(double epsilon_rad, const RadioParams& params);

// Hinged directional amplitude factor [x]_+^p. p = 0 yields 1 for every x,
// which makes the element orientation-blind (the isotropic limit).
double directional_factor(double cosine, double p);

// d/dx [x]_+^p with the subgradient fixed to zero at the hinge.
double directional_factor_deriv(double cosine, double p);

// Legitimate and eavesdropper channel matrices for one orientation set.
struct ChannelPair {
    arma::cx_mat H;   // M x N
    arma::cx_mat He;  // Q x N
};

class ChannelState;

// Immutable per-scenario propagation cache: element positions, link
// distances, unit directions and complex path amplitudes. All entries are
// pure functions of positions, never of orientations, so one model serves
// every orientation update of an optimization run.
class ChannelModel {
  public:
    ChannelModel(const ArrayLayout& tx, const ArrayLayout& rx, const ArrayLayout& eve,
                 std::vector<Cluster> clusters, const RadioParams& params);

    int n_tx() const { return n_; }
    int n_rx() const { return m_; }
    int n_eve() const { return q_; }
    int n_clusters() const { return static_cast<int>(clusters_.size()); }
    const RadioParams& radio() const { return params_; }
    const Mat33& tx_rotation() const { return tx_rot_; }
    const Mat33& rx_rotation() const { return rx_rot_; }
    const std::vector<Vec3>& tx_positions() const { return tx_pos_; }
    const std::vector<Vec3>& rx_positions() const { return rx_pos_; }
    const std::vector<Vec3>& eve_positions() const { return eve_pos_; }

    // Synthesizes both channel matrices for local boresights ft (3 x N) and
    // fr (3 x M).
    ChannelState build(const arma::mat& ft, const arma::mat& fr) const;

    // Orientation-independent amplitudes, exposed for oracle tests.
    const arma::cx_mat& amp_los() const { return a_; }            // M x N
    const arma::cx_mat& amp_eve_los() const { return ae_; }       // Q x N
    const arma::cx_cube& amp_nlos() const { return b_; }          // M x N x D
    const arma::cx_cube& amp_eve_nlos() const { return be_; }     // Q x N x D

    // Unit direction from transmit element n toward receive element m,
    // cluster d, or eavesdropper element q (global frame).
    Vec3 dir_tx_rx(int m, int n) const { return Vec3(dir_mn_.slice(n).col(m)); }
    Vec3 dir_tx_cluster(int n, int d) const { return Vec3(dir_nd_.slice(d).col(n)); }
    Vec3 dir_rx_cluster(int m, int d) const { return Vec3(dir_md_.slice(d).col(m)); }
    Vec3 dir_tx_eve(int q, int n) const { return Vec3(dir_eqn_.slice(n).col(q)); }

  private:
    friend class ChannelState;

    int n_ = 0, m_ = 0, q_ = 0;
    RadioParams params_;
    Mat33 tx_rot_, rx_rot_;
    std::vector<Vec3> tx_pos_, rx_pos_, eve_pos_;
    std::vector<Cluster> clusters_;

    arma::cx_mat a_;        // M x N LoS amplitudes a_{m,n}
    arma::cx_mat ae_;       // Q x N eavesdropper LoS amplitudes
    arma::cx_cube b_;       // M x N x D bi-static amplitudes
    arma::cx_cube be_;      // Q x N x D eavesdropper NLoS amplitudes
    arma::cube dir_mn_;     // 3 x M x N unit directions t_n -> r_m
    arma::cube dir_nd_;     // 3 x N x D unit directions t_n -> s_d
    arma::cube dir_md_;     // 3 x M x D unit directions r_m -> s_d
    arma::cube dir_eqn_;    // 3 x Q x N unit directions t_n -> e_q
};

// Mutable channel realization for one orientation set. Holds H and He plus
// the per-link directional factors, and refreshes only the affected column
// (transmit) or row (receive) when a single boresight changes.
class ChannelState {
  public:
    const arma::cx_mat& H() const { return h_; }
    const arma::cx_mat& He() const { return he_; }
    const arma::mat& tx_orientations() const { return ft_; }
    const arma::mat& rx_orientations() const { return fr_; }
    const ChannelModel& model() const { return *model_; }
    ChannelPair pair() const { return {h_, he_}; }

    // Candidate column/row synthesis for line-search trials; does not touch
    // the stored state.
    arma::cx_vec tx_column(int n, const Vec3& ft_n, arma::cx_vec* eve_column) const;
    arma::cx_vec rx_row(int m, const Vec3& fr_m) const;

    void set_tx_orientation(int n, const Vec3& ft_n);
    void set_rx_orientation(int m, const Vec3& fr_m);

    // Appendix-style analytic channel derivatives at the current state.
    CxVec3 dh_dft(int m, int n) const;   // d h_{m,n} / d f_{t,n}
    CxVec3 dhe_dft(int q, int n) const;  // d h_{e,q,n} / d f_{t,n}
    CxVec3 dh_dfr(int m, int n) const;   // d h_{m,n} / d f_{r,m}

  private:
    friend class ChannelModel;

    const ChannelModel* model_ = nullptr;
    arma::cx_mat h_;    // M x N
    arma::cx_mat he_;   // Q x N
    arma::mat ft_;      // 3 x N local transmit boresights
    arma::mat fr_;      // 3 x M local receive boresights
    arma::mat ft_los_;  // N x M factors [ft~^T d_{m,n}]_+^p
    arma::mat ft_clu_;  // N x D factors toward clusters
    arma::mat ft_eve_;  // N x Q factors toward eavesdropper elements
    arma::mat fr_los_;  // M x N factors [fr~^T (-d_{m,n})]_+^p
    arma::mat fr_clu_;  // M x D factors toward clusters
};

}  // namespace rasec
