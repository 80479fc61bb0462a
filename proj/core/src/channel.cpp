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

#include "rasec/channel.hpp"

#include <cmath>
#include <numbers>

namespace rasec {

namespace {

constexpr double kPi = std::numbers::pi;

cx_double phase_factor(double path_length, double wavelength) {
    const double arg = -2.0 * kPi * path_length / wavelength;
    return {std::cos(arg), std::sin(arg)};
}

}  // namespace

double RadioParams::beta0() const {
    const double x = wavelength / (4.0 * kPi);
    return x * x;
}

double RadioParams::boresight_gain() const { return 2.0 * (2.0 * directivity + 1.0); }

void RadioParams::validate() const {
    if (!(wavelength > 0.0)) throw std::invalid_argument("RadioParams: wavelength must be positive");
    if (!(directivity >= 0.0)) throw std::invalid_argument("RadioParams: directivity must be >= 0");
    if (!(noise_rx_w > 0.0) || !(noise_eve_w > 0.0)) {
        throw std::invalid_argument("RadioParams: noise powers must be positive");
    }
}

double gain_pattern(double epsilon_rad, const RadioParams& params) {
    if (epsilon_rad < 0.0 || epsilon_rad > kPi / 2.0) return 0.0;
    const double c = std::cos(epsilon_rad);
    return params.boresight_gain() * std::pow(c, 2.0 * params.directivity);
}

double directional_factor(double cosine, double p) {
    if (p == 0.0) return 1.0;
    if (cosine <= 0.0) return 0.0;
    return std::pow(cosine, p);
}

double directional_factor_deriv(double cosine, double p) {
    if (p == 0.0) return 0.0;
    if (cosine <= 0.0) return 0.0;
    return p * std::pow(cosine, p - 1.0);
}

ChannelModel::ChannelModel(const ArrayLayout& tx, const ArrayLayout& rx, const ArrayLayout& eve,
                           std::vector<Cluster> clusters, const RadioParams& params)
    : n_(tx.count()), m_(rx.count()), q_(eve.count()), params_(params),
      tx_rot_(tx.rotation), rx_rot_(rx.rotation), clusters_(std::move(clusters)) {
    params_.validate();
    tx_pos_ = element_positions(tx);
    rx_pos_ = element_positions(rx);
    eve_pos_ = element_positions(eve);

    const int d_count = static_cast<int>(clusters_.size());
    const double lambda = params_.wavelength;
    const double beta0 = params_.beta0();
    const double g0 = params_.boresight_gain();

    a_.set_size(m_, n_);
    ae_.set_size(q_, n_);
    dir_mn_.set_size(3, m_, n_);
    dir_eqn_.set_size(3, q_, n_);
    if (d_count > 0) {
        b_.set_size(m_, n_, d_count);
        be_.set_size(q_, n_, d_count);
        dir_nd_.set_size(3, n_, d_count);
        dir_md_.set_size(3, m_, d_count);
    }

    auto unit_to = [](const Vec3& from, const Vec3& to, double& dist) {
        const Vec3 diff = to - from;
        dist = arma::norm(diff);
        if (!(dist > 0.0)) throw std::invalid_argument("ChannelModel: degenerate geometry");
        return Vec3(diff / dist);
    };

    arma::mat r_nd(n_, std::max(d_count, 1), arma::fill::zeros);
    arma::mat r_md(m_, std::max(d_count, 1), arma::fill::zeros);
    for (int d = 0; d < d_count; ++d) {
        for (int n = 0; n < n_; ++n) {
            double dist = 0.0;
            dir_nd_.slice(d).col(n) = unit_to(tx_pos_[n], clusters_[d].position, dist);
            r_nd(n, d) = dist;
        }
        for (int m = 0; m < m_; ++m) {
            double dist = 0.0;
            dir_md_.slice(d).col(m) = unit_to(rx_pos_[m], clusters_[d].position, dist);
            r_md(m, d) = dist;
        }
    }

    for (int n = 0; n < n_; ++n) {
        for (int m = 0; m < m_; ++m) {
            double dist = 0.0;
            dir_mn_.slice(n).col(m) = unit_to(tx_pos_[n], rx_pos_[m], dist);
            a_(m, n) = std::sqrt(beta0) * g0 / dist * phase_factor(dist, lambda);
            for (int d = 0; d < d_count; ++d) {
                const double hop = r_nd(n, d) + r_md(m, d);
                const cx_double rot = phase_factor(hop, lambda) *
                                      cx_double{std::cos(clusters_[d].phase), std::sin(clusters_[d].phase)};
                b_(m, n, d) = std::sqrt(clusters_[d].rcs / (4.0 * kPi)) * beta0 * g0 /
                              (r_nd(n, d) * r_md(m, d)) * rot;
            }
        }
        for (int q = 0; q < q_; ++q) {
            double dist = 0.0;
            dir_eqn_.slice(n).col(q) = unit_to(tx_pos_[n], eve_pos_[q], dist);
            ae_(q, n) = std::sqrt(beta0 * g0) / dist * phase_factor(dist, lambda);
            for (int d = 0; d < d_count; ++d) {
                double eve_hop = 0.0;
                unit_to(clusters_[d].position, eve_pos_[q], eve_hop);
                const double hop = r_nd(n, d) + eve_hop;
                const cx_double rot = phase_factor(hop, lambda) *
                                      cx_double{std::cos(clusters_[d].phase), std::sin(clusters_[d].phase)};
                be_(q, n, d) = std::sqrt(clusters_[d].rcs * beta0 * g0 / (4.0 * kPi)) /
                               (eve_hop * r_nd(n, d)) * rot;
            }
        }
    }
}

ChannelState ChannelModel::build(const arma::mat& ft, const arma::mat& fr) const {
    if (static_cast<int>(ft.n_cols) != n_ || ft.n_rows != 3 ||
        static_cast<int>(fr.n_cols) != m_ || fr.n_rows != 3) {
        throw std::invalid_argument("ChannelModel::build: orientation matrix shape mismatch");
    }
    ChannelState s;
    s.model_ = this;
    const int d_count = n_clusters();
    s.ft_ = ft;
    s.fr_ = fr;
    s.h_.zeros(m_, n_);
    s.he_.zeros(q_, n_);
    s.ft_los_.zeros(n_, m_);
    s.ft_clu_.zeros(n_, std::max(d_count, 1));
    s.ft_eve_.zeros(n_, q_);
    s.fr_los_.zeros(m_, n_);
    s.fr_clu_.zeros(m_, std::max(d_count, 1));

    for (int m = 0; m < m_; ++m) s.set_rx_orientation(m, Vec3(fr.col(m)));
    for (int n = 0; n < n_; ++n) s.set_tx_orientation(n, Vec3(ft.col(n)));
    return s;
}

arma::cx_vec ChannelState::tx_column(int n, const Vec3& ft_n, arma::cx_vec* eve_column) const {
    const ChannelModel& mdl = *model_;
    const double p = mdl.params_.directivity;
    const Vec3 ft_global = mdl.tx_rot_ * ft_n;
    const int d_count = mdl.n_clusters();

    arma::vec clu(static_cast<arma::uword>(std::max(d_count, 1)), arma::fill::zeros);
    for (int d = 0; d < d_count; ++d) {
        clu(d) = directional_factor(arma::dot(ft_global, mdl.dir_tx_cluster(n, d)), p);
    }

    arma::cx_vec col(mdl.m_);
    for (int m = 0; m < mdl.m_; ++m) {
        const double f_los = directional_factor(arma::dot(ft_global, mdl.dir_tx_rx(m, n)), p);
        cx_double v = mdl.a_(m, n) * f_los * fr_los_(m, n);
        for (int d = 0; d < d_count; ++d) {
            v += mdl.b_(m, n, d) * clu(d) * fr_clu_(m, d);
        }
        col(m) = v;
    }
    if (eve_column != nullptr) {
        eve_column->set_size(mdl.q_);
        for (int q = 0; q < mdl.q_; ++q) {
            const double f_eve = directional_factor(arma::dot(ft_global, mdl.dir_tx_eve(q, n)), p);
            cx_double v = mdl.ae_(q, n) * f_eve;
            for (int d = 0; d < d_count; ++d) {
                v += mdl.be_(q, n, d) * clu(d);
            }
            (*eve_column)(q) = v;
        }
    }
    return col;
}

arma::cx_vec ChannelState::rx_row(int m, const Vec3& fr_m) const {
    const ChannelModel& mdl = *model_;
    const double p = mdl.params_.directivity;
    const Vec3 fr_global = mdl.rx_rot_ * fr_m;
    const int d_count = mdl.n_clusters();

    arma::vec clu(static_cast<arma::uword>(std::max(d_count, 1)), arma::fill::zeros);
    for (int d = 0; d < d_count; ++d) {
        clu(d) = directional_factor(arma::dot(fr_global, mdl.dir_rx_cluster(m, d)), p);
    }

    arma::cx_vec row(mdl.n_);
    for (int n = 0; n < mdl.n_; ++n) {
        const double f_los = directional_factor(-arma::dot(fr_global, mdl.dir_tx_rx(m, n)), p);
        cx_double v = mdl.a_(m, n) * ft_los_(n, m) * f_los;
        for (int d = 0; d < d_count; ++d) {
            v += mdl.b_(m, n, d) * ft_clu_(n, d) * clu(d);
        }
        row(n) = v;
    }
    return row;
}

void ChannelState::set_tx_orientation(int n, const Vec3& ft_n) {
    const ChannelModel& mdl = *model_;
    const double p = mdl.params_.directivity;
    const Vec3 ft_global = mdl.tx_rot_ * ft_n;
    const int d_count = mdl.n_clusters();
    ft_.col(n) = ft_n;

    for (int m = 0; m < mdl.m_; ++m) {
        ft_los_(n, m) = directional_factor(arma::dot(ft_global, mdl.dir_tx_rx(m, n)), p);
    }
    for (int d = 0; d < d_count; ++d) {
        ft_clu_(n, d) = directional_factor(arma::dot(ft_global, mdl.dir_tx_cluster(n, d)), p);
    }
    for (int q = 0; q < mdl.q_; ++q) {
        ft_eve_(n, q) = directional_factor(arma::dot(ft_global, mdl.dir_tx_eve(q, n)), p);
    }

    for (int m = 0; m < mdl.m_; ++m) {
        cx_double v = mdl.a_(m, n) * ft_los_(n, m) * fr_los_(m, n);
        for (int d = 0; d < d_count; ++d) {
            v += mdl.b_(m, n, d) * ft_clu_(n, d) * fr_clu_(m, d);
        }
        h_(m, n) = v;
    }
    for (int q = 0; q < mdl.q_; ++q) {
        cx_double v = mdl.ae_(q, n) * ft_eve_(n, q);
        for (int d = 0; d < d_count; ++d) {
            v += mdl.be_(q, n, d) * ft_clu_(n, d);
        }
        he_(q, n) = v;
    }
}

void ChannelState::set_rx_orientation(int m, const Vec3& fr_m) {
    const ChannelModel& mdl = *model_;
    const double p = mdl.params_.directivity;
    const Vec3 fr_global = mdl.rx_rot_ * fr_m;
    const int d_count = mdl.n_clusters();
    fr_.col(m) = fr_m;

    for (int n = 0; n < mdl.n_; ++n) {
        fr_los_(m, n) = directional_factor(-arma::dot(fr_global, mdl.dir_tx_rx(m, n)), p);
    }
    for (int d = 0; d < d_count; ++d) {
        fr_clu_(m, d) = directional_factor(arma::dot(fr_global, mdl.dir_rx_cluster(m, d)), p);
    }

    for (int n = 0; n < mdl.n_; ++n) {
        cx_double v = mdl.a_(m, n) * ft_los_(n, m) * fr_los_(m, n);
        for (int d = 0; d < d_count; ++d) {
            v += mdl.b_(m, n, d) * ft_clu_(n, d) * fr_clu_(m, d);
        }
        h_(m, n) = v;
    }
}

CxVec3 ChannelState::dh_dft(int m, int n) const {
    const ChannelModel& mdl = *model_;
    const double p = mdl.params_.directivity;
    const Vec3 ft_global = mdl.tx_rot_ * Vec3(ft_.col(n));
    const int d_count = mdl.n_clusters();

    CxVec3 grad;
    grad.zeros();
    {
        const Vec3 d_mn = mdl.dir_tx_rx(m, n);
        const double slope = directional_factor_deriv(arma::dot(ft_global, d_mn), p);
        if (slope != 0.0) {
            const Vec3 chain = mdl.tx_rot_.t() * d_mn;
            const cx_double w = mdl.a_(m, n) * fr_los_(m, n) * slope;
            for (int i = 0; i < 3; ++i) grad(i) += w * chain(i);
        }
    }
    for (int d = 0; d < d_count; ++d) {
        const Vec3 d_nd = mdl.dir_tx_cluster(n, d);
        const double slope = directional_factor_deriv(arma::dot(ft_global, d_nd), p);
        if (slope == 0.0) continue;
        const Vec3 chain = mdl.tx_rot_.t() * d_nd;
        const cx_double w = mdl.b_(m, n, d) * fr_clu_(m, d) * slope;
        for (int i = 0; i < 3; ++i) grad(i) += w * chain(i);
    }
    return grad;
}

CxVec3 ChannelState::dhe_dft(int q, int n) const {
    const ChannelModel& mdl = *model_;
    const double p = mdl.params_.directivity;
    const Vec3 ft_global = mdl.tx_rot_ * Vec3(ft_.col(n));
    const int d_count = mdl.n_clusters();

    CxVec3 grad;
    grad.zeros();
    {
        const Vec3 d_eqn = mdl.dir_tx_eve(q, n);
        const double slope = directional_factor_deriv(arma::dot(ft_global, d_eqn), p);
        if (slope != 0.0) {
            const Vec3 chain = mdl.tx_rot_.t() * d_eqn;
            const cx_double w = mdl.ae_(q, n) * slope;
            for (int i = 0; i < 3; ++i) grad(i) += w * chain(i);
        }
    }
    for (int d = 0; d < d_count; ++d) {
        const Vec3 d_nd = mdl.dir_tx_cluster(n, d);
        const double slope = directional_factor_deriv(arma::dot(ft_global, d_nd), p);
        if (slope == 0.0) continue;
        const Vec3 chain = mdl.tx_rot_.t() * d_nd;
        const cx_double w = mdl.be_(q, n, d) * slope;
        for (int i = 0; i < 3; ++i) grad(i) += w * chain(i);
    }
    return grad;
}

CxVec3 ChannelState::dh_dfr(int m, int n) const {
    const ChannelModel& mdl = *model_;
    const double p = mdl.params_.directivity;
    const Vec3 fr_global = mdl.rx_rot_ * Vec3(fr_.col(m));
    const int d_count = mdl.n_clusters();

    CxVec3 grad;
    grad.zeros();
    {
        // Receive LoS factor uses the reversed direction r_m -> t_n.
        const Vec3 u = -mdl.dir_tx_rx(m, n);
        const double slope = directional_factor_deriv(arma::dot(fr_global, u), p);
        if (slope != 0.0) {
            const Vec3 chain = mdl.rx_rot_.t() * u;
            const cx_double w = mdl.a_(m, n) * ft_los_(n, m) * slope;
            for (int i = 0; i < 3; ++i) grad(i) += w * chain(i);
        }
    }
    for (int d = 0; d < d_count; ++d) {
        const Vec3 d_md = mdl.dir_rx_cluster(m, d);
        const double slope = directional_factor_deriv(arma::dot(fr_global, d_md), p);
        if (slope == 0.0) continue;
        const Vec3 chain = mdl.rx_rot_.t() * d_md;
        const cx_double w = mdl.b_(m, n, d) * ft_clu_(n, d) * slope;
        for (int i = 0; i < 3; ++i) grad(i) += w * chain(i);
    }
    return grad;
}

}  // namespace rasec
