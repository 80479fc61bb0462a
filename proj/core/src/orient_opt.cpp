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

#include "rasec/orient_opt.hpp"

#include <cmath>

namespace rasec {

namespace {

// Gradient norms below this are treated as block-stationary.
constexpr double kGradFloor = 1e-14;

arma::cx_vec g_column_tx(const OrientObjective& obj, const arma::cx_mat& h, int n) {
    return obj.C * (h * obj.Wx.col(n)) - obj.D.col(n);
}

arma::cx_vec ge_column_tx(const OrientObjective& obj, const arma::cx_mat& he, int n) {
    return obj.Cx * (he * obj.Wx.col(n)) + obj.Ce * (he * obj.WeWe.col(n)) - obj.De.col(n);
}

arma::cx_vec g_row_rx(const OrientObjective& obj, const arma::cx_mat& h, int m) {
    const arma::cx_mat row = (obj.C.row(m) * h) * obj.Wx - obj.D.row(m);
    return row.st().as_col();
}

}  // namespace

OrientObjective make_orient_objective(const AuxState& aux, const BeamformState& bf,
                                      double noise_eve_w) {
    OrientObjective obj;
    obj.WeWe = bf.We * bf.We.t();
    obj.Wx = bf.W * bf.W.t() + obj.WeWe;
    obj.C = aux.U * aux.Omega * aux.U.t();
    obj.Cx = aux.Omega_x / noise_eve_w;
    obj.Ce = aux.Ue * aux.Omega_e * aux.Ue.t();
    obj.D = aux.U * aux.Omega * bf.W.t();
    obj.De = aux.Ue * aux.Omega_e * bf.We.t();
    return obj;
}

double orient_loss(const OrientObjective& obj, const arma::cx_mat& h, const arma::cx_mat& he) {
    const double quad = std::real(arma::trace(h * obj.Wx * h.t() * obj.C)) +
                        std::real(arma::trace(he * obj.Wx * he.t() * obj.Cx)) +
                        std::real(arma::trace(he * obj.WeWe * he.t() * obj.Ce));
    const double cross = 2.0 * std::real(arma::trace(obj.D * h.t())) +
                         2.0 * std::real(arma::trace(obj.De * he.t()));
    return quad - cross;
}

Vec3 orient_grad_tx(const OrientObjective& obj, const ChannelState& state, int n) {
    const arma::cx_vec g = g_column_tx(obj, state.H(), n);
    const arma::cx_vec ge = ge_column_tx(obj, state.He(), n);
    Vec3 grad;
    grad.zeros();
    for (int m = 0; m < state.model().n_rx(); ++m) {
        const CxVec3 dh = state.dh_dft(m, n);
        for (int i = 0; i < 3; ++i) grad(i) += 2.0 * std::real(std::conj(g(m)) * dh(i));
    }
    for (int q = 0; q < state.model().n_eve(); ++q) {
        const CxVec3 dh = state.dhe_dft(q, n);
        for (int i = 0; i < 3; ++i) grad(i) += 2.0 * std::real(std::conj(ge(q)) * dh(i));
    }
    return grad;
}

Vec3 orient_grad_rx(const OrientObjective& obj, const ChannelState& state, int m) {
    const arma::cx_vec g = g_row_rx(obj, state.H(), m);
    Vec3 grad;
    grad.zeros();
    for (int n = 0; n < state.model().n_tx(); ++n) {
        const CxVec3 dh = state.dh_dfr(m, n);
        for (int i = 0; i < 3; ++i) grad(i) += 2.0 * std::real(std::conj(g(n)) * dh(i));
    }
    return grad;
}

namespace detail {

// Loss delta when column n of H (and He) moves by delta while everything
// else stays fixed: 2 Re(delta^H g_col) + Wx_nn delta^H C delta for the
// legitimate part, plus the analogous eavesdropper terms.
double tx_loss_delta(const OrientObjective& obj, const arma::cx_vec& g_col,
                     const arma::cx_vec& ge_col, const arma::cx_vec& delta,
                     const arma::cx_vec& delta_e, int n) {
    const double wx_nn = std::real(obj.Wx(n, n));
    const double wee_nn = std::real(obj.WeWe(n, n));
    double out = 2.0 * std::real(arma::cdot(delta, g_col));
    out += wx_nn * std::real(arma::cdot(delta, obj.C * delta));
    out += 2.0 * std::real(arma::cdot(delta_e, ge_col));
    out += wx_nn * std::real(arma::cdot(delta_e, obj.Cx * delta_e));
    out += wee_nn * std::real(arma::cdot(delta_e, obj.Ce * delta_e));
    return out;
}

double rx_loss_delta(const OrientObjective& obj, const arma::cx_vec& g_row,
                     const arma::cx_vec& delta, int m) {
    const double c_mm = std::real(obj.C(m, m));
    double out = 2.0 * std::real(arma::cdot(delta, g_row));
    out += c_mm * std::real(arma::cdot(delta, arma::conj(obj.Wx) * delta));
    return out;
}

}  // namespace detail

namespace {

// One Frank-Wolfe step with Armijo backtracking for a single antenna block.
// Returns the accepted loss change (0 when the block stays put).
template <typename TrialDelta, typename Commit>
double fw_block_step(const Vec3& f_cur, const Vec3& euclid_grad, const Cap& cap,
                     const SolverConfig& cfg, TrialDelta&& trial_delta, Commit&& commit) {
    const Vec3 rgrad = tangent_project(f_cur, euclid_grad);
    const double gnorm = arma::norm(rgrad);
    if (gnorm <= kGradFloor) return 0.0;

    const Vec3 vertex = fw_vertex(rgrad, cap);
    const Vec3 dir = vertex - f_cur;
    const double slope = arma::dot(rgrad, dir);
    if (slope >= 0.0) return 0.0;  // vertex no better than the current point

    double rho = 1.0;
    while (rho >= cfg.rho_min) {
        Vec3 f_new = retract(f_cur, dir, rho);
        if (!cap.contains(f_new)) {
            if (f_new(2) >= cap.cos_z - 1e-9) {
                f_new = project_to_cap(f_new, cap);
            } else {
                throw std::logic_error("optimize_orientations: retraction left the cap");
            }
        }
        const double delta_loss = trial_delta(f_new);
        if (delta_loss <= cfg.armijo_c * rho * slope) {
            commit(f_new);
            return delta_loss;
        }
        rho *= cfg.backtrack;
    }
    return 0.0;  // line search failed; keep the block stationary
}

}  // namespace

FwStats optimize_orientations(const OrientObjective& obj, ChannelState& state, const Cap& cap,
                              const SolverConfig& cfg, bool move_tx, bool move_rx) {
    FwStats stats;
    double loss = orient_loss(obj, state.H(), state.He());
    stats.initial_loss = loss;
    if (!move_tx && !move_rx) {
        stats.final_loss = loss;
        stats.converged = true;
        return stats;
    }

    const int n_tx = state.model().n_tx();
    const int n_rx = state.model().n_rx();
    double prev_sweep_loss = loss;

    for (int iter = 1; iter <= cfg.fw_max_iters; ++iter) {
        if (move_tx) {
            for (int n = 0; n < n_tx; ++n) {
                const arma::cx_vec g_col = g_column_tx(obj, state.H(), n);
                const arma::cx_vec ge_col = ge_column_tx(obj, state.He(), n);
                const arma::cx_vec h_col = state.H().col(n);
                const arma::cx_vec he_col = state.He().col(n);

                Vec3 grad;
                grad.zeros();
                for (int m = 0; m < n_rx; ++m) {
                    const CxVec3 dh = state.dh_dft(m, n);
                    for (int i = 0; i < 3; ++i) grad(i) += 2.0 * std::real(std::conj(g_col(m)) * dh(i));
                }
                for (int q = 0; q < state.model().n_eve(); ++q) {
                    const CxVec3 dh = state.dhe_dft(q, n);
                    for (int i = 0; i < 3; ++i) grad(i) += 2.0 * std::real(std::conj(ge_col(q)) * dh(i));
                }

                loss += fw_block_step(
                    Vec3(state.tx_orientations().col(n)), grad, cap, cfg,
                    [&](const Vec3& f_new) {
                        arma::cx_vec he_new;
                        const arma::cx_vec h_new = state.tx_column(n, f_new, &he_new);
                        return detail::tx_loss_delta(obj, g_col, ge_col, h_new - h_col,
                                                     he_new - he_col, n);
                    },
                    [&](const Vec3& f_new) { state.set_tx_orientation(n, f_new); });
            }
        }
        if (move_rx) {
            for (int m = 0; m < n_rx; ++m) {
                const arma::cx_vec g_row = g_row_rx(obj, state.H(), m);
                const arma::cx_vec h_row = state.H().row(m).st().as_col();

                Vec3 grad;
                grad.zeros();
                for (int n = 0; n < n_tx; ++n) {
                    const CxVec3 dh = state.dh_dfr(m, n);
                    for (int i = 0; i < 3; ++i) grad(i) += 2.0 * std::real(std::conj(g_row(n)) * dh(i));
                }

                loss += fw_block_step(
                    Vec3(state.rx_orientations().col(m)), grad, cap, cfg,
                    [&](const Vec3& f_new) {
                        const arma::cx_vec row_new = state.rx_row(m, f_new);
                        return detail::rx_loss_delta(obj, g_row, row_new - h_row, m);
                    },
                    [&](const Vec3& f_new) { state.set_rx_orientation(m, f_new); });
            }
        }

        stats.iterations = iter;
        const double loss_exact = orient_loss(obj, state.H(), state.He());
        const double change = std::abs(loss_exact - prev_sweep_loss);
        stats.final_loss = loss_exact;
        loss = loss_exact;
        prev_sweep_loss = loss_exact;
        if (change <= cfg.fw_tol * (std::abs(loss_exact) + 1e-12)) {
            stats.converged = true;
            break;
        }
    }
    return stats;
}

}  // namespace rasec
