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

#include "rasec/multicast.hpp"

#include <cmath>

#include "rasec/orient_opt.hpp"
#include "rasec/rate.hpp"

namespace rasec {

namespace {

arma::cx_mat hermitized(const arma::cx_mat& a) { return 0.5 * (a + a.t()); }

// Quadratic forms of one receiver inside the epigraph objective.
struct ReceiverBlocks {
    arma::cx_mat h_bar;   // H_k^H U_k Omega_k U_k^H H_k (N x N)
    arma::cx_mat b;       // H_k^H U_k Omega_k (N x d)
    arma::cx_mat c_hat;   // U_k Omega_k U_k^H (M x M)
    arma::cx_mat d_mat;   // U_k Omega_k W^H (M x N)
    double c_const = 0.0; // C_k
};

ReceiverBlocks make_receiver_blocks(const MulticastAux& aux, int k, const arma::cx_mat& hk,
                                    const BeamformState& bf, double noise_rx_w) {
    ReceiverBlocks rb;
    const arma::cx_mat hu = hk.t() * aux.U[k];  // N x d
    rb.b = hu * aux.Omega[k];
    rb.h_bar = hermitized(rb.b * hu.t());
    rb.c_hat = aux.U[k] * aux.Omega[k] * aux.U[k].t();
    rb.d_mat = aux.U[k] * aux.Omega[k] * bf.W.t();
    const double d = static_cast<double>(bf.W.n_cols);
    rb.c_const = linalg::logdet_hpd(hermitized(aux.Omega[k])) + d -
                 std::real(arma::trace(aux.Omega[k])) -
                 noise_rx_w * std::real(arma::trace(aux.Omega[k] * aux.U[k].t() * aux.U[k]));
    return rb;
}

double g_value(const ReceiverBlocks& rb, const arma::cx_mat& hk, const arma::cx_mat& wx) {
    return std::real(arma::trace(hk * wx * hk.t() * rb.c_hat)) -
           2.0 * std::real(arma::trace(rb.d_mat * hk.t())) - rb.c_const;
}

// Shared (eavesdropper + AN) part of the epigraph objective.
struct CommonBlocks {
    arma::cx_mat h_ex;   // sigma_e^{-2} He^H Omega_x He
    arma::cx_mat h_e;    // He^H Ue Omega_e Ue^H He + h_ex
    arma::cx_mat b_e;    // He^H Ue Omega_e
};

CommonBlocks make_common_blocks(const MulticastAux& aux, const arma::cx_mat& he,
                                double noise_eve_w) {
    CommonBlocks cb;
    cb.h_ex = hermitized(he.t() * aux.Omega_x * he) / noise_eve_w;
    const arma::cx_mat heue = he.t() * aux.Ue;
    cb.b_e = heue * aux.Omega_e;
    cb.h_e = hermitized(cb.b_e * heue.t()) + cb.h_ex;
    return cb;
}

double common_value(const CommonBlocks& cb, const BeamformState& bf) {
    return std::real(arma::trace(bf.W.t() * cb.h_ex * bf.W)) -
           2.0 * std::real(arma::trace(bf.We.t() * cb.b_e)) +
           std::real(arma::trace(bf.We.t() * cb.h_e * bf.We));
}

double quad_g(const ReceiverBlocks& rb, const BeamformState& bf) {
    return std::real(arma::trace(bf.W.t() * rb.h_bar * bf.W)) +
           std::real(arma::trace(bf.We.t() * rb.h_bar * bf.We)) -
           2.0 * std::real(arma::trace(bf.W.t() * rb.b)) - rb.c_const;
}

}  // namespace

double multicast_sr(const std::vector<arma::cx_mat>& hk, const arma::cx_mat& he,
                    const BeamformState& bf, double noise_rx_w, double noise_eve_w) {
    if (hk.empty()) throw std::invalid_argument("multicast_sr: no receivers");
    const double re = rate_eave(he, bf, noise_eve_w);
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& h : hk) {
        worst = std::min(worst, std::max(rate_legit(h, bf, noise_rx_w) - re, 0.0));
    }
    return worst;
}

MulticastAux update_auxiliaries_multicast(const std::vector<arma::cx_mat>& hk,
                                          const arma::cx_mat& he, const BeamformState& bf,
                                          double noise_rx_w, double noise_eve_w) {
    MulticastAux aux;
    for (const auto& h : hk) {
        const AuxState single = update_auxiliaries(h, he, bf, noise_rx_w, noise_eve_w);
        aux.U.push_back(single.U);
        aux.Omega.push_back(single.Omega);
        if (aux.Ue.is_empty()) {
            aux.Ue = single.Ue;
            aux.Omega_e = single.Omega_e;
            aux.Omega_x = single.Omega_x;
        }
    }
    return aux;
}

double lower_bound_F(const MulticastAux& aux, const BeamformState& bf,
                     const std::vector<arma::cx_mat>& hk, const arma::cx_mat& he,
                     double noise_rx_w, double noise_eve_w) {
    const double d = static_cast<double>(bf.W.n_cols);
    double h1_min = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < hk.size(); ++k) {
        const arma::cx_mat e = mse_matrix(hk[k], bf, aux.U[k], noise_rx_w);
        const double h1 = linalg::logdet_hpd(hermitized(aux.Omega[k])) -
                          std::real(arma::trace(aux.Omega[k] * e)) + d;
        h1_min = std::min(h1_min, h1);
    }
    const double n = static_cast<double>(bf.We.n_cols);
    const double q = static_cast<double>(he.n_rows);
    const arma::cx_mat ee = mse_matrix_an(he, bf.We, aux.Ue, noise_eve_w);
    const arma::cx_mat ex = mse_matrix_leak(he, bf, noise_eve_w);
    const double h2 = linalg::logdet_hpd(hermitized(aux.Omega_e)) -
                      std::real(arma::trace(aux.Omega_e * ee)) + n;
    const double h3 = linalg::logdet_hpd(hermitized(aux.Omega_x)) -
                      std::real(arma::trace(aux.Omega_x * ex)) + q;
    return h1_min + h2 + h3;
}

double epigraph_constraint(const MulticastAux& aux, int k, const BeamformState& bf,
                           const arma::cx_mat& hk, double noise_rx_w) {
    const ReceiverBlocks rb = make_receiver_blocks(aux, k, hk, bf, noise_rx_w);
    const arma::cx_mat wx = bf.W * bf.W.t() + bf.We * bf.We.t();
    return g_value(rb, hk, wx);
}

EpigraphResult update_beamformers_multicast(const MulticastAux& aux,
                                            const std::vector<arma::cx_mat>& hk,
                                            const arma::cx_mat& he, double p_max,
                                            double noise_rx_w, double noise_eve_w,
                                            const SolverConfig& cfg,
                                            const BeamformState* warm) {
    const int k_count = static_cast<int>(hk.size());
    if (k_count == 0) throw std::invalid_argument("update_beamformers_multicast: no receivers");

    std::vector<ReceiverBlocks> rb;
    rb.reserve(k_count);
    // C_k depends on W only through its column count; any power-feasible W
    // with the right shape works for block construction.
    BeamformState shape = warm != nullptr
                              ? *warm
                              : BeamformState{arma::cx_mat(he.n_cols, aux.Omega[0].n_rows,
                                                           arma::fill::zeros),
                                              arma::cx_mat(he.n_cols, he.n_cols, arma::fill::zeros)};
    for (int k = 0; k < k_count; ++k) {
        rb.push_back(make_receiver_blocks(aux, k, hk[k], shape, noise_rx_w));
    }
    const CommonBlocks cb = make_common_blocks(aux, he, noise_eve_w);

    auto weighted_solve = [&](const arma::vec& lambda) {
        arma::cx_mat a_sig = cb.h_ex;
        arma::cx_mat a_an = cb.h_e;
        arma::cx_mat b_sig(arma::size(rb[0].b), arma::fill::zeros);
        for (int k = 0; k < k_count; ++k) {
            a_sig += lambda(k) * rb[k].h_bar;
            a_an += lambda(k) * rb[k].h_bar;
            b_sig += lambda(k) * rb[k].b;
        }
        return solve_power_constrained({std::move(a_sig), std::move(b_sig)},
                                       {std::move(a_an), cb.b_e}, p_max, cfg);
    };

    auto objective = [&](const BeamformState& bf, double* theta_out) {
        double worst = -std::numeric_limits<double>::infinity();
        for (int k = 0; k < k_count; ++k) worst = std::max(worst, quad_g(rb[k], bf));
        if (theta_out != nullptr) *theta_out = worst;
        return worst + common_value(cb, bf);
    };

    // Exact solve at uniform weights as the starting anchor.
    arma::vec lambda(k_count, arma::fill::value(1.0 / k_count));
    BeamformState current = weighted_solve(lambda).bf;
    if (warm != nullptr && objective(*warm, nullptr) < objective(current, nullptr) &&
        warm->power_feasible(p_max)) {
        current = *warm;
    }

    EpigraphResult best;
    best.bf = current;
    best.objective = objective(current, &best.vartheta);

    arma::vec active_counts(k_count, arma::fill::zeros);
    const double sqrt_p = std::sqrt(p_max);
    double scale = std::max({1.0, std::abs(best.objective)});
    int stale = 0;

    int t = 1;
    for (; t <= cfg.epi_max_iters; ++t) {
        // Active receiver and subgradient at the current point.
        int k_star = 0;
        double g_max = -std::numeric_limits<double>::infinity();
        for (int k = 0; k < k_count; ++k) {
            const double g = quad_g(rb[k], current);
            if (g > g_max) {
                g_max = g;
                k_star = k;
            }
        }
        active_counts(k_star) += 1.0;

        arma::cx_mat grad_w = rb[k_star].h_bar * current.W - rb[k_star].b + cb.h_ex * current.W;
        arma::cx_mat grad_we = rb[k_star].h_bar * current.We + cb.h_e * current.We - cb.b_e;
        const double gnorm = std::sqrt(std::pow(arma::norm(grad_w, "fro"), 2) +
                                       std::pow(arma::norm(grad_we, "fro"), 2));
        if (gnorm <= 1e-14 * scale) break;

        const double step = cfg.epi_step0 * sqrt_p / (gnorm * std::sqrt(static_cast<double>(t)));
        BeamformState next{current.W - step * grad_w, current.We - step * grad_we};
        const double power = next.power();
        if (power > p_max) {
            const double shrink = std::sqrt(p_max / power);
            next.W *= shrink;
            next.We *= shrink;
        }
        current = std::move(next);

        double theta = 0.0;
        const double value = objective(current, &theta);
        if (value < best.objective - 1e-12 * scale) {
            best.objective = value;
            best.vartheta = theta;
            best.bf = current;
            stale = 0;
        } else {
            ++stale;
        }

        // Re-anchor with an exact solve at the running active-set frequencies;
        // near the optimum this recovers the dual weights and lands on the
        // exact minimizer of the correctly weighted problem.
        if (t % 100 == 0 || stale >= 250) {
            arma::vec freq = active_counts / arma::accu(active_counts);
            const BeamformState anchored = weighted_solve(freq).bf;
            double theta_a = 0.0;
            const double value_a = objective(anchored, &theta_a);
            if (value_a < best.objective) {
                best.objective = value_a;
                best.vartheta = theta_a;
                best.bf = anchored;
                current = best.bf;
                stale = 0;
            } else if (stale >= 250) {
                break;
            }
        }
        scale = std::max(scale, std::abs(best.objective));
    }
    best.iterations = t;

    // KKT residual: minimal-norm convex combination of active-constraint
    // subgradients plus the common gradient, with any outward radial
    // component removed when the power ball is tight.
    {
        const BeamformState& bf = best.bf;
        double g_max = -std::numeric_limits<double>::infinity();
        std::vector<double> g(k_count);
        for (int k = 0; k < k_count; ++k) {
            g[k] = quad_g(rb[k], bf);
            g_max = std::max(g_max, g[k]);
        }
        std::vector<int> active;
        for (int k = 0; k < k_count; ++k) {
            if (g[k] >= g_max - 1e-6 * (1.0 + std::abs(g_max))) active.push_back(k);
        }
        const int na = static_cast<int>(active.size());
        std::vector<arma::cx_mat> gw(na), gwe(na);
        for (int i = 0; i < na; ++i) {
            gw[i] = rb[active[i]].h_bar * bf.W - rb[active[i]].b + cb.h_ex * bf.W;
            gwe[i] = rb[active[i]].h_bar * bf.We + cb.h_e * bf.We - cb.b_e;
        }
        arma::vec weights(na, arma::fill::value(1.0 / na));
        auto combo_norm2 = [&](const arma::vec& w, arma::cx_mat& cw, arma::cx_mat& cwe) {
            cw.zeros(arma::size(bf.W));
            cwe.zeros(arma::size(bf.We));
            for (int i = 0; i < na; ++i) {
                cw += w(i) * gw[i];
                cwe += w(i) * gwe[i];
            }
            // Remove the radial direction if the power constraint is active
            // and the gradient points outward.
            if (bf.power() >= p_max * (1.0 - 1e-9)) {
                const double inner = std::real(arma::accu(arma::conj(bf.W) % cw)) +
                                     std::real(arma::accu(arma::conj(bf.We) % cwe));
                if (inner < 0.0) {
                    const double xnorm2 = bf.power();
                    cw -= (inner / xnorm2) * bf.W;
                    cwe -= (inner / xnorm2) * bf.We;
                }
            }
            return std::pow(arma::norm(cw, "fro"), 2) + std::pow(arma::norm(cwe, "fro"), 2);
        };
        arma::cx_mat cw, cwe;
        double bestn = combo_norm2(weights, cw, cwe);
        // Crude simplex descent over the active weights; the active set is
        // tiny so a short randomized-free coordinate sweep is enough.
        for (int pass = 0; pass < 200 && na > 1; ++pass) {
            bool improved = false;
            for (int i = 0; i < na; ++i) {
                for (const double delta : {0.1, -0.1, 0.01, -0.01}) {
                    arma::vec trial = weights;
                    trial(i) = std::clamp(trial(i) + delta, 0.0, 1.0);
                    trial /= arma::accu(trial);
                    const double n2 = combo_norm2(trial, cw, cwe);
                    if (n2 < bestn) {
                        bestn = n2;
                        weights = trial;
                        improved = true;
                    }
                }
            }
            if (!improved) break;
        }
        double grad_scale = 0.0;
        for (int i = 0; i < na; ++i) {
            grad_scale = std::max(grad_scale, std::sqrt(std::pow(arma::norm(gw[i], "fro"), 2) +
                                                        std::pow(arma::norm(gwe[i], "fro"), 2)));
        }
        best.kkt_residual = std::sqrt(bestn) / std::max(grad_scale, 1e-300);
    }
    return best;
}

MulticastOrientResult update_orientations_multicast(const MulticastAux& aux,
                                                    const BeamformState& bf,
                                                    std::vector<ChannelState>& states,
                                                    std::vector<double>& mu, const Cap& cap,
                                                    double beta_step, double noise_rx_w,
                                                    double noise_eve_w, const SolverConfig& cfg,
                                                    bool move_tx, bool move_rx) {
    const int k_count = static_cast<int>(states.size());
    if (k_count == 0 || mu.size() != states.size()) {
        throw std::invalid_argument("update_orientations_multicast: state/multiplier mismatch");
    }

    const arma::cx_mat wewe = bf.We * bf.We.t();
    const arma::cx_mat wx = bf.W * bf.W.t() + wewe;
    const arma::cx_mat cx = aux.Omega_x / noise_eve_w;
    const arma::cx_mat ce = aux.Ue * aux.Omega_e * aux.Ue.t();
    const arma::cx_mat de = aux.Ue * aux.Omega_e * bf.We.t();

    std::vector<ReceiverBlocks> rb;
    for (int k = 0; k < k_count; ++k) {
        rb.push_back(make_receiver_blocks(aux, k, states[k].H(), bf, noise_rx_w));
    }

    const int n_tx = states[0].model().n_tx();
    const int n_rx = states[0].model().n_rx();
    const int n_eve = states[0].model().n_eve();

    auto lagrangian_loss = [&]() {
        const arma::cx_mat& he = states[0].He();
        double loss = std::real(arma::trace(he * wx * he.t() * cx)) +
                      std::real(arma::trace(he * wewe * he.t() * ce)) -
                      2.0 * std::real(arma::trace(de * he.t()));
        for (int k = 0; k < k_count; ++k) {
            loss += mu[k] * g_value(rb[k], states[k].H(), wx);
        }
        return loss;
    };

    double loss = lagrangian_loss();
    double prev_loss = loss;
    int iters = 0;
    const int sweep_cap = (move_tx || move_rx) ? cfg.fw_max_iters : 0;

    for (int iter = 1; iter <= sweep_cap; ++iter) {
        // Transmit sweep: antenna n changes column n of every H_k and of He.
        for (int n = 0; move_tx && n < n_tx; ++n) {
            std::vector<arma::cx_vec> g_cols(k_count), h_cols(k_count);
            for (int k = 0; k < k_count; ++k) {
                g_cols[k] = mu[k] * (rb[k].c_hat * (states[k].H() * wx.col(n)) - rb[k].d_mat.col(n));
                h_cols[k] = states[k].H().col(n);
            }
            const arma::cx_mat& he = states[0].He();
            const arma::cx_vec ge_col = cx * (he * wx.col(n)) + ce * (he * wewe.col(n)) - de.col(n);
            const arma::cx_vec he_col = he.col(n);

            Vec3 grad;
            grad.zeros();
            for (int k = 0; k < k_count; ++k) {
                for (int m = 0; m < n_rx; ++m) {
                    const CxVec3 dh = states[k].dh_dft(m, n);
                    for (int i = 0; i < 3; ++i) {
                        grad(i) += 2.0 * std::real(std::conj(g_cols[k](m)) * dh(i));
                    }
                }
            }
            for (int q = 0; q < n_eve; ++q) {
                const CxVec3 dh = states[0].dhe_dft(q, n);
                for (int i = 0; i < 3; ++i) grad(i) += 2.0 * std::real(std::conj(ge_col(q)) * dh(i));
            }

            const Vec3 f_cur(states[0].tx_orientations().col(n));
            const Vec3 rgrad = tangent_project(f_cur, grad);
            if (arma::norm(rgrad) <= 1e-14) continue;
            const Vec3 vertex = fw_vertex(rgrad, cap);
            const Vec3 dir = vertex - f_cur;
            const double slope = arma::dot(rgrad, dir);
            if (slope >= 0.0) continue;

            const double wx_nn = std::real(wx(n, n));
            const double wee_nn = std::real(wewe(n, n));
            double rho = 1.0;
            while (rho >= cfg.rho_min) {
                Vec3 f_new = retract(f_cur, dir, rho);
                if (!cap.contains(f_new)) {
                    if (f_new(2) >= cap.cos_z - 1e-9) {
                        f_new = project_to_cap(f_new, cap);
                    } else {
                        throw std::logic_error("update_orientations_multicast: left the cap");
                    }
                }
                double delta_loss = 0.0;
                std::vector<arma::cx_vec> trial_cols(k_count);
                arma::cx_vec trial_eve;
                for (int k = 0; k < k_count; ++k) {
                    arma::cx_vec* eve = (k == 0) ? &trial_eve : nullptr;
                    trial_cols[k] = states[k].tx_column(n, f_new, eve);
                    const arma::cx_vec d_k = trial_cols[k] - h_cols[k];
                    delta_loss += 2.0 * std::real(arma::cdot(d_k, g_cols[k])) +
                                  mu[k] * wx_nn * std::real(arma::cdot(d_k, rb[k].c_hat * d_k));
                }
                const arma::cx_vec d_e = trial_eve - he_col;
                delta_loss += 2.0 * std::real(arma::cdot(d_e, ge_col)) +
                              wx_nn * std::real(arma::cdot(d_e, cx * d_e)) +
                              wee_nn * std::real(arma::cdot(d_e, ce * d_e));
                if (delta_loss <= cfg.armijo_c * rho * slope) {
                    for (int k = 0; k < k_count; ++k) states[k].set_tx_orientation(n, f_new);
                    loss += delta_loss;
                    break;
                }
                rho *= cfg.backtrack;
            }
        }

        // Receive sweeps: antenna (k, m) touches row m of H_k only.
        for (int k = 0; move_rx && k < k_count; ++k) {
            for (int m = 0; m < n_rx; ++m) {
                const arma::cx_mat row =
                    mu[k] * ((rb[k].c_hat.row(m) * states[k].H()) * wx - rb[k].d_mat.row(m));
                const arma::cx_vec g_row = row.st().as_col();
                const arma::cx_vec h_row = states[k].H().row(m).st().as_col();

                Vec3 grad;
                grad.zeros();
                for (int n = 0; n < n_tx; ++n) {
                    const CxVec3 dh = states[k].dh_dfr(m, n);
                    for (int i = 0; i < 3; ++i) {
                        grad(i) += 2.0 * std::real(std::conj(g_row(n)) * dh(i));
                    }
                }

                const Vec3 f_cur(states[k].rx_orientations().col(m));
                const Vec3 rgrad = tangent_project(f_cur, grad);
                if (arma::norm(rgrad) <= 1e-14) continue;
                const Vec3 vertex = fw_vertex(rgrad, cap);
                const Vec3 dir = vertex - f_cur;
                const double slope = arma::dot(rgrad, dir);
                if (slope >= 0.0) continue;

                const double c_mm = std::real(rb[k].c_hat(m, m));
                double rho = 1.0;
                while (rho >= cfg.rho_min) {
                    Vec3 f_new = retract(f_cur, dir, rho);
                    if (!cap.contains(f_new)) {
                        if (f_new(2) >= cap.cos_z - 1e-9) {
                            f_new = project_to_cap(f_new, cap);
                        } else {
                            throw std::logic_error("update_orientations_multicast: left the cap");
                        }
                    }
                    const arma::cx_vec row_new = states[k].rx_row(m, f_new);
                    const arma::cx_vec d_r = row_new - h_row;
                    const double delta_loss =
                        2.0 * std::real(arma::cdot(d_r, g_row)) +
                        mu[k] * c_mm * std::real(arma::cdot(d_r, arma::conj(wx) * d_r));
                    if (delta_loss <= cfg.armijo_c * rho * slope) {
                        states[k].set_rx_orientation(m, f_new);
                        loss += delta_loss;
                        break;
                    }
                    rho *= cfg.backtrack;
                }
            }
        }

        iters = iter;
        const double exact = lagrangian_loss();
        const double change = std::abs(exact - prev_loss);
        loss = exact;
        prev_loss = exact;
        if (change <= cfg.fw_tol * (std::abs(exact) + 1e-12)) break;
    }

    MulticastOrientResult result;
    result.fw_iterations = iters;
    result.g.resize(k_count);
    double theta = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < k_count; ++k) {
        result.g[k] = g_value(rb[k], states[k].H(), wx);
        theta = std::max(theta, result.g[k]);
    }
    result.vartheta = theta;
    for (int k = 0; k < k_count; ++k) {
        mu[k] = std::max(0.0, mu[k] + beta_step * (result.g[k] - theta));
    }
    return result;
}

MulticastAoResult run_ao_multicast(const Scenario& sc, const SolverConfig& cfg,
                                   const MulticastTraceSink& sink, OrientMode mode,
                                   const arma::mat* ft_init,
                                   const std::vector<arma::mat>* fr_init) {
    cfg.validate();
    const int k_count = sc.receivers();
    const double noise_rx = sc.noise_rx_w();
    const double noise_eve = sc.noise_eve_w();
    const double p_max = sc.p_max_w();

    const arma::mat& ft0 = ft_init != nullptr ? *ft_init : sc.init_tx;
    std::vector<ChannelState> states;
    states.reserve(k_count);
    for (int k = 0; k < k_count; ++k) {
        const arma::mat& fr0 = fr_init != nullptr ? (*fr_init)[k] : sc.init_rx[k];
        states.push_back(sc.links[k].build(ft0, fr0));
    }

    auto channels = [&]() {
        std::vector<arma::cx_mat> hk;
        hk.reserve(k_count);
        for (const auto& s : states) hk.push_back(s.H());
        return hk;
    };

    BeamformState bf = initial_beamformers(states[0].H(), p_max, sc.cfg.streams,
                                           cfg.init_signal_fraction);
    std::vector<double> mu(k_count, 1.0);

    MulticastAoResult result;
    double f_prev = -std::numeric_limits<double>::infinity();
    for (int iter = 1; iter <= cfg.max_outer; ++iter) {
        const std::vector<arma::cx_mat> hk = channels();
        const MulticastAux aux =
            update_auxiliaries_multicast(hk, states[0].He(), bf, noise_rx, noise_eve);
        const EpigraphResult epi = update_beamformers_multicast(
            aux, hk, states[0].He(), p_max, noise_rx, noise_eve, cfg, &bf);
        bf = epi.bf;

        const double beta_step = cfg.dual_step0 / std::sqrt(static_cast<double>(iter));
        const MulticastOrientResult orient = update_orientations_multicast(
            aux, bf, states, mu, sc.cap, beta_step, noise_rx, noise_eve, cfg,
            mode != OrientMode::kFrozen, mode == OrientMode::kJoint);

        const std::vector<arma::cx_mat> hk_now = channels();
        const double f_now = lower_bound_F(aux, bf, hk_now, states[0].He(), noise_rx, noise_eve);
        const double rs = multicast_sr(hk_now, states[0].He(), bf, noise_rx, noise_eve);

        MulticastTraceRecord rec{iter, f_now, rs, orient.vartheta};
        result.trace.push_back(rec);
        if (sink) sink(rec);

        result.iterations = iter;
        if (std::isfinite(f_prev) &&
            std::abs(f_now - f_prev) <= cfg.outer_tol * (std::abs(f_now) + 1e-12)) {
            f_prev = f_now;
            result.converged = true;
            break;
        }
        f_prev = f_now;
    }

    result.bf = std::move(bf);
    result.ft = states[0].tx_orientations();
    for (int k = 0; k < k_count; ++k) result.fr.push_back(states[k].rx_orientations());
    result.mu = std::move(mu);
    result.lower_bound_nats = f_prev;
    result.secrecy_bits = multicast_sr(channels(), states[0].He(), result.bf, noise_rx, noise_eve);
    return result;
}

}  // namespace rasec
