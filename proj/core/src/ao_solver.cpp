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

#include "rasec/ao_solver.hpp"

#include <cmath>

#include "rasec/orient_opt.hpp"

namespace rasec {

namespace {

arma::cx_mat hermitized(const arma::cx_mat& a) { return 0.5 * (a + a.t()); }

arma::cx_mat shifted_solve(const arma::cx_mat& a, const arma::cx_mat& b, double xi) {
    if (xi > 0.0) {
        return linalg::solve_hpd(a + xi * linalg::complex_eye(a.n_rows), b);
    }
    return linalg::pinv_hpsd_times(a, b);
}

double block_power(const QuadraticUpdate& q, double xi) {
    const arma::cx_mat w = shifted_solve(q.A, q.B, xi);
    return arma::accu(arma::square(arma::abs(w)));
}

// True when the min-norm solution actually solves A X = B, i.e. B lies in
// the range of A. Needed because the xi = 0 branch is only valid then.
bool in_range(const QuadraticUpdate& q, const arma::cx_mat& w0) {
    const double b_norm = arma::norm(q.B, "fro");
    if (b_norm == 0.0) return true;
    return arma::norm(q.A * w0 - q.B, "fro") <= 1e-8 * b_norm;
}

}  // namespace

void SolverConfig::validate() const {
    if (!(outer_tol > 0.0) || !(bisect_tol > 0.0) || !(fw_tol > 0.0) || !(epi_tol > 0.0)) {
        throw std::invalid_argument("SolverConfig: tolerances must be positive");
    }
    if (!(armijo_c > 0.0 && armijo_c < 1.0) || !(backtrack > 0.0 && backtrack < 1.0)) {
        throw std::invalid_argument("SolverConfig: armijo_c and backtrack must lie in (0,1)");
    }
    if (max_outer < 1 || max_bisect < 1 || fw_max_iters < 1 || epi_max_iters < 1) {
        throw std::invalid_argument("SolverConfig: iteration caps must be >= 1");
    }
    if (!(init_signal_fraction > 0.0 && init_signal_fraction <= 1.0)) {
        throw std::invalid_argument("SolverConfig: init_signal_fraction must lie in (0,1]");
    }
}

double power_curve(double xi, const QuadraticUpdate& sig, const QuadraticUpdate& an) {
    if (xi < 0.0) throw std::invalid_argument("power_curve: xi must be >= 0");
    return block_power(sig, xi) + block_power(an, xi);
}

std::pair<QuadraticUpdate, QuadraticUpdate> make_quadratic_updates(
    const AuxState& aux, const arma::cx_mat& h, const arma::cx_mat& he, double noise_eve_w) {
    const arma::cx_mat hu = h.t() * aux.U;                       // N x d
    const arma::cx_mat signal_part = hermitized(hu * aux.Omega * hu.t());
    const arma::cx_mat leak_part = hermitized(he.t() * aux.Omega_x * he) / noise_eve_w;
    const arma::cx_mat heue = he.t() * aux.Ue;                   // N x N
    const arma::cx_mat an_part = hermitized(heue * aux.Omega_e * heue.t());

    QuadraticUpdate sig{signal_part + leak_part, hu * aux.Omega};
    QuadraticUpdate an{signal_part + an_part + leak_part, heue * aux.Omega_e};
    return {std::move(sig), std::move(an)};
}

BeamformUpdate solve_power_constrained(const QuadraticUpdate& sig, const QuadraticUpdate& an,
                                       double p_max, const SolverConfig& cfg) {
    if (!(p_max > 0.0)) throw std::invalid_argument("solve_power_constrained: p_max must be positive");

    BeamformUpdate out;
    arma::cx_mat w0 = shifted_solve(sig.A, sig.B, 0.0);
    arma::cx_mat we0 = shifted_solve(an.A, an.B, 0.0);
    const double p0 = arma::accu(arma::square(arma::abs(w0))) +
                      arma::accu(arma::square(arma::abs(we0)));
    if (p0 <= p_max && in_range(sig, w0) && in_range(an, we0)) {
        out.bf = {std::move(w0), std::move(we0)};
        out.xi = 0.0;
        out.power = p0;
        return out;
    }

    const double traces = arma::accu(arma::square(arma::abs(sig.B))) +
                          arma::accu(arma::square(arma::abs(an.B)));
    const double xi_ub = std::sqrt(traces / p_max);

    // Bisect keeping the returned point on the feasible side: hi always
    // satisfies P(hi) <= P_max, and the gap P_max - P(hi) shrinks to the
    // tolerance as the bracket collapses onto xi*.
    double lo = 0.0;
    double hi = xi_ub;
    double power_hi = power_curve(hi, sig, an);
    int it = 0;
    while (it < cfg.max_bisect && (p_max - power_hi) > cfg.bisect_tol * p_max &&
           (hi - lo) > 1e-16 * xi_ub) {
        const double mid = 0.5 * (lo + hi);
        const double pm = power_curve(mid, sig, an);
        if (pm > p_max) {
            lo = mid;
        } else {
            hi = mid;
            power_hi = pm;
        }
        ++it;
    }
    if ((p_max - power_hi) > cfg.bisect_tol * p_max && it >= cfg.max_bisect) {
        throw std::runtime_error("solve_power_constrained: bisection failed to meet the power target");
    }

    out.bf = {shifted_solve(sig.A, sig.B, hi), shifted_solve(an.A, an.B, hi)};
    out.xi = hi;
    out.power = power_hi;
    out.bisect_iterations = it;
    return out;
}

BeamformUpdate update_beamformers(const AuxState& aux, const arma::cx_mat& h,
                                  const arma::cx_mat& he, double p_max, double noise_eve_w,
                                  const SolverConfig& cfg) {
    const auto [sig, an] = make_quadratic_updates(aux, h, he, noise_eve_w);
    return solve_power_constrained(sig, an, p_max, cfg);
}

BeamformState initial_beamformers(const arma::cx_mat& h, double p_max, int streams, double alpha) {
    const arma::uword n = h.n_cols;
    if (streams < 1 || static_cast<arma::uword>(streams) > std::min(n, h.n_rows)) {
        throw std::invalid_argument("initial_beamformers: streams must satisfy 1 <= d <= min(M, N)");
    }
    arma::cx_mat u_svd, v_svd;
    arma::vec s_svd;
    if (!arma::svd(u_svd, s_svd, v_svd, h)) {
        throw std::runtime_error("initial_beamformers: SVD failed");
    }
    BeamformState bf;
    bf.W = v_svd.cols(0, streams - 1) * std::sqrt(alpha * p_max / streams);
    bf.We = std::sqrt((1.0 - alpha) * p_max / static_cast<double>(n)) * linalg::complex_eye(n);
    return bf;
}

AoResult run_ao(const ChannelModel& model, const Cap& cap, double p_max, int streams,
                const arma::mat& ft_init, const arma::mat& fr_init, const SolverConfig& cfg,
                OrientMode mode, const TraceSink& sink) {
    cfg.validate();
    const double noise_rx = model.radio().noise_rx_w;
    const double noise_eve = model.radio().noise_eve_w;

    ChannelState state = model.build(ft_init, fr_init);
    BeamformState bf = initial_beamformers(state.H(), p_max, streams, cfg.init_signal_fraction);

    AoResult result;
    // F at the starting point anchors both the first convergence check and
    // the monotonicity guard.
    double f_prev = surrogate_F(update_auxiliaries(state.H(), state.He(), bf, noise_rx, noise_eve),
                                bf, state.H(), state.He(), noise_rx, noise_eve);
    for (int iter = 1; iter <= cfg.max_outer; ++iter) {
        const AuxState aux = update_auxiliaries(state.H(), state.He(), bf, noise_rx, noise_eve);
        bf = update_beamformers(aux, state.H(), state.He(), p_max, noise_eve, cfg).bf;
        result.aux = aux;

        if (mode != OrientMode::kFrozen) {
            const OrientObjective obj = make_orient_objective(aux, bf, noise_eve);
            optimize_orientations(obj, state, cap, cfg, /*move_tx=*/true,
                                  /*move_rx=*/mode == OrientMode::kJoint);
        }

        const double f_now = surrogate_F(aux, bf, state.H(), state.He(), noise_rx, noise_eve);
        const double rs = secrecy_rate(state.H(), state.He(), bf, noise_rx, noise_eve);

        TraceRecord rec{iter, f_now, rs, bf.power()};
        result.trace.push_back(rec);
        if (sink) sink(rec);

        if (f_now < f_prev - 1e-8) {
            throw std::runtime_error("run_ao: monotonicity violated");
        }
        result.iterations = iter;
        if (std::abs(f_now - f_prev) <= cfg.outer_tol * (std::abs(f_now) + 1e-12)) {
            result.converged = true;
            f_prev = f_now;
            break;
        }
        f_prev = f_now;
    }

    result.bf = std::move(bf);
    result.ft = state.tx_orientations();
    result.fr = state.rx_orientations();
    result.surrogate_nats = f_prev;
    result.secrecy_bits = secrecy_rate(state.H(), state.He(), result.bf, noise_rx, noise_eve);
    return result;
}

}  // namespace rasec
