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

#include "rasec/selfcheck.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "rasec/ao_solver.hpp"
#include "rasec/orient_opt.hpp"
#include "rasec/rng.hpp"
#include "rasec/scenario.hpp"
#include "rasec/sweep.hpp"

namespace rasec {

namespace {

arma::cx_mat random_cx(CounterRng& rng, int rows, int cols, double scale) {
    arma::cx_mat out(rows, cols);
    for (int c = 0; c < cols; ++c) {
        for (int r = 0; r < rows; ++r) {
            out(r, c) = cx_double{rng.uniform(-scale, scale), rng.uniform(-scale, scale)};
        }
    }
    return out;
}

BeamformState random_bf(CounterRng& rng, int n, int d, double p_max) {
    BeamformState bf{random_cx(rng, n, d, 1.0), random_cx(rng, n, n, 1.0)};
    const double scale = std::sqrt(p_max / bf.power()) * rng.uniform(0.3, 1.0);
    bf.W *= scale;
    bf.We *= scale;
    return bf;
}

ScenarioConfig tiny_config(std::uint64_t seed) {
    ScenarioConfig cfg;
    cfg.tx_x = 2;
    cfg.tx_y = 2;
    cfg.rx_x = 2;
    cfg.rx_y = 1;
    cfg.eve_x = 2;
    cfg.eve_y = 1;
    cfg.streams = 1;
    cfg.cluster_count = 2;
    cfg.seed = seed;
    return cfg;
}

CheckResult check_tightness() {
    CheckResult res{"surrogate tightness", true, ""};
    CounterRng rng(2024, Stream::kTest);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_u64() % 3);
        const int m = 2 + static_cast<int>(rng.next_u64() % 2);
        const int q = 2 + static_cast<int>(rng.next_u64() % 2);
        const int d = 1 + static_cast<int>(rng.next_u64() % std::min(2, std::min(m, n)));
        const arma::cx_mat h = random_cx(rng, m, n, 1e-3);
        const arma::cx_mat he = random_cx(rng, q, n, 1e-3);
        const BeamformState bf = random_bf(rng, n, d, 0.1);
        const double noise = 1e-8;
        const AuxState aux = update_auxiliaries(h, he, bf, noise, noise);
        const double f = surrogate_F(aux, bf, h, he, noise, noise);
        const double direct = rate_legit(h, bf, noise) - rate_eave(he, bf, noise);
        worst = std::max(worst, std::abs(f / std::log(2.0) - direct));
    }
    res.pass = worst < 1e-8;
    std::ostringstream ss;
    ss << "max |F/ln2 - (R - Re)| = " << worst;
    res.detail = ss.str();
    return res;
}

CheckResult check_gradients() {
    CheckResult res{"orientation gradients vs finite differences", true, ""};
    double worst = 0.0;
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        ScenarioConfig grad_cfg = tiny_config(seed);
        grad_cfg.noise_rx_dbm = -45.0;
        grad_cfg.noise_eve_dbm = -45.0;
        const Scenario sc = make_scenario(grad_cfg);
        ChannelState state = sc.links[0].build(sc.init_tx, sc.init_rx[0]);
        CounterRng rng(seed, Stream::kTest);
        const BeamformState bf = random_bf(rng, sc.n_tx(), 1, sc.p_max_w());
        const AuxState aux =
            update_auxiliaries(state.H(), state.He(), bf, sc.noise_rx_w(), sc.noise_eve_w());
        const OrientObjective obj = make_orient_objective(aux, bf, sc.noise_eve_w());

        const double step = 1e-6;
        for (int point = 0; point < 5; ++point) {
            const int n = static_cast<int>(rng.next_u64() % sc.n_tx());
            const Vec3 analytic = orient_grad_tx(obj, state, n);
            Vec3 fd;
            const Vec3 f0(state.tx_orientations().col(n));
            for (int i = 0; i < 3; ++i) {
                Vec3 fp = f0, fm = f0;
                fp(i) += step;
                fm(i) -= step;
                state.set_tx_orientation(n, fp);
                const double lp = orient_loss(obj, state.H(), state.He());
                state.set_tx_orientation(n, fm);
                const double lm = orient_loss(obj, state.H(), state.He());
                fd(i) = (lp - lm) / (2.0 * step);
            }
            state.set_tx_orientation(n, f0);
            const double rel = arma::norm(Vec3(analytic - fd)) /
                               std::max(arma::norm(analytic), 1e-300);
            worst = std::max(worst, rel);
        }
    }
    res.pass = worst < 1e-4;
    std::ostringstream ss;
    ss << "max relative error = " << worst;
    res.detail = ss.str();
    return res;
}

CheckResult check_bisection() {
    CheckResult res{"power bisection", true, ""};
    CounterRng rng(77, Stream::kTest);
    SolverConfig cfg;
    std::ostringstream ss;
    for (int trial = 0; trial < 5; ++trial) {
        const int n = 3 + static_cast<int>(rng.next_u64() % 3);
        const arma::cx_mat ga = random_cx(rng, n, n, 1.0);
        const arma::cx_mat gae = random_cx(rng, n, n, 1.0);
        QuadraticUpdate sig{ga * ga.t(), random_cx(rng, n, 2, 1.0)};
        QuadraticUpdate an{gae * gae.t(), random_cx(rng, n, n, 1.0)};
        const double p_max = 0.5;
        const auto upd = solve_power_constrained(sig, an, p_max, cfg);
        if (upd.xi > 0.0 && std::abs(upd.power - p_max) > cfg.bisect_tol * p_max) {
            res.pass = false;
            ss << "power mismatch " << std::abs(upd.power - p_max) << "; ";
        }
        double prev = power_curve(1e-3, sig, an);
        for (const double xi : {1e-2, 1e-1, 1.0, 10.0}) {
            const double cur = power_curve(xi, sig, an);
            if (cur >= prev) {
                res.pass = false;
                ss << "P(xi) not decreasing; ";
            }
            prev = cur;
        }
    }
    // Scalar closed form: A = 0, |w|^2 must hit P exactly.
    QuadraticUpdate sig{arma::cx_mat(1, 1, arma::fill::zeros),
                        arma::cx_mat(1, 1, arma::fill::value(cx_double{2.0, -1.0}))};
    QuadraticUpdate an{arma::cx_mat(1, 1, arma::fill::zeros), arma::cx_mat(1, 1, arma::fill::zeros)};
    SolverConfig tight = cfg;
    tight.bisect_tol = 1e-12;
    const auto upd = solve_power_constrained(sig, an, 0.25, tight);
    const double xi_expected = std::abs(cx_double{2.0, -1.0}) / 0.5;
    if (std::abs(upd.xi - xi_expected) > 1e-10 * xi_expected ||
        std::abs(upd.bf.power() - 0.25) > 1e-10) {
        res.pass = false;
        ss << "scalar case off (xi=" << upd.xi << " expected " << xi_expected << "); ";
    }
    res.detail = ss.str().empty() ? "monotone, complementary slackness, scalar case exact"
                                  : ss.str();
    return res;
}

CheckResult check_fw_vertex() {
    CheckResult res{"Frank-Wolfe vertex oracle", true, ""};
    CounterRng rng(31, Stream::kTest);
    double worst = 0.0;
    for (const double theta : {std::numbers::pi / 5.0, std::numbers::pi / 2.0}) {
        const Cap cap(theta);
        const arma::mat samples = [&] {
            arma::mat s(3, 20000);
            CounterRng srng(5, Stream::kTest);
            for (arma::uword i = 0; i < s.n_cols; ++i) {
                s.col(i) = cap_point_from_uniforms(cap, srng.next_unit(), srng.next_unit());
            }
            return s;
        }();
        for (int trial = 0; trial < 20; ++trial) {
            Vec3 g{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
            if (arma::norm(g) < 1e-6) continue;
            const Vec3 y = fw_vertex(g, cap);
            const double value = arma::dot(g / arma::norm(g), y);
            const arma::vec dots = samples.t() * (g / arma::norm(g));
            worst = std::max(worst, value - dots.min());
        }
    }
    res.pass = worst < 1e-3;  // 2e4-point oracle resolution
    std::ostringstream ss;
    ss << "max suboptimality vs sampled cap = " << worst;
    res.detail = ss.str();
    return res;
}

CheckResult check_projection() {
    CheckResult res{"cap projection", true, ""};
    CounterRng rng(13, Stream::kTest);
    const Cap cap(std::numbers::pi / 4.0);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        Vec3 x{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
        if (arma::norm(x) < 1e-9) continue;
        const Vec3 pi_x = project_to_cap(x, cap);
        const Vec3 pi2 = project_to_cap(pi_x, cap);
        worst = std::max(worst, arma::norm(Vec3(pi_x - pi2)));
        if (!cap.contains(pi_x)) res.pass = false;
    }
    if (worst > 0.0) res.pass = false;
    res.detail = "idempotent and feasible on 200 random directions";
    return res;
}

CheckResult check_determinism() {
    CheckResult res{"sweep determinism", true, ""};
    ScenarioConfig cfg = tiny_config(3);
    cfg.solver.max_outer = 4;
    SweepSpec spec;
    spec.axis = SweepAxis::kPmaxDbm;
    spec.values = {10.0, 20.0};
    spec.seeds_per_point = 2;
    spec.baselines = {Baseline::kProposed};
    const SweepOutput a = run_sweep(spec, cfg, 2);
    const SweepOutput b = run_sweep(spec, cfg, 1);
    res.pass = a.results_csv == b.results_csv && a.aggregate_csv == b.aggregate_csv;
    res.detail = res.pass ? "byte-identical across runs and thread counts"
                          : "CSV outputs differ between runs";
    return res;
}

}  // namespace

std::vector<CheckResult> run_selfchecks() {
    std::vector<CheckResult> out;
    out.push_back(check_tightness());
    out.push_back(check_gradients());
    out.push_back(check_bisection());
    out.push_back(check_fw_vertex());
    out.push_back(check_projection());
    out.push_back(check_determinism());
    return out;
}

}  // namespace rasec
