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

#include <doctest.h>

#include "rasec/ao_solver.hpp"
#include "rasec/scenario.hpp"
#include "testutil.hpp"

using namespace rasec;

namespace {

QuadraticUpdate random_quadratic(CounterRng& rng, int n, int cols, double scale = 1.0) {
    const arma::cx_mat g = test::random_cx(rng, n, n, scale);
    return {g * g.t(), test::random_cx(rng, n, cols, scale)};
}

// Projected-gradient reference for the convex power-constrained quadratic
// program; deliberately avoids the bisection route.
double projected_gradient_objective(const QuadraticUpdate& sig, const QuadraticUpdate& an,
                                    double p_max, int iters = 20000) {
    const arma::uword n = sig.A.n_rows;
    arma::cx_mat w(n, sig.B.n_cols, arma::fill::zeros);
    arma::cx_mat we(n, an.B.n_cols, arma::fill::zeros);
    const double lip = 2.0 * (arma::norm(sig.A, 2) + arma::norm(an.A, 2)) + 1e-9;
    const double step = 1.0 / lip;
    for (int it = 0; it < iters; ++it) {
        const arma::cx_mat gw = sig.A * w - sig.B;
        const arma::cx_mat gwe = an.A * we - an.B;
        w -= step * gw;
        we -= step * gwe;
        const double power = arma::accu(arma::square(arma::abs(w))) +
                             arma::accu(arma::square(arma::abs(we)));
        if (power > p_max) {
            const double s = std::sqrt(p_max / power);
            w *= s;
            we *= s;
        }
    }
    const auto quad = [](const QuadraticUpdate& q, const arma::cx_mat& x) {
        return std::real(arma::trace(x.t() * q.A * x)) -
               2.0 * std::real(arma::trace(q.B.t() * x));
    };
    return quad(sig, w) + quad(an, we);
}

double beamform_objective(const QuadraticUpdate& sig, const QuadraticUpdate& an,
                          const BeamformState& bf) {
    const auto quad = [](const QuadraticUpdate& q, const arma::cx_mat& x) {
        return std::real(arma::trace(x.t() * q.A * x)) -
               2.0 * std::real(arma::trace(q.B.t() * x));
    };
    return quad(sig, bf.W) + quad(an, bf.We);
}

}  // namespace

TEST_SUITE("ao_solver") {

TEST_CASE("scalar power curve is |b|^2 / xi^2") {
    QuadraticUpdate sig{arma::cx_mat(1, 1, arma::fill::zeros),
                        arma::cx_mat(1, 1, arma::fill::value(cx_double{3.0, 4.0}))};
    QuadraticUpdate an{arma::cx_mat(1, 1, arma::fill::zeros),
                       arma::cx_mat(1, 1, arma::fill::zeros)};
    for (const double xi : {0.5, 1.0, 2.0, 8.0}) {
        CHECK(power_curve(xi, sig, an) == doctest::Approx(25.0 / (xi * xi)).epsilon(1e-12));
    }
}

TEST_CASE("power curve decreases along xi and vanishes at infinity") {
    CounterRng rng(3, Stream::kTest);
    for (int trial = 0; trial < 20; ++trial) {
        const auto sig = random_quadratic(rng, 4, 2);
        const auto an = random_quadratic(rng, 4, 4);
        double prev = std::numeric_limits<double>::infinity();
        for (int i = 0; i < 50; ++i) {
            const double xi = std::pow(10.0, -2.0 + 4.0 * i / 49.0);
            const double cur = power_curve(xi, sig, an);
            CHECK(cur < prev);
            prev = cur;
        }
        CHECK(power_curve(1e6, sig, an) < 1e-9);
    }
}

TEST_CASE("the Appendix upper bound keeps the power under budget") {
    CounterRng rng(5, Stream::kTest);
    for (int trial = 0; trial < 20; ++trial) {
        const auto sig = random_quadratic(rng, 3, 2);
        const auto an = random_quadratic(rng, 3, 3);
        const double p_max = 0.3;
        const double traces = arma::accu(arma::square(arma::abs(sig.B))) +
                              arma::accu(arma::square(arma::abs(an.B)));
        const double xi_ub = std::sqrt(traces / p_max);
        CHECK(power_curve(xi_ub, sig, an) <= p_max * (1.0 + 1e-12));
    }
}

TEST_CASE("zero right-hand sides give zero beamformers at xi = 0") {
    SolverConfig cfg;
    QuadraticUpdate sig{linalg::complex_eye(3), arma::cx_mat(3, 2, arma::fill::zeros)};
    QuadraticUpdate an{linalg::complex_eye(3), arma::cx_mat(3, 3, arma::fill::zeros)};
    const auto upd = solve_power_constrained(sig, an, 1.0, cfg);
    CHECK(upd.xi == 0.0);
    CHECK(arma::norm(upd.bf.W, "fro") == 0.0);
    CHECK(arma::norm(upd.bf.We, "fro") == 0.0);
}

TEST_CASE("scalar update with zero curvature matches the closed form") {
    SolverConfig cfg;
    cfg.bisect_tol = 1e-14;
    QuadraticUpdate sig{arma::cx_mat(1, 1, arma::fill::zeros),
                        arma::cx_mat(1, 1, arma::fill::value(cx_double{2.0, -1.0}))};
    QuadraticUpdate an{arma::cx_mat(1, 1, arma::fill::zeros),
                       arma::cx_mat(1, 1, arma::fill::zeros)};
    const double p_max = 0.25;
    const auto upd = solve_power_constrained(sig, an, p_max, cfg);
    const double xi_expected = std::abs(cx_double{2.0, -1.0}) / std::sqrt(p_max);
    CHECK(upd.xi == doctest::Approx(xi_expected).epsilon(1e-10));
    CHECK(upd.bf.power() == doctest::Approx(p_max).epsilon(1e-10));
    // Complementary slackness.
    CHECK(upd.xi * (upd.power - p_max) == doctest::Approx(0.0).epsilon(1e-8));
}

TEST_CASE("bisection stays within [0, xi_ub] and meets the power target") {
    CounterRng rng(7, Stream::kTest);
    SolverConfig cfg;
    for (int trial = 0; trial < 20; ++trial) {
        const auto sig = random_quadratic(rng, 4, 2);
        const auto an = random_quadratic(rng, 4, 4);
        const double p_max = 0.05;
        const double traces = arma::accu(arma::square(arma::abs(sig.B))) +
                              arma::accu(arma::square(arma::abs(an.B)));
        const double xi_ub = std::sqrt(traces / p_max);
        const auto upd = solve_power_constrained(sig, an, p_max, cfg);
        CHECK(upd.xi >= 0.0);
        CHECK(upd.xi <= xi_ub * (1.0 + 1e-12));
        if (upd.xi > 0.0) {
            CHECK(std::abs(upd.power - p_max) <= cfg.bisect_tol * p_max);
        } else {
            CHECK(upd.power <= p_max * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("bisection solution matches a projected-gradient reference") {
    CounterRng rng(11, Stream::kTest);
    SolverConfig cfg;
    for (int trial = 0; trial < 5; ++trial) {
        const auto sig = random_quadratic(rng, 3, 1);
        const auto an = random_quadratic(rng, 3, 3);
        const double p_max = 0.02;  // tight budget so the constraint binds
        const auto upd = solve_power_constrained(sig, an, p_max, cfg);
        const double obj_bisect = beamform_objective(sig, an, upd.bf);
        const double obj_pg = projected_gradient_objective(sig, an, p_max);
        const double scale = std::max({1.0, std::abs(obj_bisect), std::abs(obj_pg)});
        CHECK(obj_bisect <= obj_pg + 1e-6 * scale);
        CHECK(std::abs(obj_bisect - obj_pg) <= 1e-5 * scale);
    }
}

TEST_CASE("initialization splits the budget and stays feasible") {
    CounterRng rng(13, Stream::kTest);
    const arma::cx_mat h = test::random_cx(rng, 3, 5, 1e-3);
    const BeamformState bf = initial_beamformers(h, 0.1, 2, 0.9);
    CHECK(arma::accu(arma::square(arma::abs(bf.W))) == doctest::Approx(0.09).epsilon(1e-12));
    CHECK(arma::accu(arma::square(arma::abs(bf.We))) == doctest::Approx(0.01).epsilon(1e-12));
    CHECK(bf.power_feasible(0.1));
    CHECK_THROWS_AS(initial_beamformers(h, 0.1, 4, 0.9), std::invalid_argument);
}

TEST_CASE("a loose tolerance terminates after a single outer iteration") {
    const Scenario sc = make_scenario(test::small_config(21));
    SolverConfig cfg = sc.cfg.solver;
    cfg.outer_tol = 1.0;
    const AoResult res = run_ao(sc.links[0], sc.cap, sc.p_max_w(), 1, sc.init_tx, sc.init_rx[0],
                                cfg);
    CHECK(res.iterations == 1);
    CHECK(res.converged);
    CHECK(res.trace.size() == 1);
}

TEST_CASE("fixed orientations reduce to a monotone WMMSE loop") {
    const Scenario sc = make_scenario(test::small_config(23));
    SolverConfig cfg = sc.cfg.solver;
    cfg.max_outer = 15;
    const AoResult res = run_ao(sc.links[0], sc.cap, sc.p_max_w(), 1, sc.init_tx, sc.init_rx[0],
                                cfg, OrientMode::kFrozen);
    REQUIRE(res.trace.size() >= 2);
    for (std::size_t i = 1; i < res.trace.size(); ++i) {
        CHECK(res.trace[i].surrogate_nats >= res.trace[i - 1].surrogate_nats - 1e-8);
    }
    // Orientations untouched.
    CHECK(arma::norm(arma::mat(res.ft - sc.init_tx), "fro") == 0.0);
    CHECK(arma::norm(arma::mat(res.fr - sc.init_rx[0]), "fro") == 0.0);
}

TEST_CASE("joint optimization converges on a seeded small scenario") {
    ScenarioConfig cfg_sc = test::small_config(25);
    cfg_sc.tx_x = 2;
    cfg_sc.tx_y = 2;
    cfg_sc.rx_x = 2;
    cfg_sc.rx_y = 1;
    cfg_sc.eve_x = 2;
    cfg_sc.eve_y = 1;
    cfg_sc.streams = 1;
    cfg_sc.solver.outer_tol = 1e-3;
    cfg_sc.solver.max_outer = 30;
    const Scenario sc = make_scenario(cfg_sc);

    std::vector<TraceRecord> sunk;
    const AoResult res =
        run_ao(sc.links[0], sc.cap, sc.p_max_w(), 1, sc.init_tx, sc.init_rx[0], cfg_sc.solver,
               OrientMode::kJoint, [&](const TraceRecord& r) { sunk.push_back(r); });
    CHECK(res.converged);
    CHECK(res.iterations <= 30);
    CHECK(res.secrecy_bits > 0.0);
    CHECK(sunk.size() == res.trace.size());
    for (std::size_t i = 1; i < res.trace.size(); ++i) {
        CHECK(res.trace[i].surrogate_nats >= res.trace[i - 1].surrogate_nats - 1e-8);
    }
    // Power budget honored at the solution.
    CHECK(res.bf.power() <= sc.p_max_w() * (1.0 + 1e-9));
    // Final orientations feasible.
    for (int n = 0; n < sc.n_tx(); ++n) CHECK(sc.cap.contains(Vec3(res.ft.col(n)), 1e-9));
    for (int m = 0; m < sc.n_rx(); ++m) CHECK(sc.cap.contains(Vec3(res.fr.col(m)), 1e-9));
}

TEST_CASE("re-running the beamformer update at convergence leaves F unchanged") {
    const Scenario sc = make_scenario(test::small_config(27));
    SolverConfig cfg = sc.cfg.solver;
    cfg.outer_tol = 1e-4;
    cfg.max_outer = 500;
    const AoResult res = run_ao(sc.links[0], sc.cap, sc.p_max_w(), 1, sc.init_tx, sc.init_rx[0],
                                cfg, OrientMode::kFrozen);
    REQUIRE(res.converged);
    const ChannelState st = sc.links[0].build(res.ft, res.fr);
    const double f0 =
        surrogate_F(res.aux, res.bf, st.H(), st.He(), sc.noise_rx_w(), sc.noise_eve_w());
    const auto upd =
        update_beamformers(res.aux, st.H(), st.He(), sc.p_max_w(), sc.noise_eve_w(), cfg);
    const double f1 =
        surrogate_F(res.aux, upd.bf, st.H(), st.He(), sc.noise_rx_w(), sc.noise_eve_w());
    CHECK(std::abs(f1 - f0) < 1e-8);
}

}  // TEST_SUITE
