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

#include <numbers>

#include "rasec/orient_opt.hpp"
#include "rasec/siso.hpp"
#include "testutil.hpp"

using namespace rasec;
constexpr double kPi = std::numbers::pi;

namespace {

struct Fixture {
    Scenario sc;
    ChannelState state;
    BeamformState bf;
    AuxState aux;
    OrientObjective obj;
};

Fixture make_fixture(std::uint64_t seed, double p = 1.0, int clusters = 2) {
    ScenarioConfig cfg = test::fd_config(seed, clusters);
    cfg.directivity = p;
    Scenario sc = make_scenario(cfg);
    CounterRng rng(seed + 1000, Stream::kTest);
    ChannelState state = test::interior_state(sc, rng);
    BeamformState bf = test::random_bf(rng, sc.n_tx(), 1, sc.p_max_w());
    AuxState aux = update_auxiliaries(state.H(), state.He(), bf, sc.noise_rx_w(), sc.noise_eve_w());
    OrientObjective obj = make_orient_objective(aux, bf, sc.noise_eve_w());
    return {std::move(sc), std::move(state), std::move(bf), std::move(aux), std::move(obj)};
}

}  // namespace

TEST_SUITE("orient_opt") {

TEST_CASE("loss vanishes when every coefficient matrix is zero") {
    auto fx = make_fixture(1);
    OrientObjective zero = fx.obj;
    zero.Wx.zeros();
    zero.WeWe.zeros();
    zero.C.zeros();
    zero.Cx.zeros();
    zero.Ce.zeros();
    zero.D.zeros();
    zero.De.zeros();
    CHECK(orient_loss(zero, fx.state.H(), fx.state.He()) == 0.0);
}

TEST_CASE("dead channels give zero loss") {
    auto fx = make_fixture(2);
    const arma::cx_mat h0(fx.state.H().n_rows, fx.state.H().n_cols, arma::fill::zeros);
    const arma::cx_mat he0(fx.state.He().n_rows, fx.state.He().n_cols, arma::fill::zeros);
    CHECK(orient_loss(fx.obj, h0, he0) == 0.0);
}

TEST_CASE("surrogate plus loss is constant across orientations") {
    auto fx = make_fixture(3);
    CounterRng rng(33, Stream::kTest);
    double reference = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        arma::mat ft(3, fx.sc.n_tx()), fr(3, fx.sc.n_rx());
        for (int n = 0; n < fx.sc.n_tx(); ++n) {
            ft.col(n) = cap_point_from_uniforms(fx.sc.cap, rng.next_unit(), rng.next_unit());
        }
        for (int m = 0; m < fx.sc.n_rx(); ++m) {
            fr.col(m) = cap_point_from_uniforms(fx.sc.cap, rng.next_unit(), rng.next_unit());
        }
        const ChannelState st = fx.sc.links[0].build(ft, fr);
        const double f = surrogate_F(fx.aux, fx.bf, st.H(), st.He(), fx.sc.noise_rx_w(),
                                     fx.sc.noise_eve_w());
        const double l = orient_loss(fx.obj, st.H(), st.He());
        if (trial == 0) {
            reference = f + l;
        } else {
            CHECK(f + l == doctest::Approx(reference).epsilon(1e-8));
        }
    }
}

TEST_CASE("euclidean gradients match central finite differences") {
    double worst = 0.0;
    int points = 0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto fx = make_fixture(seed, seed % 2 == 0 ? 2.0 : 1.0);
        CounterRng rng(seed * 7, Stream::kTest);
        const double h = 1e-6;
        for (int rep = 0; rep < 10; ++rep) {
            const int n = static_cast<int>(rng.next_u64() % fx.sc.n_tx());
            const int m = static_cast<int>(rng.next_u64() % fx.sc.n_rx());

            const Vec3 g_tx = orient_grad_tx(fx.obj, fx.state, n);
            const Vec3 g_rx = orient_grad_rx(fx.obj, fx.state, m);

            Vec3 fd_tx, fd_rx;
            const Vec3 ft0(fx.state.tx_orientations().col(n));
            for (int i = 0; i < 3; ++i) {
                Vec3 fp = ft0, fm = ft0;
                fp(i) += h;
                fm(i) -= h;
                fx.state.set_tx_orientation(n, fp);
                const double lp = orient_loss(fx.obj, fx.state.H(), fx.state.He());
                fx.state.set_tx_orientation(n, fm);
                const double lm = orient_loss(fx.obj, fx.state.H(), fx.state.He());
                fd_tx(i) = (lp - lm) / (2.0 * h);
            }
            fx.state.set_tx_orientation(n, ft0);
            const Vec3 fr0(fx.state.rx_orientations().col(m));
            for (int i = 0; i < 3; ++i) {
                Vec3 fp = fr0, fm = fr0;
                fp(i) += h;
                fm(i) -= h;
                fx.state.set_rx_orientation(m, fp);
                const double lp = orient_loss(fx.obj, fx.state.H(), fx.state.He());
                fx.state.set_rx_orientation(m, fm);
                const double lm = orient_loss(fx.obj, fx.state.H(), fx.state.He());
                fd_rx(i) = (lp - lm) / (2.0 * h);
            }
            fx.state.set_rx_orientation(m, fr0);

            const auto rel = [](const Vec3& a, const Vec3& b) {
                const double na = arma::norm(a);
                return na > 1e-300 ? arma::norm(Vec3(a - b)) / na : arma::norm(b);
            };
            worst = std::max({worst, rel(g_tx, fd_tx), rel(g_rx, fd_rx)});
            ++points;
        }
    }
    CHECK(points == 50);
    CHECK(worst < 1e-4);
}

TEST_CASE("isotropic elements have exactly zero orientation gradients") {
    auto fx = make_fixture(6, 0.0);
    for (int n = 0; n < fx.sc.n_tx(); ++n) {
        CHECK(arma::norm(orient_grad_tx(fx.obj, fx.state, n)) == 0.0);
    }
    for (int m = 0; m < fx.sc.n_rx(); ++m) {
        CHECK(arma::norm(orient_grad_rx(fx.obj, fx.state, m)) == 0.0);
    }
    const double before = orient_loss(fx.obj, fx.state.H(), fx.state.He());
    const FwStats stats = optimize_orientations(fx.obj, fx.state, fx.sc.cap, fx.sc.cfg.solver);
    CHECK(stats.final_loss == before);
    CHECK(stats.converged);
}

TEST_CASE("single LoS link transmit gradient is collinear with the rotated direction") {
    RadioParams radio;
    radio.directivity = 1.0;
    const Mat33 rot = rotation_from_z_to(arma::normalise(Vec3{0.3, -0.2, 0.93}));
    const ArrayLayout tx(1, 1, 0.04, Vec3{0, 0, 0}, rot);
    const ArrayLayout rx(1, 1, 0.04, Vec3{6.0, 2.0, 25.0}, Mat33(arma::fill::eye));
    const ArrayLayout eve(1, 1, 0.04, Vec3{-10.0, 4.0, 18.0}, Mat33(arma::fill::eye));
    const ChannelModel model(tx, rx, eve, {}, radio);
    arma::mat ft(3, 1), fr(3, 1);
    ft.col(0) = arma::normalise(Vec3{0.1, 0.1, 1.0});
    fr.col(0) = Vec3{0, 0, -1};
    const ChannelState st = model.build(ft, fr);

    OrientObjective obj;
    obj.Wx = linalg::complex_eye(1);
    obj.WeWe.zeros(1, 1);
    obj.C = linalg::complex_eye(1);
    obj.Cx = arma::cx_mat(1, 1, arma::fill::zeros);
    obj.Ce = arma::cx_mat(1, 1, arma::fill::zeros);
    obj.D = arma::cx_mat(1, 1, arma::fill::zeros);
    obj.De = arma::cx_mat(1, 1, arma::fill::zeros);

    const Vec3 grad = orient_grad_tx(obj, st, 0);
    const Vec3 axis = rot.t() * arma::normalise(Vec3{6.0, 2.0, 25.0});
    const double cross = arma::norm(arma::cross(arma::normalise(grad), axis));
    CHECK(cross < 1e-12);
}

TEST_CASE("frank-wolfe sweeps never increase the loss and stay feasible") {
    for (std::uint64_t seed = 11; seed <= 13; ++seed) {
        auto fx = make_fixture(seed);
        SolverConfig cfg = fx.sc.cfg.solver;
        cfg.fw_max_iters = 25;
        const FwStats stats = optimize_orientations(fx.obj, fx.state, fx.sc.cap, cfg);
        CHECK(stats.final_loss <= stats.initial_loss + 1e-10);
        for (int n = 0; n < fx.sc.n_tx(); ++n) {
            CHECK(fx.sc.cap.contains(Vec3(fx.state.tx_orientations().col(n)), 1e-9));
        }
        for (int m = 0; m < fx.sc.n_rx(); ++m) {
            CHECK(fx.sc.cap.contains(Vec3(fx.state.rx_orientations().col(m)), 1e-9));
        }
        // Incremental bookkeeping agrees with a from-scratch loss evaluation.
        const double direct = orient_loss(fx.obj, fx.state.H(), fx.state.He());
        CHECK(stats.final_loss == doctest::Approx(direct).epsilon(1e-10));
    }
}

TEST_CASE("transmit-only mode leaves receive orientations untouched") {
    auto fx = make_fixture(17);
    const arma::mat fr_before = fx.state.rx_orientations();
    optimize_orientations(fx.obj, fx.state, fx.sc.cap, fx.sc.cfg.solver, true, false);
    CHECK(arma::norm(arma::mat(fx.state.rx_orientations() - fr_before), "fro") == 0.0);
}

TEST_CASE("maximizing F and minimizing L pick the same single-antenna orientation") {
    // One transmit antenna scanned over a dense cap grid: the argmin of L
    // and the argmax of F must land on the same grid cell.
    ScenarioConfig cfg = test::small_config(19, 1);
    cfg.tx_x = 1;
    cfg.tx_y = 1;
    cfg.rx_x = 1;
    cfg.rx_y = 1;
    cfg.eve_x = 1;
    cfg.eve_y = 1;
    cfg.streams = 1;
    const Scenario sc = make_scenario(cfg);
    CounterRng rng(19, Stream::kTest);
    ChannelState state = sc.links[0].build(sc.init_tx, sc.init_rx[0]);
    const BeamformState bf = test::random_bf(rng, 1, 1, sc.p_max_w());
    const AuxState aux =
        update_auxiliaries(state.H(), state.He(), bf, sc.noise_rx_w(), sc.noise_eve_w());
    const OrientObjective obj = make_orient_objective(aux, bf, sc.noise_eve_w());

    double best_l = std::numeric_limits<double>::infinity();
    double best_f = -std::numeric_limits<double>::infinity();
    int argmin_l = -1, argmax_f = -1;
    int cell = 0;
    for (int iz = 0; iz <= 90; iz += 3) {
        const double zen = sc.cap.theta_max * iz / 90.0;
        for (int ia = 0; ia < 360; ia += 4) {
            const double azi = 2.0 * kPi * ia / 360.0;
            const Vec3 f{std::sin(zen) * std::cos(azi), std::sin(zen) * std::sin(azi),
                         std::cos(zen)};
            state.set_tx_orientation(0, f);
            const double l = orient_loss(obj, state.H(), state.He());
            const double fval = surrogate_F(aux, bf, state.H(), state.He(), sc.noise_rx_w(),
                                            sc.noise_eve_w());
            if (l < best_l) {
                best_l = l;
                argmin_l = cell;
            }
            if (fval > best_f) {
                best_f = fval;
                argmax_f = cell;
            }
            ++cell;
        }
    }
    CHECK(argmin_l == argmax_f);
}

}  // TEST_SUITE
