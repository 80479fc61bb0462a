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

#include "rasec/rate.hpp"
#include "testutil.hpp"

using namespace rasec;

namespace {

// Eigenvalue-route log-det oracle, deliberately independent of the
// Cholesky-based implementation path.
double rate_oracle(const arma::cx_mat& h, const BeamformState& bf, double noise) {
    const arma::uword m = h.n_rows;
    const arma::cx_mat hw = h * bf.W;
    const arma::cx_mat hwe = h * bf.We;
    const arma::cx_mat sigma = hwe * hwe.t() + noise * linalg::complex_eye(m);
    const arma::cx_mat arg =
        linalg::complex_eye(m) + hw * hw.t() * arma::inv(sigma);
    const arma::cx_double det = arma::det(arg);
    return std::log2(std::abs(det));
}

}  // namespace

TEST_SUITE("rate") {

TEST_CASE("zero precoder gives zero secrecy rate") {
    CounterRng rng(3, Stream::kTest);
    auto inst = test::random_instance(rng, 3, 2, 2, 1);
    inst.bf.W.zeros();
    CHECK(secrecy_rate(inst.h, inst.he, inst.bf, inst.noise_rx, inst.noise_eve) == 0.0);
}

TEST_CASE("blocked eavesdropper reduces to the point-to-point log rate") {
    const double p = 0.05, h_abs = 2e-3, noise = 1e-9;
    BeamformState bf{arma::cx_mat(1, 1, arma::fill::value(cx_double{std::sqrt(p), 0.0})),
                     arma::cx_mat(1, 1, arma::fill::zeros)};
    arma::cx_mat h(1, 1, arma::fill::value(cx_double{h_abs, 0.0}));
    arma::cx_mat he(1, 1, arma::fill::zeros);
    const double expected = std::log2(1.0 + p * h_abs * h_abs / noise);
    CHECK(secrecy_rate(h, he, bf, noise, noise) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("cholesky log-det path agrees with an eigen-route oracle") {
    CounterRng rng(5, Stream::kTest);
    for (int trial = 0; trial < 40; ++trial) {
        const auto inst = test::random_instance(rng, 2, 2, 2, 1);
        const double direct = rate_legit(inst.h, inst.bf, inst.noise_rx) -
                              rate_eave(inst.he, inst.bf, inst.noise_eve);
        const double oracle =
            rate_oracle(inst.h, inst.bf, inst.noise_rx) - rate_oracle(inst.he, inst.bf, inst.noise_eve);
        CHECK(direct == doctest::Approx(oracle).epsilon(1e-8));
    }
}

TEST_CASE("zero beamformers produce identity auxiliaries") {
    arma::cx_mat h(3, 4, arma::fill::ones);
    arma::cx_mat he(2, 4, arma::fill::ones);
    BeamformState bf{arma::cx_mat(4, 2, arma::fill::zeros), arma::cx_mat(4, 4, arma::fill::zeros)};
    const AuxState aux = update_auxiliaries(h, he, bf, 1e-9, 1e-9);
    CHECK(arma::norm(aux.U, "fro") == 0.0);
    CHECK(arma::norm(arma::cx_mat(aux.Omega - linalg::complex_eye(2)), "fro") < 1e-12);
    CHECK(arma::norm(arma::cx_mat(aux.Omega_e - linalg::complex_eye(4)), "fro") < 1e-12);
    CHECK(arma::norm(arma::cx_mat(aux.Omega_x - linalg::complex_eye(2)), "fro") < 1e-12);
}

TEST_CASE("scalar receive filter and MSE match hand algebra") {
    const double h_val = 1.5, w_val = 0.4, noise = 0.01;
    arma::cx_mat h(1, 1, arma::fill::value(cx_double{h_val, 0.0}));
    arma::cx_mat he(1, 1, arma::fill::value(cx_double{0.2, 0.0}));
    BeamformState bf{arma::cx_mat(1, 1, arma::fill::value(cx_double{w_val, 0.0})),
                     arma::cx_mat(1, 1, arma::fill::zeros)};
    const AuxState aux = update_auxiliaries(h, he, bf, noise, noise);
    const double denom = h_val * h_val * w_val * w_val + noise;
    CHECK(std::real(aux.U(0, 0)) == doctest::Approx(h_val * w_val / denom).epsilon(1e-12));
    const arma::cx_mat e = mse_matrix(h, bf, aux.U, noise);
    CHECK(std::real(e(0, 0)) == doctest::Approx(noise / denom).epsilon(1e-12));
}

TEST_CASE("surrogate equals the unclamped rate difference at optimal auxiliaries") {
    CounterRng rng(7, Stream::kTest);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_u64() % 7);   // N <= 8
        const int m = 2 + static_cast<int>(rng.next_u64() % 3);   // M <= 4
        const int q = 2 + static_cast<int>(rng.next_u64() % 3);   // Q <= 4
        const int d = 1 + static_cast<int>(rng.next_u64() % 2);   // d <= 2
        const auto inst = test::random_instance(rng, n, m, q, std::min({d, m, n}));
        const AuxState aux =
            update_auxiliaries(inst.h, inst.he, inst.bf, inst.noise_rx, inst.noise_eve);
        const double f = surrogate_F(aux, inst.bf, inst.h, inst.he, inst.noise_rx, inst.noise_eve);
        const double direct = rate_legit(inst.h, inst.bf, inst.noise_rx) -
                              rate_eave(inst.he, inst.bf, inst.noise_eve);
        worst = std::max(worst, std::abs(f / std::log(2.0) - direct));
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("identity weights reduce the surrogate to trace form") {
    CounterRng rng(11, Stream::kTest);
    const auto inst = test::random_instance(rng, 3, 2, 2, 2);
    AuxState aux = update_auxiliaries(inst.h, inst.he, inst.bf, inst.noise_rx, inst.noise_eve);
    aux.Omega = linalg::complex_eye(2);
    aux.Omega_e = linalg::complex_eye(3);
    aux.Omega_x = linalg::complex_eye(2);
    const arma::cx_mat e = mse_matrix(inst.h, inst.bf, aux.U, inst.noise_rx);
    const arma::cx_mat ee = mse_matrix_an(inst.he, inst.bf.We, aux.Ue, inst.noise_eve);
    const arma::cx_mat ex = mse_matrix_leak(inst.he, inst.bf, inst.noise_eve);
    const double expected = -std::real(arma::trace(e)) + 2.0 - std::real(arma::trace(ee)) + 3.0 -
                            std::real(arma::trace(ex)) + 2.0;
    const double f = surrogate_F(aux, inst.bf, inst.h, inst.he, inst.noise_rx, inst.noise_eve);
    CHECK(f == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("auxiliary block update never decreases the surrogate") {
    CounterRng rng(13, Stream::kTest);
    for (int trial = 0; trial < 30; ++trial) {
        const auto inst = test::random_instance(rng, 4, 3, 2, 2);
        // Suboptimal starting auxiliaries from a perturbed beamformer.
        auto warm = inst;
        warm.bf.W *= 0.5;
        const AuxState aux0 =
            update_auxiliaries(warm.h, warm.he, warm.bf, warm.noise_rx, warm.noise_eve);
        const double f0 = surrogate_F(aux0, inst.bf, inst.h, inst.he, inst.noise_rx, inst.noise_eve);
        const AuxState aux1 =
            update_auxiliaries(inst.h, inst.he, inst.bf, inst.noise_rx, inst.noise_eve);
        const double f1 = surrogate_F(aux1, inst.bf, inst.h, inst.he, inst.noise_rx, inst.noise_eve);
        CHECK(f1 >= f0 - 1e-10);
    }
}

TEST_CASE("auxiliary weights are Hermitian") {
    CounterRng rng(17, Stream::kTest);
    for (int trial = 0; trial < 20; ++trial) {
        const auto inst = test::random_instance(rng, 4, 3, 3, 2);
        const AuxState aux =
            update_auxiliaries(inst.h, inst.he, inst.bf, inst.noise_rx, inst.noise_eve);
        CHECK(arma::norm(arma::cx_mat(aux.Omega - aux.Omega.t()), "fro") < 1e-10);
        CHECK(arma::norm(arma::cx_mat(aux.Omega_e - aux.Omega_e.t()), "fro") < 1e-10);
        CHECK(arma::norm(arma::cx_mat(aux.Omega_x - aux.Omega_x.t()), "fro") < 1e-10);
        // And positive definite: all eigenvalues above -1e-10.
        CHECK(arma::eig_sym(arma::cx_mat(0.5 * (aux.Omega + aux.Omega.t()))).min() > -1e-10);
    }
}

TEST_CASE("the log-det maximizer of the weighted MSE bound is the inverse") {
    // max_W -Tr(W E) + ln det W + N is attained at W = E^{-1}: check by
    // projected gradient ascent over Hermitian positive definite W.
    CounterRng rng(19, Stream::kTest);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_u64() % 3);
        const arma::cx_mat g = test::random_cx(rng, n, n);
        const arma::cx_mat e = g * g.t() + 0.5 * linalg::complex_eye(n);
        arma::cx_mat w = linalg::complex_eye(n);
        const auto value = [&](const arma::cx_mat& x) {
            return -std::real(arma::trace(x * e)) + linalg::logdet_hpd(x) + n;
        };
        double cur = value(w);
        for (int it = 0; it < 4000; ++it) {
            const arma::cx_mat grad = -e + arma::inv_sympd(w);  // d/dW* of the objective
            double step = 0.5;
            bool moved = false;
            while (step > 1e-14) {
                arma::cx_mat cand = w + step * grad;
                cand = 0.5 * (cand + cand.t());
                if (arma::eig_sym(cand).min() > 1e-12) {
                    const double v = value(cand);
                    if (v > cur) {
                        w = cand;
                        cur = v;
                        moved = true;
                        break;
                    }
                }
                step *= 0.5;
            }
            if (!moved) break;
        }
        const arma::cx_mat expected = arma::inv_sympd(e);
        CHECK(arma::norm(arma::cx_mat(w - expected), "fro") /
                  arma::norm(expected, "fro") < 1e-6);
    }
}

TEST_CASE("non-finite channels are rejected") {
    arma::cx_mat h(2, 2, arma::fill::ones);
    h(0, 0) = cx_double{std::numeric_limits<double>::quiet_NaN(), 0.0};
    const BeamformState bf{arma::cx_mat(2, 1, arma::fill::ones),
                           arma::cx_mat(2, 2, arma::fill::zeros)};
    CHECK_THROWS(rate_legit(h, bf, 1e-9));
}

}  // TEST_SUITE
