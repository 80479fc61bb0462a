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

#include "rasec/siso.hpp"
#include "testutil.hpp"

using namespace rasec;
constexpr double kPi = std::numbers::pi;

namespace {

// Geometry with a prescribed separation angle psi between the receiver and
// eavesdropper directions as seen from the transmitter.
SisoGeometry psi_geometry(double psi, double gamma_b, double gamma_e, double p = 1.0,
                          const Mat33& R_t = Mat33(arma::fill::eye),
                          const Mat33& R_r = Mat33(arma::fill::eye)) {
    const Vec3 t{0, 0, 0};
    const Vec3 u_tr{0, 0, 1};
    const Vec3 u_te{std::sin(psi), 0.0, std::cos(psi)};
    return make_siso_geometry_gamma(t, Vec3(25.0 * u_tr), Vec3(30.0 * u_te), R_t, R_r, p,
                                    gamma_b, gamma_e);
}

}  // namespace

TEST_SUITE("siso") {

TEST_CASE("receive alignment is exact when the cap admits the LoS direction") {
    const auto geom = psi_geometry(kPi / 3.0, 100.0, 10.0);
    const Cap cap(kPi / 2.0);
    const auto [f_r, gain] = align_receive(geom, cap);
    CHECK(arma::norm(Vec3(f_r - geom.u_rt)) < 1e-12);
    CHECK(gain == doctest::Approx(1.0));
}

TEST_CASE("receive alignment saturates at the cap rim with a cosine gain loss") {
    // u_rt sits delta beyond the cap edge.
    const double theta_max = kPi / 6.0;
    const double delta = 0.2;
    const Vec3 t{0, 0, 0};
    const Vec3 r{0, 0, 20};
    // Tilt the receiver posture so the arrival direction has zenith angle
    // theta_max + delta in the local frame.
    const Vec3 arrival_local{std::sin(theta_max + delta), 0.0, std::cos(theta_max + delta)};
    const Mat33 R_r = rotation_from_z_to(arma::normalise(Vec3(t - r))) *
                      rotation_from_z_to(arrival_local).t();
    const auto geom = make_siso_geometry_gamma(t, r, Vec3{10, 0, 0}, Mat33(arma::fill::eye), R_r,
                                               2.0, 50.0, 5.0);
    const Cap cap(theta_max);
    const auto [f_r, gain] = align_receive(geom, cap);
    CHECK(cap.contains(f_r, 1e-9));
    CHECK(gain == doctest::Approx(std::pow(std::cos(delta), 2.0)).epsilon(1e-9));
}

TEST_CASE("p = 0 receive gain is one regardless of the cap") {
    const auto geom = psi_geometry(kPi / 4.0, 10.0, 1.0, 0.0);
    const auto [f_r, gain] = align_receive(geom, Cap(0.05));
    CHECK(gain == 1.0);
}

TEST_CASE("feasible interval with the cap axis on the receiver direction") {
    const auto geom = psi_geometry(kPi / 3.0, 100.0, 10.0);
    // R_t = I and u_tr = e_z, so a = 1, b = 0: cos(theta) >= cos(theta_max).
    const auto ivs = feasible_interval(geom, Cap(kPi / 4.0));
    REQUIRE(ivs.size() == 1);
    CHECK(ivs[0].lo == doctest::Approx(0.0));
    CHECK(ivs[0].hi == doctest::Approx(kPi / 4.0).epsilon(1e-12));

    const auto all = feasible_interval(geom, Cap(kPi / 2.0));
    REQUIRE(all.size() == 1);
    CHECK(all[0].lo == doctest::Approx(0.0));
    CHECK(all[0].hi == doctest::Approx(kPi / 2.0).epsilon(1e-12));
}

TEST_CASE("feasible interval is empty when the harmonic bound cannot be met") {
    // Posture chosen so a = 0, b = 1: -sin(theta) >= cos(theta_max) fails on
    // [0, pi/2] for theta_max = pi/3.
    const double psi = kPi / 3.0;
    const Vec3 u_tr{0, 0, 1};
    const Vec3 u_te{std::sin(psi), 0.0, std::cos(psi)};
    // v2 = normalized(u_te - cos(psi) u_tr) = +x. Choose R_t mapping e_z to v2.
    const Mat33 R_t = rotation_from_z_to(Vec3{1, 0, 0});
    const auto geom = make_siso_geometry_gamma(Vec3{0, 0, 0}, Vec3(25.0 * u_tr),
                                               Vec3(30.0 * u_te), R_t, Mat33(arma::fill::eye),
                                               1.0, 100.0, 10.0);
    CHECK(feasible_interval(geom, Cap(kPi / 3.0)).empty());
}

TEST_CASE("orthogonal eavesdropper needs no rotation") {
    const auto geom = psi_geometry(kPi / 2.0, 64.0, 1e6);
    const auto sol = solve_siso(geom, Cap(kPi / 2.0));
    CHECK(sol.theta_star == doctest::Approx(0.0));
    CHECK(sol.gain_eve == 0.0);
    CHECK(sol.secrecy_bits == doctest::Approx(std::log2(1.0 + 64.0)).epsilon(1e-12));
}

TEST_CASE("huge eavesdropper SNR drives the solution to the nulling angle") {
    const double gamma_b = 200.0;
    const auto geom = psi_geometry(kPi / 3.0, gamma_b, 1e9);
    const auto sol = solve_siso(geom, Cap(kPi / 2.0));
    CHECK(sol.theta0 == doctest::Approx(kPi / 6.0).epsilon(1e-12));
    CHECK(sol.theta_star == doctest::Approx(kPi / 6.0).epsilon(1e-12));
    CHECK(sol.gain_eve == 0.0);
    // cos^2(pi/6) = 3/4.
    CHECK(sol.secrecy_bits ==
          doctest::Approx(std::log2(1.0 + 0.75 * gamma_b)).epsilon(1e-9));
}

TEST_CASE("collinear directions with unfavorable ordering shut the link down") {
    const auto geom = psi_geometry(0.0, 5.0, 50.0);
    const auto sol = solve_siso(geom, Cap(kPi / 3.0));
    CHECK(sol.collinear);
    CHECK_FALSE(sol.transmit);
    CHECK(sol.secrecy_bits == 0.0);
}

TEST_CASE("collinear directions with favorable ordering transmit at full gain") {
    const auto geom = psi_geometry(0.0, 50.0, 5.0);
    const auto sol = solve_siso(geom, Cap(kPi / 2.0));
    CHECK(sol.collinear);
    CHECK(sol.transmit);
    CHECK(sol.secrecy_bits ==
          doctest::Approx(std::log2(51.0) - std::log2(6.0)).epsilon(1e-12));
}

TEST_CASE("opposite directions null the eavesdropper automatically") {
    const auto geom = psi_geometry(kPi, 80.0, 1e5);
    const auto sol = solve_siso(geom, Cap(kPi / 2.0));
    CHECK(sol.collinear);
    CHECK(sol.gain_eve == 0.0);
    CHECK(sol.secrecy_bits == doctest::Approx(std::log2(81.0)).epsilon(1e-12));
}

TEST_CASE("the leakage-nulling rate lower-bounds the search result") {
    CounterRng rng(3, Stream::kTest);
    for (int trial = 0; trial < 30; ++trial) {
        const double psi = rng.uniform(0.05, kPi - 0.05);
        const double p = 1.0 + (rng.next_u64() % 3);
        const auto geom = psi_geometry(psi, rng.uniform(1.0, 300.0), rng.uniform(1.0, 3000.0), p);
        const Cap cap(kPi / 2.0);
        const auto sol = solve_siso(geom, cap);
        if (!sol.theta0_feasible) continue;
        const double ln_rate =
            std::log2(1.0 + geom.gamma_b * std::pow(std::cos(sol.theta0), 2.0 * p));
        CHECK(sol.secrecy_bits >= ln_rate - 1e-9);
    }
}

TEST_CASE("rotation converts an unfavorable fixed-boresight channel into positive secrecy") {
    // At theta = 0 the eavesdropper dominates, but the nulling angle is
    // feasible and strictly inside (0, pi/2).
    const double psi = kPi / 3.0;
    const double gamma_b = 4.0, gamma_e = 40.0;
    const auto geom = psi_geometry(psi, gamma_b, gamma_e);
    // Fixed boresight at theta = 0: J(0) < 0.
    const double j0 = std::log2(1.0 + gamma_b) -
                      std::log2(1.0 + gamma_e * std::pow(std::cos(psi), 2.0));
    CHECK(j0 < 0.0);
    const auto sol = solve_siso(geom, Cap(kPi / 2.0));
    CHECK(sol.transmit);
    CHECK(sol.secrecy_bits > 0.0);
}

TEST_CASE("planar search is not beaten by a dense sphere grid") {
    CounterRng rng(7, Stream::kTest);
    const Cap cap(kPi / 2.0);
    constexpr int kDirs = 100000;
    // Fibonacci sphere covering the upper hemisphere (the cap).
    arma::mat dirs(3, kDirs);
    const double golden = 0.5 * (1.0 + std::sqrt(5.0));
    for (int i = 0; i < kDirs; ++i) {
        const double frac_arg = i / (golden * golden);
        const double z = 1.0 - (i + 0.5) / kDirs;  // upper hemisphere
        const double th = std::acos(z);
        const double ph = 2.0 * kPi * (frac_arg - std::floor(frac_arg));
        dirs.col(i) = Vec3{std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), z};
    }
    for (int trial = 0; trial < 20; ++trial) {
        const double psi = rng.uniform(0.1, kPi - 0.1);
        const double p = 1.0 + (rng.next_u64() % 2);
        const auto geom = psi_geometry(psi, rng.uniform(5.0, 500.0), rng.uniform(5.0, 5000.0), p);
        const auto sol = solve_siso(geom, cap);

        const double gain_r = sol.receive_gain;
        double best = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < kDirs; ++i) {
            const Vec3 f(dirs.col(i));
            const double gl = directional_factor(arma::dot(f, geom.u_tr), p);
            const double ge = directional_factor(arma::dot(f, geom.u_te), p);
            const double j = std::log2(1.0 + geom.gamma_b * gain_r * gain_r * gl * gl) -
                             std::log2(1.0 + geom.gamma_e * ge * ge);
            best = std::max(best, j);
        }
        CHECK(sol.secrecy_bits >= best - 1e-3);
    }
}

TEST_CASE("grid refinement has converged at the default resolution") {
    const auto geom = psi_geometry(0.9, 120.0, 800.0, 2.0);
    const Cap cap(kPi / 3.0);
    const auto coarse = solve_siso(geom, cap, 1 << 14);
    const auto fine = solve_siso(geom, cap, 1 << 15);
    CHECK(std::abs(coarse.secrecy_bits - fine.secrecy_bits) < 1e-6);
}

TEST_CASE("empty feasible interval falls back to the projected planar optimum") {
    const double psi = kPi / 3.0;
    const Vec3 u_tr{0, 0, 1};
    const Vec3 u_te{std::sin(psi), 0.0, std::cos(psi)};
    const Mat33 R_t = rotation_from_z_to(Vec3{1, 0, 0});
    const auto geom = make_siso_geometry_gamma(Vec3{0, 0, 0}, Vec3(25.0 * u_tr),
                                               Vec3(30.0 * u_te), R_t, Mat33(arma::fill::eye),
                                               1.0, 100.0, 10.0);
    const Cap cap(kPi / 3.0);
    const auto sol = solve_siso(geom, cap);
    CHECK(sol.planar_fallback);
    CHECK(cap.contains(sol.f_t, 1e-9));
}

TEST_CASE("physical gamma factors follow the link budget") {
    RadioParams radio;
    radio.wavelength = 0.0857;
    radio.directivity = 1.0;
    radio.noise_rx_w = 1e-11;
    radio.noise_eve_w = 1e-11;
    const double p_max = 0.1;
    const Vec3 t{0, 0, 0}, r{0, 0, 30}, e{20, 0, 10};
    const auto geom = make_siso_geometry(t, r, e, Mat33(arma::fill::eye), Mat33(arma::fill::eye),
                                         p_max, radio);
    const double beta0 = radio.beta0();
    CHECK(geom.gamma_b ==
          doctest::Approx(p_max * beta0 * 36.0 / 900.0 / 1e-11).epsilon(1e-12));
    const double r_te2 = 400.0 + 100.0;
    CHECK(geom.gamma_e == doctest::Approx(p_max * beta0 * 6.0 / r_te2 / 1e-11).epsilon(1e-12));
}

}  // TEST_SUITE
