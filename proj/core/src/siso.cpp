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

#include "rasec/siso.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rasec {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCollinearTol = 1e-9;  // on |sin(psi)|

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

double log2_rate(double snr) { return std::log2(1.0 + snr); }

void finish_planar_frame(SisoGeometry& g) {
    double dist = 0.0;
    g.u_tr = (g.r - g.t);
    dist = arma::norm(g.u_tr);
    if (!(dist > 0.0)) throw std::invalid_argument("SisoGeometry: receiver coincides with transmitter");
    g.u_tr /= dist;
    g.u_rt = -g.u_tr;
    g.u_te = (g.e - g.t);
    dist = arma::norm(g.u_te);
    if (!(dist > 0.0)) throw std::invalid_argument("SisoGeometry: eavesdropper coincides with transmitter");
    g.u_te /= dist;

    const double c = clamp_unit(arma::dot(g.u_tr, g.u_te));
    g.psi = std::acos(c);
    g.collinear = std::abs(std::sin(g.psi)) < kCollinearTol;
    g.v1 = g.u_tr;
    if (!g.collinear) {
        Vec3 v2 = g.u_te - c * g.u_tr;
        g.v2 = v2 / arma::norm(v2);
    } else {
        g.v2.zeros();
    }
}

}  // namespace

SisoGeometry make_siso_geometry(const Vec3& t, const Vec3& r, const Vec3& e, const Mat33& R_t,
                                const Mat33& R_r, double p_max_w, const RadioParams& params) {
    params.validate();
    SisoGeometry g;
    g.t = t;
    g.r = r;
    g.e = e;
    g.R_t = R_t;
    g.R_r = R_r;
    g.p = params.directivity;
    finish_planar_frame(g);

    const double r_tr = arma::norm(r - t);
    const double r_te = arma::norm(e - t);
    const double beta0 = params.beta0();
    const double g0 = params.boresight_gain();
    g.gamma_b = p_max_w * beta0 * g0 * g0 / (r_tr * r_tr) / params.noise_rx_w;
    g.gamma_e = p_max_w * beta0 * g0 / (r_te * r_te) / params.noise_eve_w;
    return g;
}

SisoGeometry make_siso_geometry_gamma(const Vec3& t, const Vec3& r, const Vec3& e,
                                      const Mat33& R_t, const Mat33& R_r, double p,
                                      double gamma_b, double gamma_e) {
    SisoGeometry g;
    g.t = t;
    g.r = r;
    g.e = e;
    g.R_t = R_t;
    g.R_r = R_r;
    g.p = p;
    g.gamma_b = gamma_b;
    g.gamma_e = gamma_e;
    finish_planar_frame(g);
    return g;
}

std::pair<Vec3, double> align_receive(const SisoGeometry& geom, const Cap& cap) {
    const Vec3 target = geom.R_r.t() * geom.u_rt;
    const Vec3 f_r = project_to_cap(target, cap);
    const double gain = directional_factor(arma::dot(geom.R_r * f_r, geom.u_rt), geom.p);
    return {f_r, gain};
}

std::vector<ThetaInterval> feasible_interval(const SisoGeometry& geom, const Cap& cap) {
    if (geom.collinear) throw std::invalid_argument("feasible_interval: collinear geometry");
    const Vec3 cap_axis_global = geom.R_t * z_axis();
    const double a = arma::dot(geom.v1, cap_axis_global);
    const double b = arma::dot(geom.v2, cap_axis_global);
    const double amp = std::hypot(a, b);

    std::vector<ThetaInterval> out;
    if (amp < cap.cos_z) return out;  // a cos - b sin never reaches cos(theta_max)

    // a cos(theta) - b sin(theta) = amp * cos(theta + phi0).
    const double phi0 = std::atan2(b, a);
    const double alpha = std::acos(clamp_unit(cap.cos_z / amp));
    const double hi_limit = kPi / 2.0;
    for (int k = -1; k <= 1; ++k) {
        const double lo = -phi0 - alpha + 2.0 * kPi * k;
        const double hi = -phi0 + alpha + 2.0 * kPi * k;
        const double clipped_lo = std::max(lo, 0.0);
        const double clipped_hi = std::min(hi, hi_limit);
        if (clipped_lo <= clipped_hi) out.push_back({clipped_lo, clipped_hi});
    }
    std::sort(out.begin(), out.end(),
              [](const ThetaInterval& x, const ThetaInterval& y) { return x.lo < y.lo; });
    // Merge touching pieces from adjacent periods.
    std::vector<ThetaInterval> merged;
    for (const auto& iv : out) {
        if (!merged.empty() && iv.lo <= merged.back().hi + 1e-12) {
            merged.back().hi = std::max(merged.back().hi, iv.hi);
        } else {
            merged.push_back(iv);
        }
    }
    return merged;
}

namespace {

struct PlanarObjective {
    const SisoGeometry& geom;
    double gamma_b_eff;

    double operator()(double theta) const {
        const double g_legit = directional_factor(std::cos(theta), geom.p);
        const double g_eve = directional_factor(std::cos(geom.psi + theta), geom.p);
        return log2_rate(gamma_b_eff * g_legit * g_legit) - log2_rate(geom.gamma_e * g_eve * g_eve);
    }
};

bool theta_in_intervals(double theta, const std::vector<ThetaInterval>& ivs, double tol = 1e-12) {
    for (const auto& iv : ivs) {
        if (theta >= iv.lo - tol && theta <= iv.hi + tol) return true;
    }
    return false;
}

}  // namespace

SisoSolution solve_siso(const SisoGeometry& geom, const Cap& cap, int grid_size) {
    if (grid_size < 2) throw std::invalid_argument("solve_siso: grid_size must be >= 2");

    SisoSolution sol;
    sol.collinear = geom.collinear;
    sol.theta0 = std::max(0.0, kPi / 2.0 - geom.psi);

    const auto [f_r, receive_gain] = align_receive(geom, cap);
    sol.f_r = f_r;
    sol.receive_gain = receive_gain;
    const double gamma_b_eff = geom.gamma_b * receive_gain * receive_gain;

    auto evaluate_orientation = [&](const Vec3& f_t_local) {
        const Vec3 f_global = geom.R_t * f_t_local;
        const double g_legit = directional_factor(arma::dot(f_global, geom.u_tr), geom.p);
        const double g_eve = directional_factor(arma::dot(f_global, geom.u_te), geom.p);
        const double j = log2_rate(gamma_b_eff * g_legit * g_legit) -
                         log2_rate(geom.gamma_e * g_eve * g_eve);
        sol.gain_legit = g_legit;
        sol.gain_eve = g_eve;
        sol.transmit = j > 0.0;
        sol.secrecy_bits = std::max(j, 0.0);
    };

    if (geom.collinear) {
        // psi = 0: both links share one direction, rotation cannot separate
        // them. psi = pi: aiming at the receiver nulls the eavesdropper.
        sol.f_t = project_to_cap(geom.R_t.t() * geom.u_tr, cap);
        sol.theta_star = 0.0;
        evaluate_orientation(sol.f_t);
        sol.theta0_feasible = false;
        return sol;
    }

    const PlanarObjective objective{geom, gamma_b_eff};
    const auto intervals = feasible_interval(geom, cap);
    sol.theta0_feasible = theta_in_intervals(sol.theta0, intervals);

    auto planar_orientation = [&](double theta) {
        return Vec3(std::cos(theta) * geom.v1 - std::sin(theta) * geom.v2);
    };

    if (intervals.empty()) {
        // The cap never meets the plane's constraint arc: search the
        // unconstrained planar optimum and project it back onto the cap.
        sol.planar_fallback = true;
        double best_theta = 0.0;
        double best_j = -std::numeric_limits<double>::infinity();
        sol.landscape.reserve(static_cast<std::size_t>(grid_size) + 1);
        for (int i = 0; i <= grid_size; ++i) {
            const double theta = (kPi / 2.0) * i / grid_size;
            const double j = objective(theta);
            sol.landscape.emplace_back(theta, j);
            if (j > best_j) {
                best_j = j;
                best_theta = theta;
            }
        }
        if (objective(sol.theta0) > best_j) best_theta = sol.theta0;
        sol.theta_star = best_theta;
        sol.f_t = project_to_cap(geom.R_t.t() * planar_orientation(best_theta), cap);
        evaluate_orientation(sol.f_t);
        return sol;
    }

    double total = 0.0;
    for (const auto& iv : intervals) total += iv.hi - iv.lo;

    std::vector<double> candidates;
    candidates.reserve(static_cast<std::size_t>(grid_size) + 8);
    for (const auto& iv : intervals) {
        candidates.push_back(iv.lo);
        candidates.push_back(iv.hi);
        const int points = total > 0.0
                               ? std::max(2, static_cast<int>(grid_size * (iv.hi - iv.lo) / total))
                               : 2;
        for (int i = 1; i < points; ++i) {
            candidates.push_back(iv.lo + (iv.hi - iv.lo) * i / points);
        }
    }
    if (theta_in_intervals(0.0, intervals)) candidates.push_back(0.0);
    if (sol.theta0_feasible) candidates.push_back(sol.theta0);
    std::sort(candidates.begin(), candidates.end());

    double best_theta = candidates.front();
    double best_j = -std::numeric_limits<double>::infinity();
    sol.landscape.reserve(candidates.size());
    for (const double theta : candidates) {
        const double j = objective(theta);
        sol.landscape.emplace_back(theta, j);
        if (j > best_j + 1e-15) {
            best_j = j;
            best_theta = theta;
        }
    }

    sol.theta_star = best_theta;
    sol.f_t = geom.R_t.t() * planar_orientation(best_theta);
    evaluate_orientation(sol.f_t);
    return sol;
}

}  // namespace rasec
