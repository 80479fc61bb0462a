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

#include "rasec/rate.hpp"

#include <cmath>

namespace rasec {

namespace {

void check_finite(const arma::cx_mat& m, const char* what) {
    if (!m.is_finite()) throw std::invalid_argument(std::string(what) + ": non-finite entries");
}

arma::cx_mat hermitized(const arma::cx_mat& a) { return 0.5 * (a + a.t()); }

}  // namespace

double BeamformState::power() const {
    const double pw = arma::accu(arma::square(arma::abs(W)));
    const double pe = arma::accu(arma::square(arma::abs(We)));
    return pw + pe;
}

bool BeamformState::power_feasible(double p_max, double tol) const {
    return power() <= p_max * (1.0 + tol);
}

double rate_legit(const arma::cx_mat& h, const BeamformState& bf, double noise_w) {
    check_finite(h, "rate_legit");
    const arma::uword m = h.n_rows;
    const arma::cx_mat hw = h * bf.W;
    const arma::cx_mat hwe = h * bf.We;
    const arma::cx_mat sigma = hermitized(hwe * hwe.t()) + noise_w * linalg::complex_eye(m);
    return linalg::capacity_bits(hermitized(hw * hw.t()), sigma);
}

double rate_eave(const arma::cx_mat& he, const BeamformState& bf, double noise_w) {
    check_finite(he, "rate_eave");
    const arma::uword q = he.n_rows;
    const arma::cx_mat hw = he * bf.W;
    const arma::cx_mat hwe = he * bf.We;
    const arma::cx_mat sigma = hermitized(hwe * hwe.t()) + noise_w * linalg::complex_eye(q);
    return linalg::capacity_bits(hermitized(hw * hw.t()), sigma);
}

double secrecy_rate(const arma::cx_mat& h, const arma::cx_mat& he, const BeamformState& bf,
                    double noise_rx_w, double noise_eve_w) {
    const double rs = rate_legit(h, bf, noise_rx_w) - rate_eave(he, bf, noise_eve_w);
    return std::max(rs, 0.0);
}

arma::cx_mat mse_matrix(const arma::cx_mat& h, const BeamformState& bf, const arma::cx_mat& u,
                        double noise_w) {
    const arma::uword d = bf.W.n_cols;
    const arma::cx_mat hw = h * bf.W;
    const arma::cx_mat hwe = h * bf.We;
    const arma::cx_mat cov = hermitized(hw * hw.t() + hwe * hwe.t()) +
                             noise_w * linalg::complex_eye(h.n_rows);
    const arma::cx_mat uhw = u.t() * hw;
    return linalg::complex_eye(d) - uhw - uhw.t() + u.t() * cov * u;
}

arma::cx_mat mse_matrix_an(const arma::cx_mat& he, const arma::cx_mat& we, const arma::cx_mat& ue,
                           double noise_w) {
    const arma::uword n = we.n_cols;
    const arma::cx_mat hwe = he * we;
    const arma::cx_mat cov = hermitized(hwe * hwe.t()) + noise_w * linalg::complex_eye(he.n_rows);
    const arma::cx_mat uhw = ue.t() * hwe;
    return linalg::complex_eye(n) - uhw - uhw.t() + ue.t() * cov * ue;
}

arma::cx_mat mse_matrix_leak(const arma::cx_mat& he, const BeamformState& bf, double noise_w) {
    const arma::uword q = he.n_rows;
    const arma::cx_mat hw = he * bf.W;
    const arma::cx_mat hwe = he * bf.We;
    return linalg::complex_eye(q) + hermitized(hw * hw.t() + hwe * hwe.t()) / noise_w;
}

AuxState update_auxiliaries(const arma::cx_mat& h, const arma::cx_mat& he, const BeamformState& bf,
                            double noise_rx_w, double noise_eve_w) {
    check_finite(h, "update_auxiliaries");
    check_finite(he, "update_auxiliaries");

    AuxState aux;
    {
        const arma::cx_mat hw = h * bf.W;
        const arma::cx_mat hwe = h * bf.We;
        const arma::cx_mat cov = hermitized(hw * hw.t() + hwe * hwe.t()) +
                                 noise_rx_w * linalg::complex_eye(h.n_rows);
        aux.U = linalg::solve_hpd(cov, hw);
    }
    {
        const arma::cx_mat hwe = he * bf.We;
        const arma::cx_mat cov = hermitized(hwe * hwe.t()) +
                                 noise_eve_w * linalg::complex_eye(he.n_rows);
        aux.Ue = linalg::solve_hpd(cov, hwe);
    }

    const arma::cx_mat e = hermitized(mse_matrix(h, bf, aux.U, noise_rx_w));
    const arma::cx_mat ee = hermitized(mse_matrix_an(he, bf.We, aux.Ue, noise_eve_w));
    const arma::cx_mat ex = hermitized(mse_matrix_leak(he, bf, noise_eve_w));

    try {
        aux.Omega = hermitized(linalg::solve_hpd(e, linalg::complex_eye(e.n_rows)));
    } catch (const std::runtime_error&) {
        throw std::runtime_error("update_auxiliaries: rank-deficient MSE (too many streams)");
    }
    aux.Omega_e = hermitized(linalg::solve_hpd(ee, linalg::complex_eye(ee.n_rows)));
    aux.Omega_x = hermitized(linalg::solve_hpd(ex, linalg::complex_eye(ex.n_rows)));
    return aux;
}

double surrogate_F(const AuxState& aux, const BeamformState& bf, const arma::cx_mat& h,
                   const arma::cx_mat& he, double noise_rx_w, double noise_eve_w) {
    const arma::cx_mat e = mse_matrix(h, bf, aux.U, noise_rx_w);
    const arma::cx_mat ee = mse_matrix_an(he, bf.We, aux.Ue, noise_eve_w);
    const arma::cx_mat ex = mse_matrix_leak(he, bf, noise_eve_w);

    const double d = static_cast<double>(bf.W.n_cols);
    const double n = static_cast<double>(bf.We.n_cols);
    const double q = static_cast<double>(he.n_rows);

    const double h1 = linalg::logdet_hpd(hermitized(aux.Omega)) -
                      std::real(arma::trace(aux.Omega * e)) + d;
    const double h2 = linalg::logdet_hpd(hermitized(aux.Omega_e)) -
                      std::real(arma::trace(aux.Omega_e * ee)) + n;
    const double h3 = linalg::logdet_hpd(hermitized(aux.Omega_x)) -
                      std::real(arma::trace(aux.Omega_x * ex)) + q;
    return h1 + h2 + h3;
}

}  // namespace rasec
