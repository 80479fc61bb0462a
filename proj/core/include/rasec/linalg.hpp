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

#pragma once

#include <armadillo>
#include <atomic>
#include <complex>
#include <stdexcept>

namespace rasec {

using Vec3 = arma::vec3;
using Mat33 = arma::mat33;
using CxVec3 = arma::cx_vec::fixed<3>;
using cx_double = arma::cx_double;

namespace linalg {

// Counts how often a Hermitian factorization needed diagonal jitter to
// succeed. Exposed so long runs can report conditioning trouble.
inline std::atomic<std::uint64_t> jitter_events{0};

inline std::uint64_t jitter_count() { return jitter_events.load(); }
inline void reset_jitter_count() { jitter_events.store(0); }

// Lower Cholesky factor of a Hermitian positive (semi)definite matrix.
// Retries once with diagonal jitter 1e-12 * mean(diag) before giving up.
inline arma::cx_mat chol_lower(const arma::cx_mat& a) {
    arma::cx_mat l;
    if (arma::chol(l, a, "lower")) return l;
    jitter_events.fetch_add(1);
    const double scale = std::abs(arma::trace(a)) / std::max<arma::uword>(a.n_rows, 1);
    arma::cx_mat jittered = a + 1e-12 * std::max(scale, 1.0) *
                                    arma::cx_mat(arma::eye(a.n_rows, a.n_rows), arma::mat(a.n_rows, a.n_rows, arma::fill::zeros));
    if (arma::chol(l, jittered, "lower")) return l;
    throw std::runtime_error("chol_lower: matrix is not positive definite");
}

// Solves A X = B for Hermitian positive definite A via Cholesky.
inline arma::cx_mat solve_hpd(const arma::cx_mat& a, const arma::cx_mat& b) {
    const arma::cx_mat l = chol_lower(a);
    const arma::cx_mat y = arma::solve(arma::trimatl(l), b);
    return arma::solve(arma::trimatu(l.t()), y);
}

// log det(A) for Hermitian positive definite A, in nats.
inline double logdet_hpd(const arma::cx_mat& a) {
    const arma::cx_mat l = chol_lower(a);
    return 2.0 * arma::accu(arma::log(arma::abs(l.diag())));
}

// log2 det(I + Sigma^{-1/2} S Sigma^{-1/2}) with S, Sigma Hermitian PSD and
// Sigma positive definite. The congruence keeps the argument Hermitian, which
// the plain product S * inv(Sigma) would not.
inline double capacity_bits(const arma::cx_mat& s, const arma::cx_mat& sigma) {
    const arma::uword n = sigma.n_rows;
    const arma::cx_mat l = chol_lower(sigma);
    const arma::cx_mat half = arma::solve(arma::trimatl(l), s);
    arma::cx_mat m = arma::solve(arma::trimatl(l), half.t()).t();
    m = 0.5 * (m + m.t());
    const arma::cx_mat eye_c(arma::eye(n, n), arma::mat(n, n, arma::fill::zeros));
    return logdet_hpd(eye_c + m) / std::log(2.0);
}

// Moore-Penrose pseudo-inverse applied to B for Hermitian PSD A, with the
// eigenvalue cutoff 1e-12 * lambda_max.
inline arma::cx_mat pinv_hpsd_times(const arma::cx_mat& a, const arma::cx_mat& b) {
    arma::vec eval;
    arma::cx_mat evec;
    if (!arma::eig_sym(eval, evec, 0.5 * (a + a.t()))) {
        throw std::runtime_error("pinv_hpsd_times: eigendecomposition failed");
    }
    const double lmax = eval.empty() ? 0.0 : eval.max();
    const double cutoff = 1e-12 * std::max(lmax, 0.0);
    arma::vec inv_eval(eval.n_elem, arma::fill::zeros);
    for (arma::uword i = 0; i < eval.n_elem; ++i) {
        if (eval(i) > cutoff) inv_eval(i) = 1.0 / eval(i);
    }
    return evec * arma::diagmat(arma::cx_vec(inv_eval, arma::vec(inv_eval.n_elem, arma::fill::zeros))) * evec.t() * b;
}

inline arma::cx_mat complex_eye(arma::uword n) {
    return arma::cx_mat(arma::eye(n, n), arma::mat(n, n, arma::fill::zeros));
}

inline bool is_hermitian(const arma::cx_mat& a, double tol = 1e-10) {
    return arma::norm(arma::cx_mat(a - a.t()), "fro") <= tol * std::max(1.0, arma::norm(a, "fro"));
}

}  // namespace linalg
}  // namespace rasec
