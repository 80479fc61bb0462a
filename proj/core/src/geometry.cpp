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

#include "rasec/geometry.hpp"

#include <cmath>
#include <numbers>

namespace rasec {

ArrayLayout::ArrayLayout() : spacing(1.0) {
    origin.zeros();
    rotation.eye();
}

ArrayLayout::ArrayLayout(int nx, int ny, double delta, const Vec3& o, const Mat33& r)
    : count_x(nx), count_y(ny), spacing(delta), origin(o), rotation(r) {
    if (nx < 1 || ny < 1) throw std::invalid_argument("ArrayLayout: element counts must be >= 1");
    if (!(delta > 0.0)) throw std::invalid_argument("ArrayLayout: spacing must be positive");
    const Mat33 gram = r.t() * r;
    if (arma::norm(arma::mat(gram - arma::eye(3, 3)), "fro") > 1e-12 * 3.0 ||
        std::abs(arma::det(r) - 1.0) > 1e-12) {
        throw std::invalid_argument("ArrayLayout: rotation must be a proper orthogonal matrix");
    }
}

Cap::Cap(double theta_max_rad) : theta_max(theta_max_rad) {
    if (!(theta_max_rad >= 0.0) || theta_max_rad > std::numbers::pi / 2.0 + 1e-15) {
        throw std::invalid_argument("Cap: theta_max must lie in [0, pi/2]");
    }
    cos_z = std::cos(theta_max_rad);
    sin_z = std::sin(theta_max_rad);
}

bool Cap::contains(const Vec3& f, double tol) const {
    return std::abs(arma::norm(f) - 1.0) <= tol && f(2) >= cos_z - tol;
}

std::vector<Vec3> element_positions(const ArrayLayout& layout) {
    std::vector<Vec3> out;
    out.reserve(static_cast<std::size_t>(layout.count()));
    for (int ny = 1; ny <= layout.count_y; ++ny) {
        for (int nx = 1; nx <= layout.count_x; ++nx) {
            const Vec3 local{(nx - 0.5 * (layout.count_x + 1)) * layout.spacing,
                             (ny - 0.5 * (layout.count_y + 1)) * layout.spacing, 0.0};
            out.push_back(layout.origin + layout.rotation * local);
        }
    }
    return out;
}

Vec3 project_to_cap(const Vec3& x, const Cap& cap, const Vec3& tie) {
    const double nrm = arma::norm(x);
    if (!(nrm > 0.0)) throw std::invalid_argument("project_to_cap: degenerate direction");
    // Keep already-unit inputs bit-exact so projecting twice equals
    // projecting once.
    const Vec3 unit = std::abs(nrm - 1.0) <= 4.0 * std::numeric_limits<double>::epsilon()
                          ? x
                          : Vec3(x / nrm);
    if (unit(2) >= cap.cos_z) return unit;
    Vec3 perp = unit;
    perp(2) = 0.0;
    const double perp_norm = arma::norm(perp);
    if (perp_norm > 0.0) {
        return cap.cos_z * z_axis() + cap.sin_z * (perp / perp_norm);
    }
    return cap.cos_z * z_axis() + cap.sin_z * tie;
}

Vec3 fw_vertex(const Vec3& grad, const Cap& cap, const Vec3& tie) {
    const double nrm = arma::norm(grad);
    if (!(nrm > 0.0)) throw std::invalid_argument("fw_vertex: zero gradient");
    const Vec3 g = grad / nrm;
    const double z = g(2);
    if (z <= -cap.cos_z) return Vec3(-g);
    Vec3 equatorial = g;
    equatorial(2) -= z;
    const double eq_norm = arma::norm(equatorial);
    if (eq_norm > 1e-14) {
        return -cap.sin_z * (equatorial / eq_norm) + cap.cos_z * z_axis();
    }
    return cap.sin_z * tie + cap.cos_z * z_axis();
}

Vec3 retract(const Vec3& f, const Vec3& d, double rho) {
    const Vec3 moved = f + rho * d;
    const double nrm = arma::norm(moved);
    if (!(nrm > 0.0)) throw std::invalid_argument("retract: degenerate retraction");
    return moved / nrm;
}

Vec3 cap_point_from_uniforms(const Cap& cap, double u1, double u2) {
    const double z = 1.0 - u1 * (1.0 - cap.cos_z);
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = 2.0 * std::numbers::pi * u2;
    return Vec3{s * std::cos(phi), s * std::sin(phi), z};
}

Mat33 rotation_from_z_to(const Vec3& target) {
    const Vec3 z = z_axis();
    const double c = arma::dot(z, target);
    if (c > 1.0 - 1e-14) return Mat33(arma::fill::eye);
    if (c < -1.0 + 1e-14) {
        // 180 degree flip about the x-axis.
        Mat33 r(arma::fill::eye);
        r(1, 1) = -1.0;
        r(2, 2) = -1.0;
        return r;
    }
    const Vec3 axis = arma::normalise(arma::cross(z, target));
    const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
    Mat33 k(arma::fill::zeros);
    k(0, 1) = -axis(2);
    k(0, 2) = axis(1);
    k(1, 0) = axis(2);
    k(1, 2) = -axis(0);
    k(2, 0) = -axis(1);
    k(2, 1) = axis(0);
    return Mat33(arma::eye(3, 3) + s * k + (1.0 - c) * (k * k));
}

}  // namespace rasec
