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

#include <vector>

#include "rasec/linalg.hpp"

namespace rasec {

// A uniform planar array: count_x * count_y elements on a centered grid in
// the panel's local x-y plane, placed into global coordinates by an origin
// and a posture rotation.
struct ArrayLayout {
    int count_x = 1;
    int count_y = 1;
    double spacing = 0.0;  // inter-element spacing in meters
    Vec3 origin;
    Mat33 rotation;

    ArrayLayout();
    ArrayLayout(int nx, int ny, double delta, const Vec3& origin, const Mat33& rotation);

    int count() const { return count_x * count_y; }
};

// Spherical cap around the local z-axis: the feasible set for every antenna
// boresight. theta_max in [0, pi/2].
struct Cap {
    double theta_max = 0.0;
    double cos_z = 1.0;
    double sin_z = 0.0;

    Cap() = default;
    explicit Cap(double theta_max_rad);

    bool contains(const Vec3& f, double tol = 1e-10) const;
};

inline Vec3 z_axis() { return Vec3{0.0, 0.0, 1.0}; }

// Deterministic tie-break direction used when a projection or vertex problem
// is rotationally degenerate.
inline Vec3 tie_break_axis() { return Vec3{1.0, 0.0, 0.0}; }

// Global element positions in row-major element order n = n_x + (n_y - 1) * N_x.
std::vector<Vec3> element_positions(const ArrayLayout& layout);

// Nearest cap point to x / ||x||. Throws std::invalid_argument on zero input.
Vec3 project_to_cap(const Vec3& x, const Cap& cap, const Vec3& tie = tie_break_axis());

// Projection of g onto the tangent space of the unit sphere at f.
inline Vec3 tangent_project(const Vec3& f, const Vec3& g) {
    return g - arma::dot(f, g) * f;
}

// Minimizer of <grad, x> over the cap (Frank-Wolfe linear subproblem).
// Callers substitute the current iterate themselves when ||grad|| == 0.
Vec3 fw_vertex(const Vec3& grad, const Cap& cap, const Vec3& tie = tie_break_axis());

// (f + rho * d) / ||f + rho * d||. Throws std::invalid_argument when the
// retracted vector degenerates to zero.
Vec3 retract(const Vec3& f, const Vec3& d, double rho);

// Maps two independent U[0,1) draws to an area-uniform cap direction.
Vec3 cap_point_from_uniforms(const Cap& cap, double u1, double u2);

// Rotation taking the local z-axis onto the (unit) target direction.
Mat33 rotation_from_z_to(const Vec3& target);

}  // namespace rasec
