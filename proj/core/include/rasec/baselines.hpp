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

#include <string>

#include "rasec/multicast.hpp"
#include "rasec/scenario.hpp"

namespace rasec {

enum class Baseline {
    kProposed,      // full joint AO
    kRfoa,          // receive orientations fixed, transmit optimized
    kFoa,           // both orientation sets fixed
    kIsotropic,     // p = 0, orientation-blind elements
    kRandomOrient,  // cap-uniform random orientations, beamforming optimized
    kDiscrete,      // AO then nearest-codebook projection and re-optimization
};

Baseline baseline_from_name(const std::string& name);
std::string baseline_name(Baseline b);

struct BaselineResult {
    double secrecy_bits = 0.0;
    double surrogate_nats = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Runs one scheme on a single-receiver scenario. Multi-receiver scenarios
// route the proposed scheme through the multicast solver; fixed-orientation
// variants freeze the corresponding blocks the same way.
BaselineResult run_baseline(Baseline b, const Scenario& sc, const TraceSink& sink = {});

// Spherical Fibonacci cap codebook (3 x n_samples local directions).
arma::mat fibonacci_codebook(const Cap& cap, int n_samples);

// Nearest codebook direction by inner product.
Vec3 nearest_codeword(const arma::mat& codebook, const Vec3& f);

}  // namespace rasec
