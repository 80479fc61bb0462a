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
#include <vector>

namespace rasec {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Condensed invariant and oracle suite behind `rasec validate`: surrogate
// tightness, finite-difference gradients, bisection properties, the
// Frank-Wolfe vertex oracle, projection idempotence and sweep determinism.
std::vector<CheckResult> run_selfchecks();

}  // namespace rasec
