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

#include "rasec/scenario.hpp"
#include "rasec/sweep.hpp"

namespace rasec {

// JSON config I/O. Unknown keys are rejected so typos fail loudly.
ScenarioConfig load_scenario_config(const std::string& path);
ScenarioConfig parse_scenario_config(const std::string& json_text);
std::string scenario_config_to_json(const ScenarioConfig& cfg);

SweepSpec load_sweep_spec(const std::string& path);
SweepSpec parse_sweep_spec(const std::string& json_text);

}  // namespace rasec
