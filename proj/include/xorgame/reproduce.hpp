// Copyright 2026 The xorgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace xorgame {

/// One acceptance item: which criterion it belongs to, whether it passed and
/// the measured values behind the verdict.
struct CheckResult {
    int criterion = 0;
    std::string id;
    std::string description;
    bool passed = false;
    nlohmann::json measured;
};

struct ReproduceOptions {
    uint64_t seed = 0;
    uint64_t mc_rounds = 1000000;
};

/// Interior sample points of region 1 or 2, kept away from the region
/// boundaries.
std::vector<std::pair<double, double>> region_interior_points(int region, int count);

std::vector<CheckResult> check_classical_flatness(const ReproduceOptions &options);
std::vector<CheckResult> check_chsh_endpoints(const ReproduceOptions &options);
std::vector<CheckResult> check_region_closed_forms(const ReproduceOptions &options);
std::vector<CheckResult> check_strict_advantage(const ReproduceOptions &options);
std::vector<CheckResult> check_sums(const ReproduceOptions &options);
std::vector<CheckResult> check_perturbed_sums(const ReproduceOptions &options);
std::vector<CheckResult> check_flat_start(const ReproduceOptions &options);
std::vector<CheckResult> check_magic_square(const ReproduceOptions &options);
std::vector<CheckResult> check_properties(const ReproduceOptions &options);

/// All of the above, in criterion order.
std::vector<CheckResult> run_acceptance(const ReproduceOptions &options = {});

nlohmann::json to_json(const std::vector<CheckResult> &results);

}  // namespace xorgame
