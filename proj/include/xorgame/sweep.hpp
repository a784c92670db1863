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

#include <ostream>
#include <string>
#include <vector>

#include "xorgame/classical.hpp"
#include "xorgame/quantum.hpp"

namespace xorgame {

enum class Region { one, two, boundary, none };

std::string to_string(Region r);

/// Region of G_AND^{p,q}. Points with p = 1/(2q) (within 1e-12) and the
/// no-knowledge point p = q = 1/2 are labelled boundary.
Region classify_region(double p, double q);

/// Closed-form quantum bias for the region containing (p, q); NaN when
/// (p, q) lies outside [1/2, 1]^2.
double closed_form_bias(double p, double q);

struct SweepRow {
    double p = 0.0;
    double q = 0.0;
    double classical_bias = 0.0;
    double quantum_lower = 0.0;
    double quantum_upper = 0.0;
    double closed_form = 0.0;
    Region region = Region::none;
};

struct SweepOptions {
    double p_from = 0.5;
    double p_to = 1.0;
    double q_from = 0.5;
    double q_to = 1.0;
    double step = 0.05;
    QuantumOptions quantum;
    ClassicalOptions classical;
};

/// from, from + step, ..., up to `to`; values snapped to 1e-12. Requires
/// 1/2 <= from <= to <= 1 and step > 0.
std::vector<double> sweep_axis(double from, double to, double step);

/// One row per (p, q) grid point, p-major.
std::vector<SweepRow> run_sweep(const SweepOptions &options);

/// 12 significant digits, shortest general form.
std::string format_number(double v);

/// Header p,q,classical_bias,quantum_lower,quantum_upper,closed_form,region.
void write_sweep_csv(std::ostream &out, const std::vector<SweepRow> &rows);

}  // namespace xorgame
