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

#include "xorgame/sweep.hpp"

#include <charconv>
#include <cmath>
#include <limits>

#include "xorgame/errors.hpp"

namespace xorgame {

namespace {

constexpr double kBoundaryTolerance = 1e-12;

double snap(double v) {
    return std::round(v * 1e12) / 1e12;
}

}  // namespace

std::string to_string(Region r) {
    switch (r) {
        case Region::one:
            return "1";
        case Region::two:
            return "2";
        case Region::boundary:
            return "boundary";
        case Region::none:
            break;
    }
    return "none";
}

Region classify_region(double p, double q) {
    if (!(p >= 0.5 && p <= 1.0 && q >= 0.5 && q <= 1.0)) {
        return Region::none;
    }
    if (std::abs(p - 1.0 / (2.0 * q)) <= kBoundaryTolerance || (p == 0.5 && q == 0.5)) {
        return Region::boundary;
    }
    if (in_region1(p, q)) {
        return Region::one;
    }
    if (in_region2(p, q)) {
        return Region::two;
    }
    return Region::none;
}

double closed_form_bias(double p, double q) {
    if (!(p >= 0.5 && p <= 1.0 && q >= 0.5 && q <= 1.0)) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    return in_region2(p, q) ? closed_form_region2(p, q) : closed_form_region1(p, q);
}

std::vector<double> sweep_axis(double from, double to, double step) {
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw DomainError("sweep step must be positive");
    }
    if (!(from >= 0.5 && from <= to && to <= 1.0)) {
        throw DomainError("sweep range must satisfy 1/2 <= start <= end <= 1");
    }
    std::vector<double> axis;
    for (long i = 0;; i++) {
        double v = snap(from + static_cast<double>(i) * step);
        if (v > to + kBoundaryTolerance) {
            break;
        }
        axis.push_back(std::min(v, to));
    }
    return axis;
}

std::vector<SweepRow> run_sweep(const SweepOptions &options) {
    std::vector<double> ps = sweep_axis(options.p_from, options.p_to, options.step);
    std::vector<double> qs = sweep_axis(options.q_from, options.q_to, options.step);
    std::vector<SweepRow> rows;
    for (double p : ps) {
        for (double q : qs) {
            XorGame g = build_perturbed_and_game(p, q);
            SweepRow row;
            row.p = p;
            row.q = q;
            row.classical_bias = classical_bias_exact(g, options.classical).bias;
            BiasCertificate c = quantum_bias(g, options.quantum);
            row.quantum_lower = c.lower;
            row.quantum_upper = c.upper;
            row.closed_form = closed_form_bias(p, q);
            row.region = classify_region(p, q);
            rows.push_back(row);
        }
    }
    return rows;
}

std::string format_number(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
    return std::string(buf, end);
}

void write_sweep_csv(std::ostream &out, const std::vector<SweepRow> &rows) {
    out << "p,q,classical_bias,quantum_lower,quantum_upper,closed_form,region\n";
    for (const auto &r : rows) {
        out << format_number(r.p) << ',' << format_number(r.q) << ',' << format_number(r.classical_bias) << ','
            << format_number(r.quantum_lower) << ',' << format_number(r.quantum_upper) << ','
            << format_number(r.closed_form) << ',' << to_string(r.region) << '\n';
    }
}

}  // namespace xorgame
