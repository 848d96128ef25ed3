/*
   Copyright 2026 The d2dsel Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "d2dsel/config.hpp"
#include "d2dsel/montecarlo.hpp"

namespace d2dsel {

/// Which closed-form cellular columns a sweep fills in.
enum class VariantSelector { Literal, Corrected, Both };

std::optional<VariantSelector> parse_variant(std::string_view name) noexcept;

struct SweepSpec {
    std::filesystem::path config_path;
    SweepAxis axis = SweepAxis::Alpha;
    std::vector<double> values;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    std::filesystem::path out_path;
    VariantSelector variant = VariantSelector::Both;
    unsigned workers = 0;  ///< 0: hardware concurrency
};

/// Parses a comma-separated list of numbers. Throws std::invalid_argument.
std::vector<double> parse_value_list(std::string_view text);

/// %.9g-style rendering, independent of the global locale.
std::string format_number(double x);

inline constexpr std::string_view kCsvHeader =
    "axis,value,p_oc_mc,p_oc_ci,p_oc_literal,p_oc_corrected,p_od_mc,p_od_ci,p_od_analytic,"
    "case1,case2,case3,case4,trials,seed";

/// Writes the curve as RFC 4180 CSV (CRLF line ends). Failed points keep
/// their axis, value, trials and seed; every other field is left empty.
void write_csv(const OutageCurve& curve, VariantSelector variant, std::ostream& out);

/// Runs a sweep and writes the CSV atomically. Returns 0 when every point
/// completed, 1 when some point failed, 2 on a configuration or I/O error
/// (in which case no output file is left behind).
int cmd_run(const SweepSpec& spec, std::ostream& err);

struct ValidationCheck {
    std::string name;
    double mc = 0.0;
    double ci = 0.0;
    double analytic = 0.0;
    double standard_error = 0.0;  ///< binomial, evaluated at the analytic value
    bool pass = false;
    bool mandatory = false;
};

struct ValidationReport {
    SystemConfig config;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    EstimateResult estimate;
    double alpha_bound_cellular = 0.0;
    double alpha_bound_d2d = 0.0;
    double p_oc_literal = 0.0;
    double p_oc_corrected = 0.0;
    double p_od_analytic = 0.0;
    std::vector<ValidationCheck> checks;

    bool mandatory_passed() const noexcept;
};

/// |mc - analytic| <= 3 sqrt(analytic (1 - analytic) / n).
ValidationCheck agreement_check(std::string name, std::uint64_t events, std::uint64_t n,
                                double analytic, bool mandatory);

ValidationReport build_validation_report(const SystemConfig& cfg, std::uint64_t trials,
                                         std::uint64_t seed, unsigned workers = 0);

void write_report(const ValidationReport& report, std::ostream& out);

/// Returns 0 iff every mandatory check passed, 2 on configuration errors.
int cmd_validate(const std::filesystem::path& config_path, std::uint64_t trials,
                 std::uint64_t seed, unsigned workers, std::ostream& out, std::ostream& err);

}  // namespace d2dsel
