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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "d2dsel/config.hpp"

namespace d2dsel {

/// Two-sided 99% normal quantile used for every confidence half-width.
inline constexpr double kZ99 = 2.576;

struct EstimateResult {
    std::uint64_t trials = 0;
    std::uint64_t cellular_outages = 0;
    std::uint64_t d2d_outages = 0;
    double p_oc_hat = 0.0;
    double p_od_hat = 0.0;
    double ci_halfwidth_oc = 0.0;
    double ci_halfwidth_od = 0.0;
    std::array<std::uint64_t, 4> case_histogram{};  ///< Case1..Case4

    // Per-pair phase-1 diagnostics, over trials * n_pairs pair draws.
    std::uint64_t pair_draws = 0;
    std::uint64_t tx_decode_failures = 0;  ///< phase-1 rate at the transmitter <= r_ct
    std::uint64_t rx_decode_successes = 0; ///< phase-1 rate at the receiver > r_ct

    friend bool operator==(const EstimateResult&, const EstimateResult&) = default;
};

/// 99% half-width for `events` out of `trials`: the normal approximation
/// 2.576 sqrt(p(1-p)/n), replaced by the Wilson half-width when fewer than
/// ten events or ten non-events were observed.
double ci_halfwidth(std::uint64_t events, std::uint64_t trials);

/// Runs `trials` independent trials. Trial k draws its channels from
/// CounterRng(master_seed, k), so the result is identical for any `workers`.
/// `workers == 0` uses the hardware concurrency.
EstimateResult estimate_outage(const SystemConfig& cfg, std::uint64_t trials,
                               std::uint64_t master_seed, unsigned workers = 0);

enum class SweepAxis { Alpha, Rho, NPairs };

std::string_view to_string(SweepAxis axis) noexcept;
/// Accepts "alpha", "rho" and "n_pairs".
std::optional<SweepAxis> parse_axis(std::string_view name) noexcept;

/// Applies one axis value to a copy of `base` and validates the result.
/// Throws ConfigError for values invalid on that axis.
SystemConfig with_axis_value(const SystemConfig& base, SweepAxis axis, double value);

/// Seed of sweep point `index` derived from the sweep seed.
std::uint64_t point_seed(std::uint64_t seed, std::size_t index) noexcept;

struct CurvePoint {
    double value = 0.0;
    std::uint64_t seed = 0;
    bool ok = false;
    std::string error;  ///< set when !ok
    EstimateResult estimate;
    double p_oc_literal = 0.0;
    double p_oc_corrected = 0.0;
    double p_od_analytic = 0.0;
};

struct OutageCurve {
    SweepAxis axis = SweepAxis::Alpha;
    std::vector<CurvePoint> points;

    bool all_ok() const noexcept;
};

/// One Monte Carlo estimate plus the closed forms per axis value. Invalid
/// values yield a failed point and the sweep continues.
OutageCurve sweep(const SystemConfig& base, SweepAxis axis, std::span<const double> values,
                  std::uint64_t trials, std::uint64_t seed, unsigned workers = 0);

}  // namespace d2dsel
