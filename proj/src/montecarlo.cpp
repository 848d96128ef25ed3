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

#include "d2dsel/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "d2dsel/analytic.hpp"
#include "d2dsel/channel.hpp"
#include "d2dsel/protocol.hpp"

namespace d2dsel {

namespace {

struct Counts {
    std::uint64_t cellular = 0;
    std::uint64_t d2d = 0;
    std::array<std::uint64_t, 4> cases{};
    std::uint64_t tx_fail = 0;
    std::uint64_t rx_ok = 0;

    Counts& operator+=(const Counts& o) {
        cellular += o.cellular;
        d2d += o.d2d;
        for (std::size_t i = 0; i < cases.size(); ++i) {
            cases[i] += o.cases[i];
        }
        tx_fail += o.tx_fail;
        rx_ok += o.rx_ok;
        return *this;
    }
};

Counts run_range(const SystemConfig& cfg, std::uint64_t master_seed, std::uint64_t first,
                 std::uint64_t last) {
    const auto means = mean_gains(cfg);
    ChannelRealization ch(cfg.n_pairs);
    SelectionOutcome outcome;
    outcome.decoding_set.reserve(cfg.n_pairs);
    Counts counts;
    for (std::uint64_t k = first; k < last; ++k) {
        CounterRng rng(master_seed, k);
        draw_channels(cfg, means, rng, ch);
        select_and_classify(ch, cfg, outcome);

        counts.cellular += is_cellular_outage(outcome);
        counts.d2d += is_d2d_outage(outcome, cfg);
        ++counts.cases[static_cast<std::size_t>(outcome.operating_case) - 1];
        counts.tx_fail += cfg.n_pairs - outcome.decoding_set.size();
        for (std::uint32_t i = 0; i < cfg.n_pairs; ++i) {
            counts.rx_ok += phase1_rate_du2(ch.gain(i, Link::BsToRx), cfg) > cfg.r_ct;
        }
    }
    return counts;
}

}  // namespace

double ci_halfwidth(std::uint64_t events, std::uint64_t trials) {
    if (trials == 0) {
        return 0.0;
    }
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(events) / n;
    if (std::min(events, trials - events) >= 10) {
        return kZ99 * std::sqrt(p * (1.0 - p) / n);
    }
    const double z2 = kZ99 * kZ99;
    return kZ99 * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / (1.0 + z2 / n);
}

EstimateResult estimate_outage(const SystemConfig& cfg, std::uint64_t trials,
                               std::uint64_t master_seed, unsigned workers) {
    validate(cfg);
    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(trials, 1)));

    std::vector<Counts> partial(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t first = trials * w / workers;
            const std::uint64_t last = trials * (w + 1) / workers;
            pool.emplace_back([&, w, first, last] {
                partial[w] = run_range(cfg, master_seed, first, last);
            });
        }
    }
    Counts total;
    for (const auto& c : partial) {
        total += c;
    }

    EstimateResult r;
    r.trials = trials;
    r.cellular_outages = total.cellular;
    r.d2d_outages = total.d2d;
    const double n = static_cast<double>(std::max<std::uint64_t>(trials, 1));
    r.p_oc_hat = total.cellular / n;
    r.p_od_hat = total.d2d / n;
    r.ci_halfwidth_oc = ci_halfwidth(total.cellular, trials);
    r.ci_halfwidth_od = ci_halfwidth(total.d2d, trials);
    r.case_histogram = total.cases;
    r.pair_draws = trials * cfg.n_pairs;
    r.tx_decode_failures = total.tx_fail;
    r.rx_decode_successes = total.rx_ok;
    return r;
}

std::string_view to_string(SweepAxis axis) noexcept {
    switch (axis) {
    case SweepAxis::Alpha: return "alpha";
    case SweepAxis::Rho: return "rho";
    case SweepAxis::NPairs: return "n_pairs";
    }
    return "unknown";
}

std::optional<SweepAxis> parse_axis(std::string_view name) noexcept {
    if (name == "alpha") return SweepAxis::Alpha;
    if (name == "rho") return SweepAxis::Rho;
    if (name == "n_pairs") return SweepAxis::NPairs;
    return std::nullopt;
}

SystemConfig with_axis_value(const SystemConfig& base, SweepAxis axis, double value) {
    SystemConfig cfg = base;
    switch (axis) {
    case SweepAxis::Alpha:
        cfg.alpha = value;
        break;
    case SweepAxis::Rho:
        cfg.rho = value;
        break;
    case SweepAxis::NPairs:
        if (!(value >= 1.0) || value != std::floor(value) || value > 4294967295.0) {
            throw ConfigError("n_pairs", "must be a positive integer");
        }
        cfg.n_pairs = static_cast<std::uint32_t>(value);
        break;
    }
    validate(cfg);
    return cfg;
}

std::uint64_t point_seed(std::uint64_t seed, std::size_t index) noexcept {
    return mix64(seed + CounterRng::kGolden * (static_cast<std::uint64_t>(index) + 1));
}

bool OutageCurve::all_ok() const noexcept {
    return std::all_of(points.begin(), points.end(), [](const CurvePoint& p) { return p.ok; });
}

OutageCurve sweep(const SystemConfig& base, SweepAxis axis, std::span<const double> values,
                  std::uint64_t trials, std::uint64_t seed, unsigned workers) {
    OutageCurve curve;
    curve.axis = axis;
    curve.points.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        CurvePoint pt;
        pt.value = values[i];
        pt.seed = point_seed(seed, i);
        try {
            const SystemConfig cfg = with_axis_value(base, axis, values[i]);
            pt.estimate = estimate_outage(cfg, trials, pt.seed, workers);
            pt.p_oc_literal = cellular_outage(cfg, CellularVariant::Literal);
            pt.p_oc_corrected = cellular_outage(cfg, CellularVariant::Corrected);
            pt.p_od_analytic = d2d_outage(cfg);
            pt.ok = true;
        } catch (const ConfigError& e) {
            pt.ok = false;
            pt.error = e.what();
        }
        curve.points.push_back(std::move(pt));
    }
    return curve;
}

}  // namespace d2dsel
