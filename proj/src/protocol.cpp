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

#include "d2dsel/protocol.hpp"

#include <cassert>
#include <cmath>

namespace d2dsel {

std::string_view to_string(OperatingCase c) noexcept {
    switch (c) {
    case OperatingCase::Case1: return "case1";
    case OperatingCase::Case2: return "case2";
    case OperatingCase::Case3: return "case3";
    case OperatingCase::Case4: return "case4";
    }
    return "unknown";
}

double phase1_rate_du1(double beta_bs_tx, const SystemConfig& cfg) {
    const double snr = (1.0 - cfg.gamma) * cfg.p_c * beta_bs_tx / cfg.sigma2;
    return cfg.alpha * std::log2(1.0 + snr);
}

double phase1_rate_du2(double beta_bs_rx, const SystemConfig& cfg) {
    const double snr = cfg.p_c * beta_bs_rx / cfg.sigma2;
    return cfg.alpha * std::log2(1.0 + snr);
}

double phase2_rate_cu(double beta_bs_tx, double beta_tx_cu, const SystemConfig& cfg) {
    const double rx = harvested_power(beta_bs_tx, cfg) * beta_tx_cu;
    const double sinr = cfg.rho * rx / ((1.0 - cfg.rho) * rx + cfg.sigma2);
    return (1.0 - cfg.alpha) * std::log2(1.0 + sinr);
}

double phase2_rate_d2d(OperatingCase c, double beta_bs_tx, double beta_tx_rx,
                       const SystemConfig& cfg) {
    const double rx = harvested_power(beta_bs_tx, cfg) * beta_tx_rx;
    double sinr = 0.0;
    switch (c) {
    case OperatingCase::Case1:
    case OperatingCase::Case4:
        sinr = rx / cfg.sigma2;
        break;
    case OperatingCase::Case2:
        // x_c was decoded in phase 1 and is cancelled
        sinr = (1.0 - cfg.rho) * rx / cfg.sigma2;
        break;
    case OperatingCase::Case3:
        sinr = (1.0 - cfg.rho) * rx / (cfg.rho * rx + cfg.sigma2);
        break;
    }
    return (1.0 - cfg.alpha) * std::log2(1.0 + sinr);
}

namespace {

template <typename Range, typename RateFn>
std::pair<std::uint32_t, double> argmax_rate(const Range& indices, RateFn&& rate) {
    auto it = std::begin(indices);
    std::uint32_t best = *it;
    double best_rate = rate(best);
    for (++it; it != std::end(indices); ++it) {
        const double r = rate(*it);
        if (r > best_rate) {
            best = *it;
            best_rate = r;
        }
    }
    return {best, best_rate};
}

struct IndexRange {
    struct iterator {
        std::uint32_t i;
        std::uint32_t operator*() const { return i; }
        iterator& operator++() { ++i; return *this; }
        bool operator!=(const iterator& o) const { return i != o.i; }
    };
    std::uint32_t n;
    iterator begin() const { return {0}; }
    iterator end() const { return {n}; }
};

}  // namespace

void select_and_classify(const ChannelRealization& ch, const SystemConfig& cfg,
                         SelectionOutcome& out) {
    const auto n = static_cast<std::uint32_t>(ch.n_pairs());
    assert(n >= 1);

    out.decoding_set.clear();
    for (std::uint32_t i = 0; i < n; ++i) {
        if (phase1_rate_du1(ch.gain(i, Link::BsToTx), cfg) > cfg.r_ct) {
            out.decoding_set.push_back(i);
        }
    }

    const auto d2d_rate = [&](OperatingCase c) {
        return [&, c](std::uint32_t i) {
            return phase2_rate_d2d(c, ch.gain(i, Link::BsToTx), ch.gain(i, Link::TxToRx), cfg);
        };
    };

    if (out.decoding_set.empty()) {
        const auto [best, rate] = argmax_rate(IndexRange{n}, d2d_rate(OperatingCase::Case1));
        out.operating_case = OperatingCase::Case1;
        out.selected = best;
        out.rate_cu = 0.0;
        out.rate_d2d = rate;
        return;
    }

    const auto [relay, rate_cu] = argmax_rate(out.decoding_set, [&](std::uint32_t i) {
        return phase2_rate_cu(ch.gain(i, Link::BsToTx), ch.gain(i, Link::TxToCu), cfg);
    });
    if (rate_cu > cfg.r_ct) {
        const bool rx_decoded = phase1_rate_du2(ch.gain(relay, Link::BsToRx), cfg) > cfg.r_ct;
        out.operating_case = rx_decoded ? OperatingCase::Case2 : OperatingCase::Case3;
        out.selected = relay;
        out.rate_cu = rate_cu;
        out.rate_d2d = d2d_rate(out.operating_case)(relay);
        return;
    }

    const auto [best, rate] = argmax_rate(out.decoding_set, d2d_rate(OperatingCase::Case4));
    out.operating_case = OperatingCase::Case4;
    out.selected = best;
    out.rate_cu = 0.0;
    out.rate_d2d = rate;
}

SelectionOutcome select_and_classify(const ChannelRealization& ch, const SystemConfig& cfg) {
    SelectionOutcome out;
    select_and_classify(ch, cfg, out);
    return out;
}

TrialResult run_trial(const ChannelRealization& ch, const SystemConfig& cfg) {
    TrialResult r;
    r.outcome = select_and_classify(ch, cfg);
    r.cellular_outage = is_cellular_outage(r.outcome);
    r.d2d_outage = is_d2d_outage(r.outcome, cfg);
    return r;
}

}  // namespace d2dsel
