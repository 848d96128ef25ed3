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
#include <optional>
#include <string_view>
#include <vector>

#include "d2dsel/channel.hpp"
#include "d2dsel/config.hpp"

namespace d2dsel {

/// Phase-2 operating mode of the selected pair.
enum class OperatingCase : std::uint8_t {
    Case1 = 1,  ///< no transmitter decoded the cellular signal; pure D2D
    Case2 = 2,  ///< relaying; the D2D receiver decoded x_c in phase 1 and cancels it
    Case3 = 3,  ///< relaying; the D2D receiver sees x_c as interference
    Case4 = 4,  ///< decoders exist but none can reach the cellular user; pure D2D
};

std::string_view to_string(OperatingCase c) noexcept;

struct SelectionOutcome {
    std::vector<std::uint32_t> decoding_set;  ///< 0-based pair indices, ascending
    std::optional<std::uint32_t> selected;    ///< 0-based pair index
    OperatingCase operating_case = OperatingCase::Case1;
    double rate_cu = 0.0;   ///< phase-2 rate at the cellular user, 0 without a relay
    double rate_d2d = 0.0;  ///< phase-2 rate of the selected D2D link
};

struct TrialResult {
    bool cellular_outage = true;
    bool d2d_outage = true;
    SelectionOutcome outcome;
};

/// alpha * log2(1 + (1-gamma) P_c beta / sigma^2): phase-1 rate at a D2D transmitter.
double phase1_rate_du1(double beta_bs_tx, const SystemConfig& cfg);

/// alpha * log2(1 + P_c beta / sigma^2): phase-1 rate of x_c at a D2D receiver.
double phase1_rate_du2(double beta_bs_rx, const SystemConfig& cfg);

/// Phase-2 rate of x_c at the cellular user when transmitter i relays it with
/// rho * P_h while its own signal, at (1 - rho) * P_h, is interference.
double phase2_rate_cu(double beta_bs_tx, double beta_tx_cu, const SystemConfig& cfg);

/// Phase-2 rate of the D2D link for the given operating case.
double phase2_rate_d2d(OperatingCase c, double beta_bs_tx, double beta_tx_rx,
                       const SystemConfig& cfg);

/// Builds the decoding set, picks the serving pair and classifies the case.
/// Ties in every argmax go to the lowest pair index. All rate comparisons
/// against targets are strict.
SelectionOutcome select_and_classify(const ChannelRealization& ch, const SystemConfig& cfg);

/// Allocation-free variant; `out.decoding_set` capacity is reused.
void select_and_classify(const ChannelRealization& ch, const SystemConfig& cfg,
                         SelectionOutcome& out);

TrialResult run_trial(const ChannelRealization& ch, const SystemConfig& cfg);

/// Outage indicators for an already classified outcome.
inline bool is_cellular_outage(const SelectionOutcome& o) noexcept {
    return o.operating_case == OperatingCase::Case1 || o.operating_case == OperatingCase::Case4;
}
inline bool is_d2d_outage(const SelectionOutcome& o, const SystemConfig& cfg) noexcept {
    return o.rate_d2d < cfg.r_dt;
}

}  // namespace d2dsel
