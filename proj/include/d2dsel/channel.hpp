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
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "d2dsel/config.hpp"
#include "d2dsel/rng.hpp"

namespace d2dsel {

/// Link classes of one D2D pair, in draw order.
enum class Link : std::size_t {
    BsToTx = 0,  ///< BS -> D2D transmitter (d1)
    TxToCu = 1,  ///< D2D transmitter -> cellular user (d2)
    TxToRx = 2,  ///< D2D transmitter -> D2D receiver (d3)
    BsToRx = 3,  ///< BS -> D2D receiver (d4)
};

inline constexpr std::size_t kLinksPerPair = 4;

/// One draw of the |h|^2 power gains of every link, stored row-major
/// (pair index outer, link class inner).
class ChannelRealization {
public:
    ChannelRealization() = default;
    explicit ChannelRealization(std::size_t n_pairs) : gains_(n_pairs * kLinksPerPair, 0.0) {}

    std::size_t n_pairs() const noexcept { return gains_.size() / kLinksPerPair; }

    double gain(std::size_t pair, Link link) const {
        return gains_[pair * kLinksPerPair + static_cast<std::size_t>(link)];
    }
    double& gain(std::size_t pair, Link link) {
        return gains_[pair * kLinksPerPair + static_cast<std::size_t>(link)];
    }

    std::span<const double> values() const noexcept { return gains_; }
    std::span<double> values() noexcept { return gains_; }

    void resize(std::size_t n_pairs) { gains_.assign(n_pairs * kLinksPerPair, 0.0); }

    friend bool operator==(const ChannelRealization&, const ChannelRealization&) = default;

private:
    std::vector<double> gains_;
};

/// Mean gains d_j^{-v} for the four link classes.
std::array<double, kLinksPerPair> mean_gains(const SystemConfig& cfg);

/// Draws cfg.n_pairs x 4 independent exponential gains from `rng`.
ChannelRealization draw_channels(const SystemConfig& cfg, CounterRng& rng);

/// Same as above, reusing `out`'s storage.
void draw_channels(const SystemConfig& cfg, std::span<const double, kLinksPerPair> means,
                   CounterRng& rng, ChannelRealization& out);

/// Transmit power available at a D2D transmitter after phase 1:
/// eta * gamma * P_c * beta * alpha / (1 - alpha).
double harvested_power(double beta_bs_tx, const SystemConfig& cfg);

}  // namespace d2dsel
