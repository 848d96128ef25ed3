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

#include "d2dsel/channel.hpp"

namespace d2dsel {

std::array<double, kLinksPerPair> mean_gains(const SystemConfig& cfg) {
    return {cfg.mean_gain(1), cfg.mean_gain(2), cfg.mean_gain(3), cfg.mean_gain(4)};
}

ChannelRealization draw_channels(const SystemConfig& cfg, CounterRng& rng) {
    const auto means = mean_gains(cfg);
    ChannelRealization out(cfg.n_pairs);
    draw_channels(cfg, means, rng, out);
    return out;
}

void draw_channels(const SystemConfig& cfg, std::span<const double, kLinksPerPair> means,
                   CounterRng& rng, ChannelRealization& out) {
    if (out.n_pairs() != cfg.n_pairs) {
        out.resize(cfg.n_pairs);
    }
    auto gains = out.values();
    for (std::size_t i = 0; i < gains.size(); ++i) {
        gains[i] = rng.exponential(means[i % kLinksPerPair]);
    }
}

double harvested_power(double beta_bs_tx, const SystemConfig& cfg) {
    if (!(cfg.alpha < 1.0)) {
        throw ConfigError("alpha", "must be < 1 for a non-empty second phase");
    }
    return cfg.eta * cfg.gamma * cfg.p_c * beta_bs_tx * cfg.alpha / (1.0 - cfg.alpha);
}

}  // namespace d2dsel
