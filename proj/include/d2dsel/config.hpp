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
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

namespace d2dsel {

/// Physical and protocol parameters of the relay-selection system.
///
/// All powers are linear watts. Distances are meters. Conversion from dBm
/// happens once, when a config document is loaded.
struct SystemConfig {
    double p_c = 0.01;      ///< BS transmit power [W]
    double sigma2 = 1e-12;  ///< noise power at every receiver [W]
    double eta = 0.8;       ///< RF-to-DC efficiency
    double gamma = 0.75;    ///< power-splitting factor (share routed to the harvester)
    double alpha = 0.3;     ///< time-switching factor (phase-1 share of the slot)
    double rho = 0.75;      ///< phase-2 share of harvested power spent on the cellular signal
    std::uint32_t n_pairs = 2;
    double d1 = 30.0;  ///< BS -> D2D transmitter
    double d2 = 20.0;  ///< D2D transmitter -> cellular user
    double d3 = 20.0;  ///< D2D transmitter -> D2D receiver
    double d4 = 10.0;  ///< BS -> D2D receiver
    double v = 3.0;    ///< path-loss exponent
    double r_ct = 1.0; ///< cellular target rate [bit/s/Hz]
    double r_dt = 1.0; ///< D2D target rate [bit/s/Hz]
    double t_slot = 1.0; ///< slot duration; cancels out of every rate and power

    /// Reference scenario: -90 dBm noise, 10 dBm BS power, eta 0.8,
    /// gamma 0.75, exponent 3 and the 30/20/20/10 m link geometry.
    static SystemConfig reference() { return SystemConfig{}; }

    /// Mean power gain d^{-v} of link class j (1-based, as in d1..d4).
    double mean_gain(int link) const;
};

/// Raised when a configuration violates one of its invariants.
class ConfigError : public std::invalid_argument {
public:
    ConfigError(std::string field, std::string constraint);

    const std::string& field() const noexcept { return field_; }
    const std::string& constraint() const noexcept { return constraint_; }

private:
    std::string field_;
    std::string constraint_;
};

/// Throws ConfigError naming the first violated field.
void validate(const SystemConfig& cfg);

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

/// Parses a config document. Keys must match the SystemConfig field names;
/// p_c and sigma2 are objects of the form {"dbm": x} or {"watts": x}.
/// `t_slot` is optional. The result is validated.
SystemConfig config_from_json(const nlohmann::json& doc);
nlohmann::json config_to_json(const SystemConfig& cfg);
SystemConfig load_config(const std::filesystem::path& path);

}  // namespace d2dsel
