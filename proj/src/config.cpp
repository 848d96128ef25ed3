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

#include "d2dsel/config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>

namespace d2dsel {

namespace {

void require(bool ok, const char* field, const char* constraint) {
    if (!ok) {
        throw ConfigError(field, constraint);
    }
}

double read_power(const nlohmann::json& doc, const char* field) {
    const auto& node = doc.at(field);
    if (!node.is_object() || node.size() != 1) {
        throw ConfigError(field, "must be an object {\"dbm\": x} or {\"watts\": x}");
    }
    if (node.contains("dbm")) {
        if (!node["dbm"].is_number()) {
            throw ConfigError(field, "dbm value must be a number");
        }
        return dbm_to_watts(node["dbm"].get<double>());
    }
    if (node.contains("watts")) {
        if (!node["watts"].is_number()) {
            throw ConfigError(field, "watts value must be a number");
        }
        return node["watts"].get<double>();
    }
    throw ConfigError(field, "unit must be \"dbm\" or \"watts\"");
}

double read_number(const nlohmann::json& doc, const char* field) {
    const auto& node = doc.at(field);
    if (!node.is_number()) {
        throw ConfigError(field, "must be a number");
    }
    return node.get<double>();
}

}  // namespace

double SystemConfig::mean_gain(int link) const {
    switch (link) {
    case 1: return std::pow(d1, -v);
    case 2: return std::pow(d2, -v);
    case 3: return std::pow(d3, -v);
    case 4: return std::pow(d4, -v);
    default: throw std::out_of_range("link class must be in 1..4");
    }
}

ConfigError::ConfigError(std::string field, std::string constraint)
    : std::invalid_argument("invalid config: field '" + field + "' " + constraint),
      field_(std::move(field)),
      constraint_(std::move(constraint)) {}

void validate(const SystemConfig& cfg) {
    require(cfg.p_c > 0.0 && std::isfinite(cfg.p_c), "p_c", "must be > 0");
    require(cfg.sigma2 > 0.0 && std::isfinite(cfg.sigma2), "sigma2", "must be > 0");
    require(cfg.eta > 0.0 && cfg.eta <= 1.0, "eta", "must satisfy 0 < eta <= 1");
    require(cfg.gamma >= 0.0 && cfg.gamma <= 1.0, "gamma", "must satisfy 0 <= gamma <= 1");
    require(cfg.alpha > 0.0 && cfg.alpha < 1.0, "alpha", "must satisfy 0 < alpha < 1");
    require(cfg.rho >= 0.0 && cfg.rho <= 1.0, "rho", "must satisfy 0 <= rho <= 1");
    require(cfg.n_pairs >= 1, "n_pairs", "must be >= 1");
    require(cfg.d1 > 0.0 && std::isfinite(cfg.d1), "d1", "must be > 0");
    require(cfg.d2 > 0.0 && std::isfinite(cfg.d2), "d2", "must be > 0");
    require(cfg.d3 > 0.0 && std::isfinite(cfg.d3), "d3", "must be > 0");
    require(cfg.d4 > 0.0 && std::isfinite(cfg.d4), "d4", "must be > 0");
    require(cfg.v >= 2.0 && std::isfinite(cfg.v), "v", "must be >= 2");
    require(cfg.r_ct > 0.0 && std::isfinite(cfg.r_ct), "r_ct", "must be > 0");
    require(cfg.r_dt > 0.0 && std::isfinite(cfg.r_dt), "r_dt", "must be > 0");
    require(cfg.t_slot > 0.0 && std::isfinite(cfg.t_slot), "t_slot", "must be > 0");
}

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }

SystemConfig config_from_json(const nlohmann::json& doc) {
    static const std::set<std::string> known = {
        "p_c", "sigma2", "eta", "gamma", "alpha", "rho", "n_pairs", "d1",
        "d2",  "d3",     "d4",  "v",     "r_ct",  "r_dt", "t_slot"};
    if (!doc.is_object()) {
        throw ConfigError("<root>", "must be a JSON object");
    }
    for (const auto& [key, value] : doc.items()) {
        if (!known.contains(key)) {
            throw ConfigError(key, "is not a recognised config key");
        }
    }
    for (const auto& key : known) {
        if (key != "t_slot" && !doc.contains(key)) {
            throw ConfigError(key, "is required");
        }
    }

    SystemConfig cfg;
    cfg.p_c = read_power(doc, "p_c");
    cfg.sigma2 = read_power(doc, "sigma2");
    cfg.eta = read_number(doc, "eta");
    cfg.gamma = read_number(doc, "gamma");
    cfg.alpha = read_number(doc, "alpha");
    cfg.rho = read_number(doc, "rho");
    const auto& n = doc.at("n_pairs");
    if (!n.is_number_integer() || n.get<std::int64_t>() < 1 ||
        n.get<std::int64_t>() > std::numeric_limits<std::uint32_t>::max()) {
        throw ConfigError("n_pairs", "must be a positive integer");
    }
    cfg.n_pairs = n.get<std::uint32_t>();
    cfg.d1 = read_number(doc, "d1");
    cfg.d2 = read_number(doc, "d2");
    cfg.d3 = read_number(doc, "d3");
    cfg.d4 = read_number(doc, "d4");
    cfg.v = read_number(doc, "v");
    cfg.r_ct = read_number(doc, "r_ct");
    cfg.r_dt = read_number(doc, "r_dt");
    if (doc.contains("t_slot")) {
        cfg.t_slot = read_number(doc, "t_slot");
    }
    validate(cfg);
    return cfg;
}

nlohmann::json config_to_json(const SystemConfig& cfg) {
    return {
        {"p_c", {{"watts", cfg.p_c}}},
        {"sigma2", {{"watts", cfg.sigma2}}},
        {"eta", cfg.eta},
        {"gamma", cfg.gamma},
        {"alpha", cfg.alpha},
        {"rho", cfg.rho},
        {"n_pairs", cfg.n_pairs},
        {"d1", cfg.d1},
        {"d2", cfg.d2},
        {"d3", cfg.d3},
        {"d4", cfg.d4},
        {"v", cfg.v},
        {"r_ct", cfg.r_ct},
        {"r_dt", cfg.r_dt},
        {"t_slot", cfg.t_slot},
    };
}

SystemConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("<file>", "cannot open " + path.string());
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("<file>", std::string("is not valid JSON: ") + e.what());
    }
    return config_from_json(doc);
}

}  // namespace d2dsel
