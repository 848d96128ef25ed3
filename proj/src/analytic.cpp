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

#include "d2dsel/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "d2dsel/bessel.hpp"

namespace d2dsel {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::uint32_t kExactBinomialLimit = 60;

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

// 2^x - 1 without cancellation for small x.
double exp2m1(double x) { return std::expm1(x * std::numbers::ln2); }

// x^k with 0^0 = 1.
double ipow(double x, std::uint32_t k) { return k == 0 ? 1.0 : std::pow(x, static_cast<double>(k)); }

double log_choose(std::uint32_t n, std::uint32_t k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// k * log(x) with 0 * log(0) = 0.
double xlogy(std::uint32_t k, double x) { return k == 0 ? 0.0 : k * std::log(x); }

// sigma^2 (1-alpha) (2^{rate/(1-alpha)} - 1) / (eta gamma P_c alpha): the product
// beta_1 * beta_j threshold for a phase-2 SNR target, infinite without harvesting.
double product_threshold(const SystemConfig& cfg, double target_rate) {
    const double snr = exp2m1(target_rate / (1.0 - cfg.alpha));
    const double harvest = cfg.eta * cfg.gamma * cfg.p_c * cfg.alpha;
    if (harvest == 0.0) {
        return kInf;
    }
    return cfg.sigma2 * (1.0 - cfg.alpha) * snr / harvest;
}

// P[beta_a beta_b < threshold] for independent exponentials with the given
// means: 1 - x K1(x), x = sqrt(4 threshold / (mean_a mean_b)).
double product_cdf_arg(double threshold, double mean_a, double mean_b) {
    return std::sqrt(4.0 * threshold / (mean_a * mean_b));
}

}  // namespace

std::string_view to_string(CellularVariant v) noexcept {
    return v == CellularVariant::Literal ? "literal" : "corrected";
}

AlphaBounds alpha_bounds(const SystemConfig& cfg) {
    AlphaBounds b{};
    // delta = r_ct / log2(1 + rho/(1-rho)) = r_ct / log2(1/(1-rho))
    if (cfg.rho <= 0.0) {
        b.cellular = -kInf;
    } else if (cfg.rho >= 1.0) {
        b.cellular = 1.0;
    } else {
        b.cellular = 1.0 - cfg.r_ct / std::log2(1.0 + cfg.rho / (1.0 - cfg.rho));
    }
    // mu = r_dt / log2(1/rho)
    if (cfg.rho >= 1.0) {
        b.d2d = -kInf;
    } else if (cfg.rho <= 0.0) {
        b.d2d = 1.0;
    } else {
        b.d2d = 1.0 - cfg.r_dt / std::log2(1.0 / cfg.rho);
    }
    return b;
}

double binomial_sum(std::uint32_t n, double p, double x) {
    const double q = 1.0 - p;
    double sum = 0.0;
    if (n <= kExactBinomialLimit) {
        double choose = 1.0;
        for (std::uint32_t k = 1; k <= n; ++k) {
            choose = choose * (n - k + 1) / k;
            sum += choose * ipow(p, n - k) * ipow(q, k) * ipow(x, k);
        }
        return sum;
    }
    for (std::uint32_t k = 1; k <= n; ++k) {
        const double log_term = log_choose(n, k) + xlogy(n - k, p) + xlogy(k, q) + xlogy(k, x);
        sum += std::exp(log_term);
    }
    return sum;
}

CellularOutageTerms cellular_outage_terms(const SystemConfig& cfg) {
    CellularOutageTerms c{};
    const double m1 = cfg.mean_gain(1);
    const double m2 = cfg.mean_gain(2);

    c.t = exp2m1(cfg.r_ct / cfg.alpha);
    c.m = cfg.p_c / cfg.sigma2;
    if (cfg.gamma >= 1.0) {
        c.p = 1.0;
    } else {
        c.p = -std::expm1(-std::pow(cfg.d1, cfg.v) * c.t / (c.m * (1.0 - cfg.gamma)));
    }
    c.p1 = ipow(c.p, cfg.n_pairs);

    const AlphaBounds bounds = alpha_bounds(cfg);
    c.delta = 1.0 - bounds.cellular;
    c.feasible = cfg.alpha < bounds.cellular;

    c.a_coef = product_threshold(cfg, cfg.r_ct);
    c.b_coef = cfg.rho - exp2m1(cfg.r_ct / (1.0 - cfg.alpha)) * (1.0 - cfg.rho);
    if (c.feasible && c.b_coef > 0.0 && std::isfinite(c.a_coef)) {
        c.u = product_cdf_arg(c.a_coef / c.b_coef, m1, m2);
        c.w = clamp01(one_minus_x_k1(c.u));
    } else {
        c.u = kInf;
        c.w = 1.0;
    }
    c.t_term = binomial_sum(cfg.n_pairs, c.p, c.w);
    return c;
}

double cellular_outage(const SystemConfig& cfg, CellularVariant variant) {
    const CellularOutageTerms c = cellular_outage_terms(cfg);
    if (!c.feasible) {
        return 1.0;
    }
    const double value = variant == CellularVariant::Literal
                             ? c.p1 + (1.0 - c.p1) * c.t_term
                             : c.p1 + c.t_term;
    return clamp01(value);
}

D2dOutageTerms d2d_outage_terms(const SystemConfig& cfg) {
    D2dOutageTerms o{};
    const CellularOutageTerms c = cellular_outage_terms(cfg);
    const double m1 = cfg.mean_gain(1);
    const double m3 = cfg.mean_gain(3);

    o.d_coef = product_threshold(cfg, cfg.r_dt);
    o.c_coef = cfg.rho >= 1.0 ? kInf : o.d_coef / (1.0 - cfg.rho);
    o.e_coef = (1.0 - cfg.rho) - cfg.rho * exp2m1(cfg.r_dt / (1.0 - cfg.alpha));

    const AlphaBounds bounds = alpha_bounds(cfg);
    o.mu = 1.0 - bounds.d2d;
    o.feasible = cfg.alpha < bounds.d2d;

    const auto tail = [&](double threshold, double& arg) {
        if (!std::isfinite(threshold)) {
            arg = kInf;
            return 1.0;
        }
        arg = product_cdf_arg(threshold, m1, m3);
        return clamp01(one_minus_x_k1(arg));
    };
    o.q_term = tail(o.d_coef, o.y_arg);
    o.r_term = tail(o.c_coef, o.v_arg);
    if (o.feasible && o.e_coef > 0.0) {
        o.z_term = tail(o.d_coef / o.e_coef, o.z_arg);
    } else {
        o.z_arg = kInf;
        o.z_term = 1.0;
    }

    o.phi = std::exp(-std::pow(cfg.d4, cfg.v) * c.t / c.m);
    o.p21 = clamp01(c.p1 + (1.0 - c.p1) * c.t_term);
    o.p22 = clamp01(c.p1 + (1.0 - c.p1) * binomial_sum(cfg.n_pairs, c.p, 1.0));
    return o;
}

double d2d_outage(const SystemConfig& cfg) {
    const CellularOutageTerms c = cellular_outage_terms(cfg);
    const D2dOutageTerms o = d2d_outage_terms(cfg);
    const double p1 = c.p1;
    const double p1c = 1.0 - p1;

    // Branch selection: the relay-failure weight uses P21 inside the cellular
    // bound and P22 outside it; the interfered-link factor is the published
    // sum term inside the D2D bound and 1 outside it.
    const double relay_fail = c.feasible ? o.p21 : o.p22;
    const double interfered = o.feasible ? c.t_term : 1.0;

    const double no_decoder = p1 * ipow(o.q_term, cfg.n_pairs);
    const double cancelled = p1c * (1.0 - relay_fail) * o.r_term * o.phi;
    const double interfered_term = p1c * (1.0 - relay_fail) * interfered * (1.0 - o.phi);
    const double best_d2d = p1c * relay_fail * binomial_sum(cfg.n_pairs, c.p, o.q_term);
    return clamp01(no_decoder + cancelled + interfered_term + best_d2d);
}

}  // namespace d2dsel
