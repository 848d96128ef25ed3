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
#include <string_view>

#include "d2dsel/config.hpp"

namespace d2dsel {

/// Which form of the closed-form cellular outage to evaluate.
///
/// `Literal` multiplies the relay-failure sum by (1 - P1) as the published
/// expression does. `Corrected` drops that factor, so the expression is the
/// plain law of total probability over the number of decoding transmitters.
enum class CellularVariant { Literal, Corrected };

std::string_view to_string(CellularVariant v) noexcept;

/// Feasibility limits on the time-switching factor. A limit of -inf means
/// no alpha in (0, 1) is feasible.
struct AlphaBounds {
    double cellular;  ///< 1 - delta: relaying can reach the cellular target iff alpha < this
    double d2d;       ///< 1 - mu: the interfered D2D link can reach its target iff alpha < this
};

AlphaBounds alpha_bounds(const SystemConfig& cfg);

/// Auxiliary quantities of the closed-form cellular outage.
struct CellularOutageTerms {
    double p;       ///< P[one transmitter fails to decode x_c in phase 1]
    double p1;      ///< p^N: no transmitter decodes
    double t;       ///< 2^{r_ct / alpha} - 1
    double m;       ///< P_c / sigma^2
    double a_coef;  ///< sigma^2 (1-alpha)(2^{r_ct/(1-alpha)} - 1) / (eta gamma P_c alpha)
    double b_coef;  ///< rho - (2^{r_ct/(1-alpha)} - 1)(1 - rho)
    double u;       ///< sqrt(4 a / (b d1^{-v} d2^{-v})); +inf when the relay link is infeasible
    double w;       ///< P[R_i < r_ct] = 1 - u K1(u)
    double delta;   ///< r_ct / log2(1 + rho / (1 - rho))
    double t_term;  ///< sum_{k=1}^{N} C(N,k) p^{N-k} (1-p)^k w^k
    bool feasible;  ///< alpha < 1 - delta
};

CellularOutageTerms cellular_outage_terms(const SystemConfig& cfg);

double cellular_outage(const SystemConfig& cfg, CellularVariant variant);

/// Auxiliary quantities of the closed-form D2D outage. Names follow the
/// closed form's symbols with suffixes where they would clash with the
/// path-loss exponent (v), distances (d) or the slot time (T).
struct D2dOutageTerms {
    double v_arg;    ///< sqrt(4 c / (d1^{-v} d3^{-v}))
    double c_coef;   ///< d_coef / (1 - rho)
    double y_arg;    ///< sqrt(4 d / (d1^{-v} d3^{-v}))
    double d_coef;   ///< sigma^2 (1-alpha)(2^{r_dt/(1-alpha)} - 1) / (eta gamma P_c alpha)
    double z_arg;    ///< sqrt(4 d / (e d1^{-v} d3^{-v})); +inf when alpha >= 1 - mu
    double e_coef;   ///< (1 - rho) - rho (2^{r_dt/(1-alpha)} - 1)
    double mu;       ///< r_dt / log2(1 / rho)
    double phi;      ///< P[a D2D receiver decodes x_c in phase 1] = exp(-d4^v t / m)
    double q_term;   ///< 1 - y K1(y): full-power D2D link below target
    double r_term;   ///< 1 - v K1(v): D2D link with cancelled x_c below target
    double z_term;   ///< 1 - z K1(z) (or 1): D2D link with x_c interference below target
    double p21;      ///< P1 + (1 - P1) t_term
    double p22;      ///< P1 + (1 - P1) sum_{k=1}^{N} C(N,k) p^{N-k} (1-p)^k
    bool feasible;   ///< alpha < 1 - mu
};

D2dOutageTerms d2d_outage_terms(const SystemConfig& cfg);

/// Four-branch closed-form D2D outage, evaluated as published and clamped to [0, 1].
double d2d_outage(const SystemConfig& cfg);

/// sum_{k=1}^{n} C(n,k) p^{n-k} (1-p)^k x^k. Exact binomials up to n = 60,
/// log-domain terms beyond.
double binomial_sum(std::uint32_t n, double p, double x);

}  // namespace d2dsel
