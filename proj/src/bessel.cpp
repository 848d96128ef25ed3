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

#include "d2dsel/bessel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace d2dsel {

namespace {

constexpr double kSeriesLimit = 2.0;
constexpr double kUnderflowLimit = 700.0;
constexpr double kEps = 1e-17;
constexpr int kMaxIter = 10000;

// K1(x) = 1/x + ln(x/2) I1(x)
//         - (x/4) sum_k [psi(k+1) + psi(k+2)] (x^2/4)^k / (k! (k+1)!)
double k1_series(double x) {
    const double q = 0.25 * x * x;
    double term = 1.0;  // (x^2/4)^k / (k! (k+1)!)
    double harmonic = 0.0;  // H_k
    double i1_sum = 0.0;
    double psi_sum = 0.0;
    for (int k = 0; k < kMaxIter; ++k) {
        const double psi = 2.0 * (-std::numbers::egamma) + 2.0 * harmonic + 1.0 / (k + 1);
        i1_sum += term;
        psi_sum += psi * term;
        if (term < kEps * i1_sum) {
            break;
        }
        harmonic += 1.0 / (k + 1);
        term *= q / ((k + 1.0) * (k + 2.0));
    }
    const double i1 = 0.5 * x * i1_sum;
    return 1.0 / x + std::log(0.5 * x) * i1 - 0.25 * x * psi_sum;
}

// Steed's method for the second continued fraction (order mu = 0), giving
// K0 and then K1 = K0 (x + 1/2 - h) / x.
double k1_continued_fraction(double x) {
    constexpr double a1 = 0.25;
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d;
    double delh = d;
    double q1 = 0.0;
    double q2 = 1.0;
    double q = a1;
    double c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 2; i <= kMaxIter; ++i) {
        a -= 2.0 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < kEps) {
            break;
        }
    }
    h *= a1;
    const double k0 = std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x) / s;
    return k0 * (x + 0.5 - h) / x;
}

}  // namespace

double bessel_k1(double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("bessel_k1: argument must be > 0");
    }
    if (x > kUnderflowLimit) {
        return 0.0;
    }
    return x <= kSeriesLimit ? k1_series(x) : k1_continued_fraction(x);
}

double one_minus_x_k1(double x) {
    if (x == 0.0) {
        return 0.0;
    }
    if (std::isinf(x)) {
        return 1.0;
    }
    return 1.0 - x * bessel_k1(x);
}

}  // namespace d2dsel
