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

namespace d2dsel {

/// Modified Bessel function of the second kind, order one.
///
/// Uses the ascending series for x <= 2 and the Steed/Temme continued
/// fraction above. Relative error is near machine precision on (0, 700];
/// returns 0 for x > 700. Throws std::domain_error for x <= 0 or NaN.
double bessel_k1(double x);

/// 1 - x K1(x): the CDF of a product of two unit-mean exponentials at x^2/4.
/// Extended continuously to 0 at x = 0.
double one_minus_x_k1(double x);

}  // namespace d2dsel
