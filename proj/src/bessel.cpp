// SPDX-License-Identifier: Apache-2.0
//
// cmda - path design and Monte Carlo evaluation for continuous mobility diversity
// Copyright (C) 2026 The cmda authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------


#include "cmda/bessel.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace cmda
{
    namespace
    {
        constexpr double kSeriesLimit = 12.0;
        constexpr int kSeriesTerms = 80;

        constexpr auto kInverseSquares = [] {
            std::array<double, kSeriesTerms> t{};
            for (int k = 1; k < kSeriesTerms; ++k)
                t[k] = 1.0 / (double(k) * double(k));
            return t;
        }();

        double j0_series(double x)
        {
            // sum_k (-1)^k (x^2/4)^k / (k!)^2
            const double q = -0.25 * x * x;
            double term = 1.0;
            double sum = 1.0;
            for (int k = 1; k < kSeriesTerms; ++k)
            {
                term *= q * kInverseSquares[k];
                sum += term;
                if (std::abs(term) < 1e-17)
                    break;
            }
            return sum;
        }

        double j0_asymptotic(double x)
        {
            // J0(x) ~ sqrt(2/(pi x)) [P cos(x - pi/4) - Q sin(x - pi/4)]
            // with c_k = prod_{i=1..k} (2i-1)^2 / (k! 8^k):
            //   P = sum_m (-1)^m c_{2m} x^{-2m},  Q = -sum_m (-1)^m c_{2m+1} x^{-2m-1}
            double P = 1.0, Q = 0.0;
            double term = 1.0; // c_k / x^k
            double last = 1.0;
            for (int k = 1; k < 200; ++k)
            {
                const double f = double(2 * k - 1);
                term *= f * f / (8.0 * double(k) * x);
                if (term > last) // asymptotic series started diverging
                    break;
                last = term;
                const int m = k / 2;
                const double sign = (m % 2 == 0) ? 1.0 : -1.0;
                if (k % 2 == 0)
                    P += sign * term;
                else
                    Q -= sign * term;
                if (term < 1e-17)
                    break;
            }
            const double phase = x - 0.25 * std::numbers::pi;
            return std::sqrt(2.0 / (std::numbers::pi * x)) * (P * std::cos(phase) - Q * std::sin(phase));
        }
    } // namespace

    double bessel_j0(double x)
    {
        x = std::abs(x);
        if (x < kSeriesLimit)
            return j0_series(x);
        return j0_asymptotic(x);
    }

} // namespace cmda
