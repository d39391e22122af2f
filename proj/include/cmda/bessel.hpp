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


#ifndef CMDA_BESSEL_HPP
#define CMDA_BESSEL_HPP

namespace cmda
{
    // First positive zero of J0
    inline constexpr double kBesselJ0FirstZero = 2.404825557695772768621631879;

    // Smallest distance, in wavelengths, at which the Jakes correlation vanishes: j_{0,1} / (2 pi)
    inline constexpr double kZeroCorrelationDistance = kBesselJ0FirstZero / (2.0 * 3.14159265358979323846264338328);

    // Global minimum of J0 over the real line (attained near x = 3.8317)
    inline constexpr double kBesselJ0Minimum = -0.40275939570255315;

    // Bessel function of the first kind, order zero.
    // Ascending power series for |x| < 12, Hankel asymptotic expansion beyond.
    // Absolute error is below 1e-12 on the whole real line.
    double bessel_j0(double x);

} // namespace cmda

#endif
