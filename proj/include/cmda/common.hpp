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

#ifndef CMDA_COMMON_HPP
#define CMDA_COMMON_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cmda
{
    // Invalid argument or configuration value passed to a library routine
    class ParameterError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // Factorization or linear solve failed
    class NumericalError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

    // Position in the plane, meters
    struct Point2D
    {
        double x = 0.0;
        double y = 0.0;

        friend constexpr Point2D operator+(Point2D a, Point2D b) { return {a.x + b.x, a.y + b.y}; }
        friend constexpr Point2D operator-(Point2D a, Point2D b) { return {a.x - b.x, a.y - b.y}; }
        friend constexpr Point2D operator*(double s, Point2D a) { return {s * a.x, s * a.y}; }
        friend constexpr Point2D operator*(Point2D a, double s) { return {s * a.x, s * a.y}; }
        friend constexpr bool operator==(Point2D a, Point2D b) = default;

        constexpr double dot(Point2D o) const { return x * o.x + y * o.y; }
        double norm() const { return std::hypot(x, y); }
    };

    inline double distance(Point2D a, Point2D b) { return (a - b).norm(); }

    // Carrier wavelength in meters; always strictly positive and finite
    class Wavelength
    {
    public:
        explicit Wavelength(double meters) : meters_(meters)
        {
            if (!(meters > 0.0) || !std::isfinite(meters))
                throw ParameterError("Wavelength must be positive and finite, got " + std::to_string(meters));
        }

        double meters() const { return meters_; }

        friend bool operator==(const Wavelength &, const Wavelength &) = default;

    private:
        double meters_;
    };

} // namespace cmda

#endif
