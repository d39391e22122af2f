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


#ifndef CMDA_PATHOPT_HPP
#define CMDA_PATHOPT_HPP

#include "cmda/common.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

// Minimum-correlation design of equally spaced path points
namespace cmda::pathopt
{
    // Absolute heading psi_j of segment d_j -> d_{j+1}, radians in [0, 2 pi)
    struct HeadingAngles
    {
        std::vector<double> psi;

        void validate() const;
    };

    // Ordered path points with equal chord length between neighbours
    class PathPoints
    {
    public:
        // Throws ParameterError if N < 2 or the chords differ from L_p/(N-1) by more than 1e-9 relative
        PathPoints(std::vector<Point2D> points, double path_length, Wavelength lam);

        const std::vector<Point2D> &points() const { return points_; }
        std::size_t size() const { return points_.size(); }
        double segment_length() const { return segment_length_; }
        double path_length() const { return segment_length_ * double(points_.size() - 1); }
        Wavelength wavelength() const { return lam_; }

    private:
        std::vector<Point2D> points_;
        double segment_length_;
        Wavelength lam_;
    };

    struct AnnealingConfig
    {
        std::optional<double> initial_temperature; // default: collinear cost / N
        double cooling_factor = 0.97;
        int iterations_per_temperature = 200;
        std::optional<double> temperature_floor;   // default: 1e-6 * initial temperature
        int restarts = 8;
        double proposal_stddev_scale = 0.5;
        std::uint64_t seed = 0;
        unsigned threads = 1; // restarts run concurrently; result does not depend on this

        void validate() const;

        friend bool operator==(const AnnealingConfig &, const AnnealingConfig &) = default;
    };

    struct PathCostReport
    {
        double cost = 0.0;
        long long iterations_used = 0;
        int restarts_used = 0;
    };

    struct OptimizedPath
    {
        PathPoints path;
        HeadingAngles angles;
        PathCostReport report;
        bool analytic = false; // true when the straight line is returned without search
    };

    // d_1 = origin, d_{j+1} = d_j + L_p/(N-1) (cos psi_j, sin psi_j)
    PathPoints angles_to_points(const HeadingAngles &psi, double path_length, std::size_t N, Wavelength lam,
                                Point2D origin = {});

    // sum_m sum_n J0^2(2 pi |d_m - d_n| / lambda), diagonal included
    double path_cost(std::span<const Point2D> points, Wavelength lam);
    double path_cost(const PathPoints &D);

    // L_p / lambda <= j_{0,1} / (2 pi), with 1e-6 relative slack: the straight line is provably optimal
    bool is_straight_line_regime(double path_length, Wavelength lam);

    OptimizedPath optimize_path(std::size_t N, double path_length, Wavelength lam, const AnnealingConfig &cfg = {});

} // namespace cmda::pathopt

#endif
