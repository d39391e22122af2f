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


#ifndef CMDA_GEOMETRY_HPP
#define CMDA_GEOMETRY_HPP

#include "cmda/common.hpp"
#include "cmda/pathopt.hpp"

#include <span>
#include <variant>
#include <vector>

// Continuous exploration paths: C1 quadratic splines through the path points,
// arc-length parametrization, uniform sampling and the baseline shapes
namespace cmda::geometry
{
    // Pi(t) = a + b t + c t^2, t in [0, 1]
    struct QuadraticSegment
    {
        Point2D a, b, c;

        Point2D at(double t) const { return a + t * b + (t * t) * c; }
        Point2D derivative(double t) const { return b + (2.0 * t) * c; }
        double speed(double t) const { return derivative(t).norm(); }
    };

    // Arc length of `seg` over [t0, t1] with 32-point Gauss-Legendre quadrature,
    // split at the speed minimum when it falls inside the interval
    double segment_arc_length(const QuadraticSegment &seg, double t0, double t1);

    class SplinePath
    {
    public:
        static constexpr int kTableResolution = 256; // cumulative arc-length samples per segment

        SplinePath(std::vector<QuadraticSegment> segments, std::vector<Point2D> knots);

        const std::vector<QuadraticSegment> &segments() const { return segments_; }
        const std::vector<Point2D> &knots() const { return knots_; }

        // g(s) for s in [0, N-1]; s = j lands on knot j (0-based)
        Point2D at_parameter(double s) const;
        Point2D derivative_at(double s) const;

        // Arc length L_p'
        double length() const { return table_.back(); }

        // Sum of knot-to-knot chords (L_p for equal-segment path points)
        double chord_length() const;

        // Point at arc-length distance `ell` from the first knot
        Point2D at_arc_length(double ell) const;

        // Spline parameter s at arc-length distance `ell`
        double parameter_at_arc_length(double ell) const;

        const std::vector<double> &arc_length_table() const { return table_; }

    private:
        std::vector<QuadraticSegment> segments_;
        std::vector<Point2D> knots_;
        std::vector<double> table_;
    };

    // Quadratic spline with C1 joints through the knots. The remaining degree of freedom is
    // fixed by taking the first segment as the straight chord d_1 -> d_2, which makes every
    // later segment follow recursively. Collinear knots give the straight segment.
    SplinePath fit_spline(std::span<const Point2D> knots);
    SplinePath fit_spline(const pathopt::PathPoints &D);

    double arc_length(const SplinePath &sp);

    // Closed circle of the given circumference starting (and ending) at the origin
    struct CircularPath
    {
        Point2D center;
        double radius = 0.0;
        double start_angle = 0.0;

        double length() const { return kTwoPi * radius; }
        Point2D at_arc_length(double ell) const;
        Point2D start() const { return at_arc_length(0.0); }
    };

    using PathShape = std::variant<SplinePath, CircularPath>;

    // A path together with the direction it is traversed in
    class OrientedPath
    {
    public:
        OrientedPath(SplinePath spline, bool start_is_d1);
        explicit OrientedPath(CircularPath circle);

        const PathShape &shape() const { return shape_; }
        bool start_is_d1() const { return start_is_d1_; }
        Point2D start_point() const { return start_; }
        Point2D end_point() const { return end_; }
        double length() const;

        // Position at arc-length distance `ell` from the start point
        Point2D at(double ell) const;

    private:
        PathShape shape_;
        bool start_is_d1_ = true;
        Point2D start_;
        Point2D end_;
    };

    // End the path at whichever of d_1, d_N has the smaller mean distance to all knots; ties end at d_N
    OrientedPath choose_orientation(SplinePath sp);

    struct SamplingSet
    {
        std::vector<Point2D> points;
        double spacing = 0.0;         // realized arc-length spacing L_p'/(M-1)
        double delta_requested = 0.0; // requested spacing
        bool degenerate = false;      // delta >= L_p': only the two end points are kept

        std::size_t size() const { return points.size(); }
    };

    // M = ceil(L/delta) + 1. Quotients within 1e-9 (relative) of an integer are taken as
    // that integer so that e.g. 1.8/0.05 does not round up to 37.
    std::size_t sample_count(double length, double delta);

    SamplingSet sample_uniform(const OrientedPath &path, double delta);
    SamplingSet sample_uniform(const SplinePath &sp, double delta);

    // Straight segment (0,0) -> (L_p, 0)
    SplinePath linear_path(double path_length);

    // Circle of circumference L_p through the origin
    CircularPath circular_path(double path_length);

} // namespace cmda::geometry

#endif
