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


#include "cmda/geometry.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace cmda::geometry
{
    namespace
    {
        constexpr int kGaussOrder = 32;

        struct GaussRule
        {
            std::array<double, kGaussOrder> nodes{};
            std::array<double, kGaussOrder> weights{};
        };

        // Legendre roots by Newton iteration from the Tricomi initial guesses
        GaussRule make_gauss_rule()
        {
            GaussRule rule;
            const int n = kGaussOrder;
            for (int i = 0; i < n / 2; ++i)
            {
                double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
                double dp = 0.0;
                for (int iter = 0; iter < 100; ++iter)
                {
                    double p0 = 1.0, p1 = x;
                    for (int k = 2; k <= n; ++k)
                    {
                        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                        p0 = p1;
                        p1 = pk;
                    }
                    dp = n * (x * p1 - p0) / (x * x - 1.0);
                    const double dx = p1 / dp;
                    x -= dx;
                    if (std::abs(dx) < 1e-16)
                        break;
                }
                const double w = 2.0 / ((1.0 - x * x) * dp * dp);
                rule.nodes[i] = -x;
                rule.weights[i] = w;
                rule.nodes[n - 1 - i] = x;
                rule.weights[n - 1 - i] = w;
            }
            return rule;
        }

        const GaussRule &gauss_rule()
        {
            static const GaussRule rule = make_gauss_rule();
            return rule;
        }

        double gauss_speed_integral(const QuadraticSegment &seg, double t0, double t1)
        {
            const GaussRule &rule = gauss_rule();
            const double half = 0.5 * (t1 - t0);
            const double mid = 0.5 * (t1 + t0);
            double sum = 0.0;
            for (int i = 0; i < kGaussOrder; ++i)
                sum += rule.weights[i] * seg.speed(mid + half * rule.nodes[i]);
            return half * sum;
        }
    } // namespace

    double segment_arc_length(const QuadraticSegment &seg, double t0, double t1)
    {
        const double cc = seg.c.dot(seg.c);
        if (cc > 0.0)
        {
            const double t_min = -seg.b.dot(seg.c) / (2.0 * cc);
            if (t_min > t0 && t_min < t1)
                return gauss_speed_integral(seg, t0, t_min) + gauss_speed_integral(seg, t_min, t1);
        }
        return gauss_speed_integral(seg, t0, t1);
    }

    SplinePath::SplinePath(std::vector<QuadraticSegment> segments, std::vector<Point2D> knots)
        : segments_(std::move(segments)), knots_(std::move(knots))
    {
        if (knots_.size() < 2 || segments_.size() + 1 != knots_.size())
            throw ParameterError("A spline path needs N >= 2 knots and N-1 segments");

        table_.reserve(segments_.size() * kTableResolution + 1);
        table_.push_back(0.0);
        for (const auto &seg : segments_)
        {
            for (int k = 0; k < kTableResolution; ++k)
            {
                const double t0 = double(k) / kTableResolution;
                const double t1 = double(k + 1) / kTableResolution;
                table_.push_back(table_.back() + segment_arc_length(seg, t0, t1));
            }
        }
        for (std::size_t i = 1; i < table_.size(); ++i)
            if (!(table_[i] > table_[i - 1]))
                throw ParameterError("Spline has a zero-length piece; arc length is not invertible");
    }

    Point2D SplinePath::at_parameter(double s) const
    {
        const double last = double(segments_.size());
        s = std::clamp(s, 0.0, last);
        const auto j = std::min(std::size_t(s), segments_.size() - 1);
        return segments_[j].at(s - double(j));
    }

    Point2D SplinePath::derivative_at(double s) const
    {
        const double last = double(segments_.size());
        s = std::clamp(s, 0.0, last);
        const auto j = std::min(std::size_t(s), segments_.size() - 1);
        return segments_[j].derivative(s - double(j));
    }

    double SplinePath::chord_length() const
    {
        double sum = 0.0;
        for (std::size_t j = 0; j + 1 < knots_.size(); ++j)
            sum += distance(knots_[j], knots_[j + 1]);
        return sum;
    }

    double SplinePath::parameter_at_arc_length(double ell) const
    {
        const double total = length();
        if (ell <= 0.0)
            return 0.0;
        if (ell >= total)
            return double(segments_.size());

        // Cell of the cumulative table holding ell
        const auto it = std::upper_bound(table_.begin(), table_.end(), ell);
        const auto cell = std::size_t(std::distance(table_.begin(), it)) - 1;
        const std::size_t j = cell / kTableResolution;
        const double lo0 = double(cell % kTableResolution) / kTableResolution;
        const double hi0 = lo0 + 1.0 / kTableResolution;
        const QuadraticSegment &seg = segments_[j];
        const double target = ell - table_[cell];
        const double tol = 1e-10 * total;

        // Newton on F(t) = int_{lo0}^{t} speed - target, safeguarded by bisection
        double lo = lo0, hi = hi0;
        const double v0 = seg.speed(lo0);
        double t = v0 > 0.0 ? std::clamp(lo0 + target / v0, lo0, hi0) : 0.5 * (lo0 + hi0);
        for (int iter = 0; iter < 100; ++iter)
        {
            const double F = segment_arc_length(seg, lo0, t) - target;
            if (std::abs(F) <= 1e-3 * tol)
                break;
            if (F > 0.0)
                hi = t;
            else
                lo = t;
            const double v = seg.speed(t);
            double next = v > 0.0 ? t - F / v : 0.5 * (lo + hi);
            if (!(next > lo && next < hi))
                next = 0.5 * (lo + hi);
            if (hi - lo < 1e-16)
                break;
            t = next;
        }
        return double(j) + t;
    }

    Point2D SplinePath::at_arc_length(double ell) const
    {
        if (ell <= 0.0)
            return knots_.front();
        if (ell >= length())
            return knots_.back();
        return at_parameter(parameter_at_arc_length(ell));
    }

    SplinePath fit_spline(std::span<const Point2D> knots)
    {
        if (knots.size() < 2)
            throw ParameterError("Spline fitting needs at least two path points");
        for (std::size_t j = 0; j + 1 < knots.size(); ++j)
            if (knots[j] == knots[j + 1])
                throw ParameterError(fmt::format("Path points {} and {} coincide", j, j + 1));

        std::vector<QuadraticSegment> segments;
        segments.reserve(knots.size() - 1);
        Point2D v = knots[1] - knots[0];
        for (std::size_t j = 0; j + 1 < knots.size(); ++j)
        {
            const Point2D chord = knots[j + 1] - knots[j];
            QuadraticSegment seg{knots[j], v, chord - v};
            segments.push_back(seg);
            v = seg.derivative(1.0);
        }
        return SplinePath(std::move(segments), std::vector<Point2D>(knots.begin(), knots.end()));
    }

    SplinePath fit_spline(const pathopt::PathPoints &D) { return fit_spline(D.points()); }

    double arc_length(const SplinePath &sp) { return sp.length(); }

    Point2D CircularPath::at_arc_length(double ell) const
    {
        const double theta = start_angle + ell / radius;
        return center + radius * Point2D{std::cos(theta), std::sin(theta)};
    }

    OrientedPath::OrientedPath(SplinePath spline, bool start_is_d1)
        : shape_(std::move(spline)), start_is_d1_(start_is_d1)
    {
        const auto &knots = std::get<SplinePath>(shape_).knots();
        start_ = start_is_d1 ? knots.front() : knots.back();
        end_ = start_is_d1 ? knots.back() : knots.front();
    }

    OrientedPath::OrientedPath(CircularPath circle) : shape_(circle), start_is_d1_(true)
    {
        start_ = circle.start();
        end_ = start_;
    }

    double OrientedPath::length() const
    {
        return std::visit([](const auto &s) { return s.length(); }, shape_);
    }

    Point2D OrientedPath::at(double ell) const
    {
        if (ell <= 0.0)
            return start_;
        if (ell >= length())
            return end_;
        if (const auto *sp = std::get_if<SplinePath>(&shape_))
            return start_is_d1_ ? sp->at_arc_length(ell) : sp->at_arc_length(sp->length() - ell);
        return std::get<CircularPath>(shape_).at_arc_length(ell);
    }

    OrientedPath choose_orientation(SplinePath sp)
    {
        const auto &knots = sp.knots();
        double from_first = 0.0, from_last = 0.0;
        for (const auto &d : knots)
        {
            from_first += distance(knots.front(), d);
            from_last += distance(knots.back(), d);
        }
        from_first /= double(knots.size());
        from_last /= double(knots.size());

        // Ending at d_1 only when it is strictly closer on average
        const double tie = 1e-12 * std::max(from_first, from_last);
        const bool end_at_first = from_first < from_last - tie;
        return OrientedPath(std::move(sp), !end_at_first);
    }

    std::size_t sample_count(double length, double delta)
    {
        if (!(delta > 0.0) || !std::isfinite(delta))
            throw ParameterError("Sampling distance must be positive");
        if (!(length > 0.0))
            throw ParameterError("Path length must be positive");
        const double q = length / delta;
        const double nearest = std::nearbyint(q);
        const double intervals = std::abs(q - nearest) <= 1e-9 * std::max(1.0, q) ? nearest : std::ceil(q);
        return std::size_t(std::max(intervals, 1.0)) + 1;
    }

    SamplingSet sample_uniform(const OrientedPath &path, double delta)
    {
        const double L = path.length();
        const std::size_t M = sample_count(L, delta);

        SamplingSet out;
        out.delta_requested = delta;
        out.degenerate = M == 2;
        out.spacing = L / double(M - 1);
        out.points.reserve(M);
        out.points.push_back(path.start_point());
        for (std::size_t i = 1; i + 1 < M; ++i)
            out.points.push_back(path.at(double(i) * out.spacing));
        out.points.push_back(path.end_point());
        return out;
    }

    SamplingSet sample_uniform(const SplinePath &sp, double delta)
    {
        return sample_uniform(OrientedPath(sp, true), delta);
    }

    SplinePath linear_path(double path_length)
    {
        if (!(path_length > 0.0) || !std::isfinite(path_length))
            throw ParameterError("Path length must be positive");
        const std::array<Point2D, 2> ends{Point2D{0.0, 0.0}, Point2D{path_length, 0.0}};
        return fit_spline(ends);
    }

    CircularPath circular_path(double path_length)
    {
        if (!(path_length > 0.0) || !std::isfinite(path_length))
            throw ParameterError("Path length must be positive");
        const double r = path_length / kTwoPi;
        return CircularPath{Point2D{0.0, r}, r, -0.5 * std::numbers::pi};
    }

} // namespace cmda::geometry
