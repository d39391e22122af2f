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
#include "cmda/pathopt.hpp"
#include "cmda/rng.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

using namespace cmda;
using namespace cmda::pathopt;

namespace
{
    const Wavelength kLam{0.1402};
    constexpr double kPi = std::numbers::pi;

    // Brute-force O(N^2) cost with the high-precision J0
    double oracle_cost(const std::vector<Point2D> &p, double lam)
    {
        double c = 0.0;
        for (const auto &a : p)
            for (const auto &b : p)
            {
                const double r = oracle::j0_series(kTwoPi * distance(a, b) / lam);
                c += r * r;
            }
        return c;
    }

    HeadingAngles random_angles(rng::Stream &s, std::size_t n)
    {
        HeadingAngles h;
        h.psi.assign(n, 0.0);
        for (std::size_t j = 1; j < n; ++j)
            h.psi[j] = kTwoPi * s.uniform();
        return h;
    }

    AnnealingConfig quick_config(std::uint64_t seed)
    {
        AnnealingConfig c;
        c.cooling_factor = 0.9;
        c.iterations_per_temperature = 60;
        c.restarts = 2;
        c.seed = seed;
        return c;
    }

    double max_angle_spread(const PathPoints &D)
    {
        const auto &p = D.points();
        double lo = 1e300, hi = -1e300;
        for (std::size_t j = 0; j + 1 < p.size(); ++j)
        {
            const double a = std::atan2(p[j + 1].y - p[j].y, p[j + 1].x - p[j].x);
            lo = std::min(lo, a);
            hi = std::max(hi, a);
        }
        return hi - lo;
    }
} // namespace

TEST_CASE("angles_to_points examples")
{
    const Wavelength unit{1.0};
    SUBCASE("straight")
    {
        const auto D = angles_to_points({{0.0, 0.0}}, 1.0, 3, unit);
        const std::vector<Point2D> want{{0, 0}, {0.5, 0}, {1, 0}};
        CHECK(D.points() == want);
    }
    SUBCASE("right angle")
    {
        const auto D = angles_to_points({{0.0, kPi / 2}}, 1.0, 3, unit);
        const auto &p = D.points();
        CHECK(p[1] == Point2D{0.5, 0.0});
        CHECK(std::abs(p[2].x - 0.5) <= 1e-15);
        CHECK(std::abs(p[2].y - 0.5) <= 1e-15);
    }
    SUBCASE("length mismatch")
    {
        CHECK_THROWS_AS(angles_to_points({{0.0}}, 1.0, 3, unit), ParameterError);
    }
}

TEST_CASE("angles_to_points keeps equal chords")
{
    rng::Stream s(1);
    for (int rep = 0; rep < 200; ++rep)
    {
        const std::size_t N = 2 + std::size_t(s.uniform() * 40);
        const double L = 0.05 + 3.0 * s.uniform();
        const auto D = angles_to_points(random_angles(s, N - 1), L, N, kLam);
        const auto &p = D.points();
        for (std::size_t j = 0; j + 1 < N; ++j)
            CHECK(std::abs(distance(p[j], p[j + 1]) - L / double(N - 1)) <= 1e-12);
    }
}

TEST_CASE("PathPoints validates its invariant")
{
    CHECK_THROWS_AS(PathPoints({{0, 0}}, 1.0, kLam), ParameterError);
    CHECK_THROWS_AS(PathPoints({{0, 0}, {0.5, 0}, {1.1, 0}}, 1.1, kLam), ParameterError);
    CHECK_NOTHROW(PathPoints({{0, 0}, {0.5, 0}, {0.5, 0.5}}, 1.0, kLam));
}

TEST_CASE("HeadingAngles validation")
{
    CHECK_THROWS_AS((HeadingAngles{{0.0, std::nan("")}}.validate()), ParameterError);
    CHECK_THROWS_AS((HeadingAngles{{0.0, 7.0}}.validate()), ParameterError);
    CHECK_NOTHROW((HeadingAngles{{0.0, 1.0}}.validate()));
}

TEST_CASE("path_cost examples")
{
    const double lam = kLam.meters();
    SUBCASE("coincident")
    {
        const std::vector<Point2D> p(7, Point2D{0.3, 0.1});
        CHECK(path_cost(p, kLam) == 49.0);
    }
    SUBCASE("two points a quarter wavelength apart")
    {
        const std::vector<Point2D> p{{0, 0}, {0.25 * lam, 0}};
        const double j = oracle::j0_series(kPi / 2);
        CHECK(std::abs(path_cost(p, kLam) - (2.0 + 2.0 * j * j)) <= 1e-12);
        CHECK(std::abs(path_cost(p, kLam) - 2.4454) <= 1e-3);
    }
}

TEST_CASE("path_cost matches the brute-force oracle and is at least N")
{
    rng::Stream s(2);
    for (int rep = 0; rep < 30; ++rep)
    {
        const std::size_t N = 2 + std::size_t(s.uniform() * 30);
        const auto D = angles_to_points(random_angles(s, N - 1), (0.1 + 2.0 * s.uniform()) * kLam.meters(), N, kLam);
        const double c = path_cost(D);
        CHECK(std::abs(c - oracle_cost(D.points(), kLam.meters())) <= 1e-10 * c);
        CHECK(c >= double(N));
        CHECK(c <= double(N * N));
    }
}

TEST_CASE("path_cost is invariant to rigid motion, reflection and reversal")
{
    rng::Stream s(3);
    for (int rep = 0; rep < 50; ++rep)
    {
        const std::size_t N = 10;
        const auto D = angles_to_points(random_angles(s, N - 1), 1.2 * kLam.meters(), N, kLam);
        const double c = path_cost(D);
        const double a = kTwoPi * s.uniform();
        std::vector<Point2D> moved, mirrored, reversed(D.points().rbegin(), D.points().rend());
        for (const auto &p : D.points())
        {
            moved.push_back(Point2D{std::cos(a) * p.x - std::sin(a) * p.y, std::sin(a) * p.x + std::cos(a) * p.y} +
                            Point2D{1.0, 2.0});
            mirrored.push_back({p.x, -p.y});
        }
        CHECK(std::abs(path_cost(moved, kLam) - c) <= 1e-9);
        CHECK(std::abs(path_cost(mirrored, kLam) - c) <= 1e-9);
        CHECK(std::abs(path_cost(reversed, kLam) - c) <= 1e-9);
    }
}

TEST_CASE("three points below the zero-correlation length prefer the straight line")
{
    const double L = 0.2 * kLam.meters();
    const double straight = path_cost(angles_to_points({{0.0, 0.0}}, L, 3, kLam));
    for (int i = 1; i < 181; ++i)
    {
        const double psi2 = kTwoPi * i / 181.0;
        CHECK(path_cost(angles_to_points({{0.0, psi2}}, L, 3, kLam)) > straight);
    }
}

TEST_CASE("is_straight_line_regime boundary")
{
    const double lam = kLam.meters();
    const double z0 = oracle::j0_first_zero() / kTwoPi;
    CHECK(is_straight_line_regime(0.3 * lam, kLam));
    CHECK(std::abs(0.38274 - z0) <= 5e-6);
    CHECK(is_straight_line_regime(0.38274 * lam, kLam));
    CHECK(is_straight_line_regime(z0 * lam, kLam));
    CHECK_FALSE(is_straight_line_regime(z0 * lam * (1.0 + 2e-6), kLam));
    CHECK_FALSE(is_straight_line_regime(1.0 * lam, kLam));
}

TEST_CASE("optimize_path in the straight-line regime is analytic")
{
    const auto r = optimize_path(25, 0.3 * kLam.meters(), kLam);
    CHECK(r.analytic);
    CHECK(r.report.iterations_used == 0);
    for (double psi : r.angles.psi)
        CHECK(psi == 0.0);
    const auto &p = r.path.points();
    CHECK(p.front() == Point2D{0.0, 0.0});
    for (const auto &q : p)
        CHECK(q.y == 0.0);
}

TEST_CASE("optimize_path with two points")
{
    for (double Lw : {0.2, 0.7, 1.5})
    {
        const double L = Lw * kLam.meters();
        const auto r = optimize_path(2, L, kLam, quick_config(1));
        const double j = oracle::j0_series(kTwoPi * Lw);
        CHECK(std::abs(r.report.cost - (2.0 + 2.0 * j * j)) <= 1e-12);
    }
}

TEST_CASE("optimize_path bends the path beyond the regime")
{
    const double L = 1.5 * kLam.meters();
    AnnealingConfig cfg;
    cfg.seed = 7;
    cfg.threads = 8;
    const auto r = optimize_path(25, L, kLam, cfg);
    const double straight = path_cost(angles_to_points(HeadingAngles{std::vector<double>(24, 0.0)}, L, 25, kLam));
    CHECK_FALSE(r.analytic);
    CHECK(r.report.cost < straight);
    CHECK(std::abs(r.report.cost - path_cost(r.path)) <= 1e-9 * r.report.cost);
    CHECK(r.report.iterations_used > 0);
    CHECK(r.report.restarts_used == 8);
    // canonical placement and equal chords
    const auto &p = r.path.points();
    CHECK(p[0] == Point2D{0.0, 0.0});
    CHECK(std::abs(p[1].y) <= 1e-15);
    CHECK(p[1].x > 0.0);
    for (std::size_t j = 0; j + 1 < p.size(); ++j)
        CHECK(std::abs(distance(p[j], p[j + 1]) - L / 24.0) <= 1e-9 * L);
}

TEST_CASE("optimize_path is deterministic across thread counts")
{
    const double L = 1.0 * kLam.meters();
    auto c1 = quick_config(99);
    c1.restarts = 4;
    auto c4 = c1;
    c4.threads = 4;
    const auto a = optimize_path(25, L, kLam, c1);
    const auto b = optimize_path(25, L, kLam, c1);
    const auto c = optimize_path(25, L, kLam, c4);
    CHECK(a.path.points() == b.path.points());
    CHECK(a.path.points() == c.path.points());
    CHECK(a.report.cost == c.report.cost);
}

TEST_CASE("optimize_path never worsens the straight line below the zero-correlation length")
{
    const double L = 0.6 * kLam.meters();
    const auto r = optimize_path(25, L, kLam, quick_config(5));
    const double straight = path_cost(angles_to_points(HeadingAngles{std::vector<double>(24, 0.0)}, L, 25, kLam));
    CHECK(r.report.cost <= straight);
    CHECK(max_angle_spread(r.path) <= 1e-6);
}

TEST_CASE("optimize_path argument checks")
{
    CHECK_THROWS_AS(optimize_path(1, 0.1, kLam), ParameterError);
    CHECK_THROWS_AS(optimize_path(5, 0.0, kLam), ParameterError);
    AnnealingConfig bad;
    bad.cooling_factor = 1.0;
    CHECK_THROWS_AS(optimize_path(5, 0.2, kLam, bad), ParameterError);
    bad = {};
    bad.restarts = 0;
    CHECK_THROWS_AS(optimize_path(5, 0.2, kLam, bad), ParameterError);
    bad = {};
    bad.iterations_per_temperature = 0;
    CHECK_THROWS_AS(optimize_path(5, 0.2, kLam, bad), ParameterError);
}
