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


#include "cmda/pathopt.hpp"

#include "cmda/bessel.hpp"
#include "cmda/rng.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <thread>

namespace cmda::pathopt
{
    namespace
    {
        double wrap_angle(double a)
        {
            a = std::fmod(a, kTwoPi);
            if (a < 0.0)
                a += kTwoPi;
            if (a >= kTwoPi)
                a = 0.0;
            return a;
        }

        struct RestartOutcome
        {
            std::vector<double> psi;
            double cost = 0.0;
            long long iterations = 0;
        };

        // One annealing chain over psi_2..psi_{N-1}, started from the straight line.
        // Moving psi_j translates the tail d_{j+1..N} rigidly, so only the cross pairs
        // between head and tail change cost.
        RestartOutcome anneal_chain(std::size_t N, double seg, Wavelength lam, double T0, double T_floor,
                                    const AnnealingConfig &cfg, std::uint64_t key)
        {
            const double k = kTwoPi / lam.meters();
            const auto corr2 = [k](Point2D a, Point2D b) {
                const double r = bessel_j0(k * distance(a, b));
                return r * r;
            };

            std::vector<double> psi(N - 1, 0.0);
            std::vector<Point2D> dir(N - 1, Point2D{1.0, 0.0});
            std::vector<Point2D> P(N);
            for (std::size_t j = 0; j + 1 < N; ++j)
                P[j + 1] = P[j] + seg * dir[j];

            std::vector<double> G(N * N);
            double cost = 0.0;
            for (std::size_t m = 0; m < N; ++m)
                for (std::size_t n = 0; n < N; ++n)
                {
                    G[m * N + n] = m == n ? 1.0 : corr2(P[m], P[n]);
                    cost += G[m * N + n];
                }

            const auto full_cost = [&] { return path_cost(P, lam); };

            RestartOutcome best{psi, full_cost(), 0};
            cost = best.cost;

            const std::size_t free_count = N - 2;
            if (free_count == 0)
                return best;

            rng::Stream stream(key);
            std::vector<Point2D> cand(N);
            std::vector<double> cross(N * N);

            for (double T = T0; T >= T_floor; T *= cfg.cooling_factor)
            {
                const double sd = cfg.proposal_stddev_scale * std::sqrt(T / T0) * std::numbers::pi;
                for (int it = 0; it < cfg.iterations_per_temperature; ++it)
                {
                    ++best.iterations;
                    const std::size_t j = 1 + std::size_t(stream() % free_count);
                    const double proposed = wrap_angle(psi[j] + sd * stream.normal());
                    const Point2D new_dir{std::cos(proposed), std::sin(proposed)};

                    cand[j + 1] = P[j] + seg * new_dir;
                    for (std::size_t t = j + 2; t < N; ++t)
                        cand[t] = cand[t - 1] + seg * dir[t - 1];

                    double delta = 0.0;
                    for (std::size_t m = 0; m <= j; ++m)
                        for (std::size_t n = j + 1; n < N; ++n)
                        {
                            const double v = corr2(P[m], cand[n]);
                            cross[m * N + n] = v;
                            delta += v - G[m * N + n];
                        }
                    delta *= 2.0;

                    const bool accept = delta <= 0.0 || stream.uniform() < std::exp(-delta / T);
                    if (!accept)
                        continue;

                    psi[j] = proposed;
                    dir[j] = new_dir;
                    for (std::size_t t = j + 1; t < N; ++t)
                        P[t] = cand[t];
                    for (std::size_t m = 0; m <= j; ++m)
                        for (std::size_t n = j + 1; n < N; ++n)
                        {
                            G[m * N + n] = cross[m * N + n];
                            G[n * N + m] = cross[m * N + n];
                        }
                    cost += delta;

                    if (cost < best.cost * (1.0 - 1e-12))
                    {
                        cost = full_cost();
                        if (cost < best.cost * (1.0 - 1e-12))
                        {
                            best.psi = psi;
                            best.cost = cost;
                        }
                    }
                }
                cost = full_cost(); // drop accumulated rounding from incremental updates
            }
            return best;
        }
    } // namespace

    void HeadingAngles::validate() const
    {
        for (double a : psi)
            if (!(a >= 0.0 && a < kTwoPi))
                throw ParameterError(fmt::format("Heading angle {} outside [0, 2pi)", a));
    }

    PathPoints::PathPoints(std::vector<Point2D> points, double path_length, Wavelength lam)
        : points_(std::move(points)), segment_length_(0.0), lam_(lam)
    {
        if (points_.size() < 2)
            throw ParameterError("A path needs at least two points");
        if (!(path_length > 0.0) || !std::isfinite(path_length))
            throw ParameterError("Path length must be positive");
        segment_length_ = path_length / double(points_.size() - 1);
        for (std::size_t j = 0; j + 1 < points_.size(); ++j)
        {
            const double chord = distance(points_[j], points_[j + 1]);
            if (std::abs(chord - segment_length_) > 1e-9 * segment_length_)
                throw ParameterError(fmt::format("Segment {} has length {} but {} is required", j, chord,
                                                 segment_length_));
        }
    }

    void AnnealingConfig::validate() const
    {
        if (initial_temperature && !(*initial_temperature > 0.0))
            throw ParameterError("Annealing initial temperature must be positive");
        if (!(cooling_factor > 0.0 && cooling_factor < 1.0))
            throw ParameterError("Annealing cooling factor must lie in (0, 1)");
        if (iterations_per_temperature < 1)
            throw ParameterError("Annealing needs at least one iteration per temperature");
        if (temperature_floor && !(*temperature_floor > 0.0))
            throw ParameterError("Annealing temperature floor must be positive");
        if (restarts < 1)
            throw ParameterError("Annealing needs at least one restart");
        if (!(proposal_stddev_scale > 0.0))
            throw ParameterError("Annealing proposal scale must be positive");
    }

    PathPoints angles_to_points(const HeadingAngles &psi, double path_length, std::size_t N, Wavelength lam,
                                Point2D origin)
    {
        if (N < 2)
            throw ParameterError("A path needs at least two points");
        if (psi.psi.size() != N - 1)
            throw ParameterError(fmt::format("Expected {} heading angles, got {}", N - 1, psi.psi.size()));
        if (!(path_length > 0.0))
            throw ParameterError("Path length must be positive");

        const double seg = path_length / double(N - 1);
        std::vector<Point2D> pts(N);
        pts[0] = origin;
        for (std::size_t j = 0; j + 1 < N; ++j)
            pts[j + 1] = pts[j] + seg * Point2D{std::cos(psi.psi[j]), std::sin(psi.psi[j])};
        return PathPoints(std::move(pts), path_length, lam);
    }

    double path_cost(std::span<const Point2D> points, Wavelength lam)
    {
        const double k = kTwoPi / lam.meters();
        const std::size_t n = points.size();
        double off = 0.0;
        for (std::size_t m = 0; m < n; ++m)
            for (std::size_t q = m + 1; q < n; ++q)
            {
                const double r = bessel_j0(k * distance(points[m], points[q]));
                off += r * r;
            }
        return double(n) + 2.0 * off;
    }

    double path_cost(const PathPoints &D) { return path_cost(D.points(), D.wavelength()); }

    bool is_straight_line_regime(double path_length, Wavelength lam)
    {
        if (!(path_length > 0.0))
            throw ParameterError("Path length must be positive");
        // 1e-6 slack admits z0 quoted to five digits (0.38274)
        return path_length / lam.meters() <= kZeroCorrelationDistance * (1.0 + 1e-6);
    }

    OptimizedPath optimize_path(std::size_t N, double path_length, Wavelength lam, const AnnealingConfig &cfg)
    {
        if (N < 2)
            throw ParameterError("A path needs at least two points");
        if (!(path_length > 0.0) || !std::isfinite(path_length))
            throw ParameterError("Path length must be positive");
        cfg.validate();

        HeadingAngles straight{std::vector<double>(N - 1, 0.0)};
        PathPoints line = angles_to_points(straight, path_length, N, lam);
        const double line_cost = path_cost(line);

        if (is_straight_line_regime(path_length, lam) || N == 2)
        {
            const bool analytic = is_straight_line_regime(path_length, lam);
            return {std::move(line), std::move(straight), {line_cost, 0, 0}, analytic};
        }

        const double T0 = cfg.initial_temperature.value_or(line_cost / double(N));
        const double T_floor = cfg.temperature_floor.value_or(1e-6 * T0);
        const double seg = path_length / double(N - 1);

        std::vector<RestartOutcome> outcomes(std::size_t(cfg.restarts));
        const auto run = [&](std::size_t r) {
            outcomes[r] = anneal_chain(N, seg, lam, T0, T_floor, cfg, rng::derive_seed(cfg.seed, "anneal", r));
        };

        const unsigned workers = std::clamp(cfg.threads, 1u, unsigned(cfg.restarts));
        if (workers == 1)
        {
            for (std::size_t r = 0; r < outcomes.size(); ++r)
                run(r);
        }
        else
        {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < workers; ++w)
                pool.emplace_back([&, w] {
                    for (std::size_t r = w; r < outcomes.size(); r += workers)
                        run(r);
                });
        }

        // Lowest cost wins, ties go to the lowest restart index
        std::size_t winner = 0;
        long long iterations = 0;
        for (std::size_t r = 0; r < outcomes.size(); ++r)
        {
            iterations += outcomes[r].iterations;
            if (outcomes[r].cost < outcomes[winner].cost)
                winner = r;
        }

        HeadingAngles angles{outcomes[winner].psi};
        PathPoints best = angles_to_points(angles, path_length, N, lam);
        const double cost = path_cost(best);
        return {std::move(best), std::move(angles), {cost, iterations, cfg.restarts}, false};
    }

} // namespace cmda::pathopt
