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


#include "cmda/sim.hpp"

#include "cmda/rng.hpp"

#include <fmt/format.h>

#include <cmath>
#include <thread>

namespace cmda::sim
{
    namespace
    {
        template <class Plan>
        MonteCarloResult run_trials(const Plan &plan, std::size_t trials, std::uint64_t master_seed, unsigned threads)
        {
            if (trials < 1)
                throw ParameterError("Monte Carlo needs at least one trial");
            MonteCarloResult out;
            out.trials.resize(trials);

            const auto worker = [&](std::size_t begin, std::size_t end) {
                for (std::size_t i = begin; i < end; ++i)
                    out.trials[i] = plan.run(trial_seed(master_seed, i));
            };

            const std::size_t workers = std::min<std::size_t>(std::max(threads, 1u), trials);
            if (workers == 1)
            {
                worker(0, trials);
            }
            else
            {
                std::vector<std::jthread> pool;
                const std::size_t chunk = (trials + workers - 1) / workers;
                for (std::size_t w = 0; w < workers; ++w)
                {
                    const std::size_t begin = w * chunk;
                    const std::size_t end = std::min(trials, begin + chunk);
                    if (begin < end)
                        pool.emplace_back(worker, begin, end);
                }
            }
            out.summary = summarize(out.trials);
            return out;
        }

        std::uint64_t field_seed(std::uint64_t trial) { return rng::derive_seed(trial, "field", 0); }
        std::uint64_t noise_seed(std::uint64_t trial) { return rng::derive_seed(trial, "noise", 0); }
    } // namespace

    void EnergyModel::validate() const
    {
        if (!(mass > 0.0) || !(cruise_speed > 0.0) || !(friction_force > 0.0))
            throw ParameterError("Energy model parameters must all be positive");
    }

    SummaryStats summarize(std::span<const TrialResult> results)
    {
        SummaryStats s;
        s.trials = results.size();
        if (results.empty())
            return s;
        s.M = results.front().M;

        double sp = 0.0, se = 0.0;
        for (const auto &r : results)
        {
            sp += r.true_power;
            se += r.energy;
        }
        const double n = double(results.size());
        s.mean_power = sp / n;
        s.mean_energy = se / n;
        if (results.size() > 1)
        {
            double vp = 0.0, ve = 0.0;
            for (const auto &r : results)
            {
                vp += (r.true_power - s.mean_power) * (r.true_power - s.mean_power);
                ve += (r.energy - s.mean_energy) * (r.energy - s.mean_energy);
            }
            s.stderr_power = std::sqrt(vp / (n - 1.0) / n);
            s.stderr_energy = std::sqrt(ve / (n - 1.0) / n);
        }
        return s;
    }

    std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t index)
    {
        return rng::derive_seed(master_seed, "trial", index);
    }

    CmdaPlan::CmdaPlan(const TrialConfig &cfg)
        : sampling_(geometry::sample_uniform(cfg.path, cfg.delta)),
          field_(fading::correlation_matrix(sampling_.points, cfg.smoother.lam, cfg.smoother.model)),
          smoother_(sampling_.points, cfg.smoother),
          noise_(cfg.smoother.noise),
          energy_(cfg.energy),
          path_length_(cfg.path.length()),
          end_(cfg.path.end_point())
    {
        energy_.validate();
    }

    TrialResult CmdaPlan::run(std::uint64_t seed) const
    {
        const fading::FieldRealization h = field_.sample(field_seed(seed));
        const Eigen::VectorXcd z = fading::observe(h, noise_, noise_seed(seed));
        const estimation::EstimateSet est = smoother_.apply(z);
        const estimation::Selection pick = estimation::select_qopt(est, sampling_);

        TrialResult r;
        r.q_opt = pick.position;
        r.q_index = pick.index;
        r.true_power = std::norm(h.gains(Eigen::Index(pick.index)));
        r.positioning_distance = distance(end_, pick.position);
        // one start for exploration, one for positioning
        r.energy = 2.0 * energy_.start_cost() + energy_.friction_force * (path_length_ + r.positioning_distance);
        r.M = sampling_.size();
        return r;
    }

    TrialResult run_cmda_trial(const TrialConfig &cfg) { return CmdaPlan(cfg).run(cfg.seed); }

    namespace
    {
        estimation::SmootherConfig averaged(estimation::SmootherConfig cfg, int measurements)
        {
            if (measurements < 1)
                throw ParameterError("At least one measurement per stop is required");
            cfg.noise.noise_variance /= double(measurements);
            return cfg;
        }

        const std::vector<Point2D> &nonempty(const std::vector<Point2D> &points)
        {
            if (points.empty())
                throw ParameterError("Stopping-point MDA needs at least one stop");
            return points;
        }
    } // namespace

    StoppingPlan::StoppingPlan(const StoppingConfig &cfg)
        : points_(nonempty(cfg.points)),
          measurements_(cfg.measurements_per_stop),
          field_(fading::correlation_matrix(points_, cfg.smoother.lam, cfg.smoother.model)),
          smoother_(points_, averaged(cfg.smoother, cfg.measurements_per_stop)),
          noise_(cfg.smoother.noise),
          energy_(cfg.energy),
          tour_length_(0.0)
    {
        energy_.validate();
        for (std::size_t i = 0; i + 1 < points_.size(); ++i)
            tour_length_ += distance(points_[i], points_[i + 1]);
    }

    TrialResult StoppingPlan::run(std::uint64_t seed) const
    {
        const fading::FieldRealization h = field_.sample(field_seed(seed));

        // Average `measurements_` noisy tone observations at every stop
        const auto M = h.gains.size();
        Eigen::VectorXcd z = noise_.amplitude * h.gains;
        if (noise_.noise_variance > 0.0)
        {
            rng::Stream stream(noise_seed(seed));
            for (Eigen::Index k = 0; k < M; ++k)
            {
                std::complex<double> acc = 0.0;
                for (int m = 0; m < measurements_; ++m)
                    acc += stream.complex_normal(noise_.noise_variance);
                z(k) += acc / double(measurements_);
            }
        }

        const estimation::EstimateSet est = smoother_.apply(z);
        const estimation::Selection pick = estimation::select_qopt(est, points_);

        TrialResult r;
        r.q_opt = pick.position;
        r.q_index = pick.index;
        r.true_power = std::norm(h.gains(Eigen::Index(pick.index)));
        r.positioning_distance = distance(points_.back(), pick.position);
        r.energy = double(points_.size()) * energy_.start_cost() +
                   energy_.friction_force * (tour_length_ + r.positioning_distance);
        r.M = points_.size();
        return r;
    }

    TrialResult run_stopping_trial(const StoppingConfig &cfg, std::uint64_t seed)
    {
        return StoppingPlan(cfg).run(seed);
    }

    MonteCarloResult monte_carlo(const CmdaPlan &plan, std::size_t trials, std::uint64_t master_seed, unsigned threads)
    {
        return run_trials(plan, trials, master_seed, threads);
    }

    MonteCarloResult monte_carlo(const StoppingPlan &plan, std::size_t trials, std::uint64_t master_seed,
                                 unsigned threads)
    {
        return run_trials(plan, trials, master_seed, threads);
    }

    MonteCarloResult monte_carlo(const TrialConfig &tmpl, std::size_t trials, std::uint64_t master_seed,
                                 unsigned threads)
    {
        return run_trials(CmdaPlan(tmpl), trials, master_seed, threads);
    }

} // namespace cmda::sim
