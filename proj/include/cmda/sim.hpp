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


#ifndef CMDA_SIM_HPP
#define CMDA_SIM_HPP

#include "cmda/estimation.hpp"
#include "cmda/fading.hpp"
#include "cmda/geometry.hpp"

#include <cstdint>
#include <span>
#include <vector>

// Monte Carlo evaluation of continuous and stopping-point mobility diversity
namespace cmda::sim
{
    // Kinetic energy injected at every start from rest (fully dissipated when stopping)
    // plus a constant friction force over the travelled distance.
    struct EnergyModel
    {
        double mass = 1.0;           // kg
        double cruise_speed = 0.5;   // m/s
        double friction_force = 1.0; // N

        double start_cost() const { return 0.5 * mass * cruise_speed * cruise_speed; }
        void validate() const;

        friend bool operator==(const EnergyModel &, const EnergyModel &) = default;
    };

    struct TrialConfig
    {
        geometry::OrientedPath path;
        double delta;                       // requested sampling distance, meters
        estimation::SmootherConfig smoother;
        EnergyModel energy;
        std::uint64_t seed = 0;
    };

    struct TrialResult
    {
        Point2D q_opt;
        std::size_t q_index = 0;
        double true_power = 0.0; // |h(q_opt)|^2 of the true field
        double energy = 0.0;     // J
        double positioning_distance = 0.0;
        std::size_t M = 0;
    };

    struct SummaryStats
    {
        double mean_power = 0.0;
        double mean_energy = 0.0;
        double stderr_power = 0.0;
        double stderr_energy = 0.0;
        std::size_t trials = 0;
        std::size_t M = 0;
    };

    SummaryStats summarize(std::span<const TrialResult> results);

    // Everything about a continuous-path trial that does not depend on the seed:
    // sampling points, field factor and smoother weights.
    class CmdaPlan
    {
    public:
        explicit CmdaPlan(const TrialConfig &cfg);

        // Explore, smooth, pick q_opt, reposition. `trial_seed` keys the field and noise streams.
        TrialResult run(std::uint64_t trial_seed) const;

        const geometry::SamplingSet &sampling() const { return sampling_; }
        const estimation::Smoother &smoother() const { return smoother_; }
        const fading::FieldSampler &field() const { return field_; }

    private:
        geometry::SamplingSet sampling_;
        fading::FieldSampler field_;
        estimation::Smoother smoother_;
        fading::NoiseModel noise_;
        EnergyModel energy_;
        double path_length_;
        Point2D end_;
    };

    TrialResult run_cmda_trial(const TrialConfig &cfg);

    struct StoppingConfig
    {
        std::vector<Point2D> points;  // visited in order
        int measurements_per_stop = 1;
        estimation::SmootherConfig smoother;
        EnergyModel energy;
    };

    class StoppingPlan
    {
    public:
        explicit StoppingPlan(const StoppingConfig &cfg);

        TrialResult run(std::uint64_t trial_seed) const;

    private:
        std::vector<Point2D> points_;
        int measurements_;
        fading::FieldSampler field_;
        estimation::Smoother smoother_;
        fading::NoiseModel noise_;
        EnergyModel energy_;
        double tour_length_;
    };

    TrialResult run_stopping_trial(const StoppingConfig &cfg, std::uint64_t seed);

    // Stream key of trial `index` under `master_seed`
    std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t index);

    struct MonteCarloResult
    {
        SummaryStats summary;
        std::vector<TrialResult> trials;
    };

    // Trials may run on `threads` workers; results are stored by trial index and reduced
    // in index order, so output is identical for any thread count.
    MonteCarloResult monte_carlo(const CmdaPlan &plan, std::size_t trials, std::uint64_t master_seed,
                                 unsigned threads = 1);
    MonteCarloResult monte_carlo(const StoppingPlan &plan, std::size_t trials, std::uint64_t master_seed,
                                 unsigned threads = 1);
    MonteCarloResult monte_carlo(const TrialConfig &tmpl, std::size_t trials, std::uint64_t master_seed,
                                 unsigned threads = 1);

} // namespace cmda::sim

#endif
