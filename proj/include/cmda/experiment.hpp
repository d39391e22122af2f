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


#ifndef CMDA_EXPERIMENT_HPP
#define CMDA_EXPERIMENT_HPP

#include "cmda/pathopt.hpp"
#include "cmda/sim.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace cmda::sim
{
    enum class PathFamily
    {
        mcp,
        linear,
        circular,
        file,
    };

    PathFamily parse_path_family(std::string_view name);
    std::string_view to_string(PathFamily family);

    // Physical description of one experiment point. Lengths in meters.
    struct Experiment
    {
        Wavelength lam{0.1402};
        PathFamily family = PathFamily::mcp;
        double path_length = 1.5 * 0.1402; // L_p
        std::size_t N = 25;
        pathopt::AnnealingConfig annealing;
        std::filesystem::path path_file;   // family == file
        bool match_mcp_arc_length = true;  // linear/circular take the arc length of the MCP designed for L_p
        double delta = 0.05 * 0.1402;
        std::optional<double> snr_db = 10.0; // nullopt: noiseless
        double amplitude = 1.0;
        double d = 0.3828 * 0.1402;
        EnergyModel energy;
        fading::CorrelationModel model = fading::CorrelationModel::jakes;

        fading::NoiseModel noise() const;
        estimation::SmootherConfig smoother() const;
    };

    // Memo of optimized paths, keyed by everything that determines the annealing output
    class PathCache
    {
    public:
        const pathopt::OptimizedPath &get(std::size_t N, double path_length, Wavelength lam,
                                          const pathopt::AnnealingConfig &cfg);

    private:
        using Key = std::tuple<std::size_t, double, double, double, double, int, double, int, double, std::uint64_t>;
        std::map<Key, pathopt::OptimizedPath> entries_;
    };

    struct BuiltPath
    {
        geometry::OrientedPath path;
        std::optional<pathopt::OptimizedPath> design; // set for the mcp family
    };

    BuiltPath build_path(const Experiment &e, PathCache &cache);

    TrialConfig trial_config(const Experiment &e, PathCache &cache);

    enum class SweepAxis
    {
        path_length,
        delta,
        snr_db,
        d_radius,
        path_family,
    };

    SweepAxis parse_sweep_axis(std::string_view name);
    std::string_view to_string(SweepAxis axis);

    // Apply one sweep value to a copy of `base`. Lengths are given in wavelengths;
    // snr_db accepts "noiseless".
    Experiment apply_sweep_value(const Experiment &base, SweepAxis axis, const std::string &value);

    struct SweepRow
    {
        std::string value;
        SummaryStats stats;
        double arc_length = 0.0; // L_p' of the simulated path, meters
    };

    struct SweepOptions
    {
        std::size_t trials = 1000;
        std::uint64_t master_seed = 1;
        bool common_random_numbers = true; // same per-trial seeds for every value
        unsigned threads = 1;
    };

    std::vector<SweepRow> sweep(SweepAxis axis, const std::vector<std::string> &values, const Experiment &base,
                                const SweepOptions &opts, PathCache &cache);

} // namespace cmda::sim

#endif
