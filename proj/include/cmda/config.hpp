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


#ifndef CMDA_CONFIG_HPP
#define CMDA_CONFIG_HPP

#include "cmda/experiment.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

namespace cmda::cli
{
    // Malformed or out-of-range experiment configuration (exit code 2)
    class ConfigError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    inline constexpr int kSchemaVersion = 1;

    // Experiment description as read from JSON. Lengths (path.L_p, delta, smoother.d)
    // are in wavelengths; the wavelength itself is in meters.
    struct ExperimentConfig
    {
        int schema_version = kSchemaVersion;
        double wavelength_m = 0.1402;

        struct Path
        {
            std::string family = "mcp";
            double L_p = 1.5;
            std::size_t N = 25;
            std::string file;
            bool match_mcp_arc_length = true;

            friend bool operator==(const Path &, const Path &) = default;
        } path;

        double delta = 0.05;
        double snr_db = 10.0;
        bool noiseless = false;
        double amplitude = 1.0;

        struct Smoother
        {
            double d = 0.3828;

            friend bool operator==(const Smoother &, const Smoother &) = default;
        } smoother;

        struct Annealing
        {
            std::optional<double> initial_temperature;
            double cooling_factor = 0.97;
            int iterations_per_temperature = 200;
            std::optional<double> temperature_floor;
            int restarts = 8;
            double proposal_stddev_scale = 0.5;
            std::optional<std::uint64_t> seed; // default: derived from master_seed

            friend bool operator==(const Annealing &, const Annealing &) = default;
        } annealing;

        sim::EnergyModel energy;

        std::size_t trials = 10000;
        std::uint64_t master_seed = 1;
        bool common_random_numbers = true;
        std::string output_dir = "out";

        friend bool operator==(const ExperimentConfig &, const ExperimentConfig &) = default;
    };

    // Strict parse: unknown keys, wrong types and invalid values raise ConfigError.
    // Missing keys take the defaults above.
    ExperimentConfig parse_config(const std::string &json_text);
    ExperimentConfig load_config(const std::filesystem::path &file);

    // Every field, in schema order
    std::string to_json(const ExperimentConfig &cfg);

    void validate(const ExperimentConfig &cfg);

    sim::Experiment to_experiment(const ExperimentConfig &cfg, unsigned threads = 1);

} // namespace cmda::cli

#endif
