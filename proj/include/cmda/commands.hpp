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


#ifndef CMDA_COMMANDS_HPP
#define CMDA_COMMANDS_HPP

#include "cmda/config.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace cmda::cli
{
    inline constexpr int kExitOk = 0;
    inline constexpr int kExitRuntime = 1;
    inline constexpr int kExitConfig = 2;

    // Command-line overrides applied on top of the config file
    struct Overrides
    {
        std::optional<std::uint64_t> seed;
        std::optional<std::size_t> trials;
        std::optional<std::string> out;
        unsigned threads = 1;
    };

    ExperimentConfig apply_overrides(ExperimentConfig cfg, const Overrides &o);

    // Each command writes into cfg.output_dir and reports on `out`.
    // Errors propagate as ConfigError / ParameterError (exit 2) or other exceptions (exit 1).
    void cmd_optimize(const ExperimentConfig &cfg, unsigned threads, std::ostream &out);
    void cmd_simulate(const ExperimentConfig &cfg, unsigned threads, std::ostream &out);
    void cmd_sweep(const ExperimentConfig &cfg, const std::string &axis, const std::vector<std::string> &values,
                   unsigned threads, std::ostream &out);

    // Full command line (args[0] is the program name); returns the process exit code
    int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace cmda::cli

#endif
