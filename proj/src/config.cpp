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


#include "cmda/config.hpp"

#include "cmda/rng.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <concepts>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string_view>

namespace cmda::cli
{
    namespace
    {
        using json = nlohmann::json;
        using ojson = nlohmann::ordered_json;

        // Typed, strict access to one JSON object
        class Reader
        {
        public:
            Reader(const json &j, std::string where, std::initializer_list<std::string_view> keys)
                : j_(j), where_(std::move(where))
            {
                if (!j_.is_object())
                    throw ConfigError(fmt::format("{} must be a JSON object", where_));
                for (const auto &item : j_.items())
                    if (std::find(keys.begin(), keys.end(), item.key()) == keys.end())
                        throw ConfigError(fmt::format("Unknown key '{}' in {}", item.key(), where_));
            }

            const json *find(const char *key) const
            {
                const auto it = j_.find(key);
                return it == j_.end() ? nullptr : &*it;
            }

            void read(const char *key, double &out) const
            {
                if (const json *v = find(key))
                {
                    if (!v->is_number())
                        throw type_error(key, "a number");
                    out = v->get<double>();
                }
            }

            void read(const char *key, std::optional<double> &out) const
            {
                if (const json *v = find(key))
                {
                    if (v->is_null())
                        out.reset();
                    else if (v->is_number())
                        out = v->get<double>();
                    else
                        throw type_error(key, "a number or null");
                }
            }

            void read(const char *key, int &out) const
            {
                if (const json *v = find(key))
                {
                    if (!v->is_number_integer())
                        throw type_error(key, "an integer");
                    out = v->get<int>();
                }
            }

            template <std::unsigned_integral T>
            void read(const char *key, T &out) const
            {
                if (const json *v = find(key))
                {
                    if (!v->is_number_unsigned())
                        throw type_error(key, "a nonnegative integer");
                    out = v->get<T>();
                }
            }

            void read(const char *key, std::optional<std::uint64_t> &out) const
            {
                if (const json *v = find(key))
                {
                    if (v->is_null())
                        out.reset();
                    else if (v->is_number_unsigned())
                        out = v->get<std::uint64_t>();
                    else
                        throw type_error(key, "a nonnegative integer or null");
                }
            }

            void read(const char *key, bool &out) const
            {
                if (const json *v = find(key))
                {
                    if (!v->is_boolean())
                        throw type_error(key, "a boolean");
                    out = v->get<bool>();
                }
            }

            void read(const char *key, std::string &out) const
            {
                if (const json *v = find(key))
                {
                    if (!v->is_string())
                        throw type_error(key, "a string");
                    out = v->get<std::string>();
                }
            }

        private:
            ConfigError type_error(const char *key, const char *what) const
            {
                return ConfigError(fmt::format("{}.{} must be {}", where_, key, what));
            }

            const json &j_;
            std::string where_;
        };

        template <class T>
        ojson optional_json(const std::optional<T> &v)
        {
            return v ? ojson(*v) : ojson(nullptr);
        }

        void require(bool ok, const std::string &message)
        {
            if (!ok)
                throw ConfigError(message);
        }

        pathopt::AnnealingConfig annealing_of(const ExperimentConfig &cfg)
        {
            pathopt::AnnealingConfig a;
            a.initial_temperature = cfg.annealing.initial_temperature;
            a.cooling_factor = cfg.annealing.cooling_factor;
            a.iterations_per_temperature = cfg.annealing.iterations_per_temperature;
            a.temperature_floor = cfg.annealing.temperature_floor;
            a.restarts = cfg.annealing.restarts;
            a.proposal_stddev_scale = cfg.annealing.proposal_stddev_scale;
            a.seed = cfg.annealing.seed.value_or(rng::derive_seed(cfg.master_seed, "anneal", 0));
            return a;
        }
    } // namespace

    ExperimentConfig parse_config(const std::string &json_text)
    {
        json root;
        try
        {
            root = json::parse(json_text);
        }
        catch (const json::parse_error &e)
        {
            throw ConfigError(std::string("Config is not valid JSON: ") + e.what());
        }

        ExperimentConfig cfg;
        const Reader top(root, "config",
                         {"schema_version", "wavelength_m", "path", "delta", "snr_db", "noiseless", "amplitude",
                          "smoother", "annealing", "energy", "trials", "master_seed", "common_random_numbers",
                          "output_dir"});
        if (!top.find("schema_version"))
            throw ConfigError("config.schema_version is required");
        top.read("schema_version", cfg.schema_version);
        top.read("wavelength_m", cfg.wavelength_m);
        top.read("delta", cfg.delta);
        top.read("snr_db", cfg.snr_db);
        top.read("noiseless", cfg.noiseless);
        top.read("amplitude", cfg.amplitude);
        top.read("trials", cfg.trials);
        top.read("master_seed", cfg.master_seed);
        top.read("common_random_numbers", cfg.common_random_numbers);
        top.read("output_dir", cfg.output_dir);

        if (const json *p = top.find("path"))
        {
            const Reader r(*p, "path", {"family", "L_p", "N", "file", "match_mcp_arc_length"});
            r.read("family", cfg.path.family);
            r.read("L_p", cfg.path.L_p);
            r.read("N", cfg.path.N);
            r.read("file", cfg.path.file);
            r.read("match_mcp_arc_length", cfg.path.match_mcp_arc_length);
        }
        if (const json *s = top.find("smoother"))
        {
            const Reader r(*s, "smoother", {"d"});
            r.read("d", cfg.smoother.d);
        }
        if (const json *a = top.find("annealing"))
        {
            const Reader r(*a, "annealing",
                           {"initial_temperature", "cooling_factor", "iterations_per_temperature",
                            "temperature_floor", "restarts", "proposal_stddev_scale", "seed"});
            r.read("initial_temperature", cfg.annealing.initial_temperature);
            r.read("cooling_factor", cfg.annealing.cooling_factor);
            r.read("iterations_per_temperature", cfg.annealing.iterations_per_temperature);
            r.read("temperature_floor", cfg.annealing.temperature_floor);
            r.read("restarts", cfg.annealing.restarts);
            r.read("proposal_stddev_scale", cfg.annealing.proposal_stddev_scale);
            r.read("seed", cfg.annealing.seed);
        }
        if (const json *e = top.find("energy"))
        {
            const Reader r(*e, "energy", {"mass_kg", "cruise_speed_mps", "friction_force_n"});
            r.read("mass_kg", cfg.energy.mass);
            r.read("cruise_speed_mps", cfg.energy.cruise_speed);
            r.read("friction_force_n", cfg.energy.friction_force);
        }

        validate(cfg);
        return cfg;
    }

    ExperimentConfig load_config(const std::filesystem::path &file)
    {
        std::ifstream in(file, std::ios::binary);
        if (!in)
            throw ConfigError("Cannot read config file " + file.string());
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_config(ss.str());
    }

    std::string to_json(const ExperimentConfig &cfg)
    {
        ojson j;
        j["schema_version"] = cfg.schema_version;
        j["wavelength_m"] = cfg.wavelength_m;
        j["path"] = {{"family", cfg.path.family},
                     {"L_p", cfg.path.L_p},
                     {"N", cfg.path.N},
                     {"file", cfg.path.file},
                     {"match_mcp_arc_length", cfg.path.match_mcp_arc_length}};
        j["delta"] = cfg.delta;
        j["snr_db"] = cfg.snr_db;
        j["noiseless"] = cfg.noiseless;
        j["amplitude"] = cfg.amplitude;
        j["smoother"] = {{"d", cfg.smoother.d}};
        j["annealing"] = {{"initial_temperature", optional_json(cfg.annealing.initial_temperature)},
                          {"cooling_factor", cfg.annealing.cooling_factor},
                          {"iterations_per_temperature", cfg.annealing.iterations_per_temperature},
                          {"temperature_floor", optional_json(cfg.annealing.temperature_floor)},
                          {"restarts", cfg.annealing.restarts},
                          {"proposal_stddev_scale", cfg.annealing.proposal_stddev_scale},
                          {"seed", optional_json(cfg.annealing.seed)}};
        j["energy"] = {{"mass_kg", cfg.energy.mass},
                       {"cruise_speed_mps", cfg.energy.cruise_speed},
                       {"friction_force_n", cfg.energy.friction_force}};
        j["trials"] = cfg.trials;
        j["master_seed"] = cfg.master_seed;
        j["common_random_numbers"] = cfg.common_random_numbers;
        j["output_dir"] = cfg.output_dir;
        return j.dump(2) + "\n";
    }

    void validate(const ExperimentConfig &cfg)
    {
        require(cfg.schema_version == kSchemaVersion,
                fmt::format("Unsupported schema_version {} (expected {})", cfg.schema_version, kSchemaVersion));
        const auto positive = [](double v) { return v > 0.0 && std::isfinite(v); };
        require(positive(cfg.wavelength_m), "wavelength_m must be positive");
        require(positive(cfg.path.L_p), "path.L_p must be positive");
        require(cfg.path.N >= 2, "path.N must be at least 2");
        require(positive(cfg.delta), "delta must be positive");
        require(positive(cfg.smoother.d), "smoother.d must be positive");
        require(positive(cfg.amplitude), "amplitude must be positive");
        require(cfg.noiseless || std::isfinite(cfg.snr_db), "snr_db must be finite unless noiseless");
        require(positive(cfg.energy.mass) && positive(cfg.energy.cruise_speed) && positive(cfg.energy.friction_force),
                "energy parameters must be positive");
        require(cfg.trials >= 1, "trials must be at least 1");
        require(!cfg.output_dir.empty(), "output_dir must not be empty");
        try
        {
            const auto family = sim::parse_path_family(cfg.path.family);
            require(family != sim::PathFamily::file || !cfg.path.file.empty(), "path.file is required for family 'file'");
            annealing_of(cfg).validate();
        }
        catch (const ParameterError &e)
        {
            throw ConfigError(e.what());
        }
    }

    sim::Experiment to_experiment(const ExperimentConfig &cfg, unsigned threads)
    {
        validate(cfg);
        const double lam = cfg.wavelength_m;
        sim::Experiment e;
        e.lam = Wavelength(lam);
        e.family = sim::parse_path_family(cfg.path.family);
        e.path_length = cfg.path.L_p * lam;
        e.N = cfg.path.N;
        e.annealing = annealing_of(cfg);
        e.annealing.threads = threads;
        e.path_file = cfg.path.file;
        e.match_mcp_arc_length = cfg.path.match_mcp_arc_length;
        e.delta = cfg.delta * lam;
        if (cfg.noiseless)
            e.snr_db.reset();
        else
            e.snr_db = cfg.snr_db;
        e.amplitude = cfg.amplitude;
        e.d = cfg.smoother.d * lam;
        e.energy = cfg.energy;
        return e;
    }

} // namespace cmda::cli
