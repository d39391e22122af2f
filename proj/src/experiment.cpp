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


#include "cmda/experiment.hpp"

#include "cmda/path_io.hpp"
#include "cmda/rng.hpp"

#include <fmt/format.h>

#include <charconv>
#include <cmath>

namespace cmda::sim
{
    namespace
    {
        double parse_number(const std::string &text)
        {
            double v = 0.0;
            const auto *first = text.data();
            const auto *last = text.data() + text.size();
            const auto [ptr, ec] = std::from_chars(first, last, v);
            if (ec != std::errc() || ptr != last || !std::isfinite(v))
                throw ParameterError(fmt::format("'{}' is not a finite number", text));
            return v;
        }
    } // namespace

    PathFamily parse_path_family(std::string_view name)
    {
        if (name == "mcp")
            return PathFamily::mcp;
        if (name == "linear")
            return PathFamily::linear;
        if (name == "circular")
            return PathFamily::circular;
        if (name == "file")
            return PathFamily::file;
        throw ParameterError(fmt::format("Unknown path family '{}' (expected mcp, linear, circular or file)", name));
    }

    std::string_view to_string(PathFamily family)
    {
        switch (family)
        {
        case PathFamily::mcp: return "mcp";
        case PathFamily::linear: return "linear";
        case PathFamily::circular: return "circular";
        case PathFamily::file: return "file";
        }
        return "?";
    }

    fading::NoiseModel Experiment::noise() const
    {
        return snr_db ? fading::NoiseModel::from_snr_db(*snr_db, amplitude) : fading::NoiseModel::noiseless(amplitude);
    }

    estimation::SmootherConfig Experiment::smoother() const
    {
        return {d, noise(), lam, model};
    }

    const pathopt::OptimizedPath &PathCache::get(std::size_t N, double path_length, Wavelength lam,
                                                 const pathopt::AnnealingConfig &cfg)
    {
        const Key key{N,
                      path_length,
                      lam.meters(),
                      cfg.initial_temperature.value_or(-1.0),
                      cfg.cooling_factor,
                      cfg.iterations_per_temperature,
                      cfg.temperature_floor.value_or(-1.0),
                      cfg.restarts,
                      cfg.proposal_stddev_scale,
                      cfg.seed};
        auto it = entries_.find(key);
        if (it == entries_.end())
            it = entries_.emplace(key, pathopt::optimize_path(N, path_length, lam, cfg)).first;
        return it->second;
    }

    BuiltPath build_path(const Experiment &e, PathCache &cache)
    {
        switch (e.family)
        {
        case PathFamily::mcp:
        {
            const auto &opt = cache.get(e.N, e.path_length, e.lam, e.annealing);
            return {geometry::choose_orientation(geometry::fit_spline(opt.path)), opt};
        }
        case PathFamily::linear:
        case PathFamily::circular:
        {
            double length = e.path_length;
            if (e.match_mcp_arc_length)
                length = geometry::fit_spline(cache.get(e.N, e.path_length, e.lam, e.annealing).path).length();
            if (e.family == PathFamily::linear)
                return {geometry::choose_orientation(geometry::linear_path(length)), std::nullopt};
            return {geometry::OrientedPath(geometry::circular_path(length)), std::nullopt};
        }
        case PathFamily::file:
        {
            if (e.path_file.empty())
                throw ParameterError("Path family 'file' needs path.file");
            const geometry::PathRecord rec = geometry::read_path_json(e.path_file);
            return {geometry::choose_orientation(geometry::fit_spline(rec.knots)), std::nullopt};
        }
        }
        throw ParameterError("Unknown path family");
    }

    TrialConfig trial_config(const Experiment &e, PathCache &cache)
    {
        return TrialConfig{build_path(e, cache).path, e.delta, e.smoother(), e.energy, 0};
    }

    SweepAxis parse_sweep_axis(std::string_view name)
    {
        if (name == "path_length")
            return SweepAxis::path_length;
        if (name == "delta")
            return SweepAxis::delta;
        if (name == "snr_db")
            return SweepAxis::snr_db;
        if (name == "d_radius")
            return SweepAxis::d_radius;
        if (name == "path_family")
            return SweepAxis::path_family;
        throw ParameterError(fmt::format(
            "Unknown sweep axis '{}' (expected path_length, delta, snr_db, d_radius or path_family)", name));
    }

    std::string_view to_string(SweepAxis axis)
    {
        switch (axis)
        {
        case SweepAxis::path_length: return "path_length";
        case SweepAxis::delta: return "delta";
        case SweepAxis::snr_db: return "snr_db";
        case SweepAxis::d_radius: return "d_radius";
        case SweepAxis::path_family: return "path_family";
        }
        return "?";
    }

    Experiment apply_sweep_value(const Experiment &base, SweepAxis axis, const std::string &value)
    {
        Experiment e = base;
        const double lam = base.lam.meters();
        const auto positive = [&](double v) {
            if (!(v > 0.0))
                throw ParameterError(fmt::format("Sweep value {} must be positive", value));
            return v;
        };
        switch (axis)
        {
        case SweepAxis::path_length:
            if (base.family == PathFamily::file)
                throw ParameterError("Cannot sweep path_length for a path loaded from file");
            e.path_length = positive(parse_number(value)) * lam;
            break;
        case SweepAxis::delta:
            e.delta = positive(parse_number(value)) * lam;
            break;
        case SweepAxis::snr_db:
            if (value == "noiseless")
                e.snr_db.reset();
            else
                e.snr_db = parse_number(value);
            break;
        case SweepAxis::d_radius:
            e.d = positive(parse_number(value)) * lam;
            break;
        case SweepAxis::path_family:
            e.family = parse_path_family(value);
            break;
        }
        return e;
    }

    std::vector<SweepRow> sweep(SweepAxis axis, const std::vector<std::string> &values, const Experiment &base,
                                const SweepOptions &opts, PathCache &cache)
    {
        if (values.empty())
            throw ParameterError("Sweep needs at least one value");

        // Validate every value before spending time on any of them
        std::vector<Experiment> points;
        points.reserve(values.size());
        for (const auto &v : values)
            points.push_back(apply_sweep_value(base, axis, v));

        std::vector<SweepRow> rows;
        rows.reserve(values.size());
        for (std::size_t i = 0; i < points.size(); ++i)
        {
            const std::uint64_t master =
                opts.common_random_numbers ? opts.master_seed : rng::derive_seed(opts.master_seed, "sweep", i);
            const TrialConfig cfg = trial_config(points[i], cache);
            const CmdaPlan plan(cfg);
            rows.push_back({values[i], monte_carlo(plan, opts.trials, master, opts.threads).summary, cfg.path.length()});
        }
        return rows;
    }

} // namespace cmda::sim
