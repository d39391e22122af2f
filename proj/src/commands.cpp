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


#include "cmda/commands.hpp"

#include "cmda/path_io.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <fstream>

namespace cmda::cli
{
    namespace
    {
        namespace fs = std::filesystem;
        using ojson = nlohmann::ordered_json;

        fs::path prepare_output(const ExperimentConfig &cfg)
        {
            const fs::path dir(cfg.output_dir);
            fs::create_directories(dir);
            return dir;
        }

        void write_text(const fs::path &file, const std::string &text)
        {
            std::ofstream f(file, std::ios::binary);
            if (!f)
                throw std::runtime_error("Cannot write " + file.string());
            f << text;
        }

        ojson summary_json(const sim::SummaryStats &s)
        {
            ojson j;
            j["mean_power"] = s.mean_power;
            j["stderr_power"] = s.stderr_power;
            j["mean_energy"] = s.mean_energy;
            j["stderr_energy"] = s.stderr_energy;
            j["trials"] = s.trials;
            j["M"] = s.M;
            return j;
        }

        ojson experiment_json(const ExperimentConfig &cfg, const sim::Experiment &e, double arc_length)
        {
            ojson j;
            j["family"] = std::string(sim::to_string(e.family));
            j["wavelength_m"] = e.lam.meters();
            j["L_p_m"] = e.path_length;
            j["L_p_prime_m"] = arc_length;
            j["delta_m"] = e.delta;
            j["d_m"] = e.d;
            j["noiseless"] = !e.snr_db.has_value();
            j["snr_db"] = e.snr_db ? ojson(*e.snr_db) : ojson(nullptr);
            j["master_seed"] = cfg.master_seed;
            return j;
        }
    } // namespace

    ExperimentConfig apply_overrides(ExperimentConfig cfg, const Overrides &o)
    {
        if (o.seed)
            cfg.master_seed = *o.seed;
        if (o.trials)
            cfg.trials = *o.trials;
        if (o.out)
            cfg.output_dir = *o.out;
        validate(cfg);
        return cfg;
    }

    void cmd_optimize(const ExperimentConfig &cfg, unsigned threads, std::ostream &out)
    {
        const sim::Experiment e = to_experiment(cfg, threads);
        const pathopt::OptimizedPath opt = pathopt::optimize_path(e.N, e.path_length, e.lam, e.annealing);
        const geometry::SplinePath sp = geometry::fit_spline(opt.path);
        const double line_cost = pathopt::path_cost(
            pathopt::angles_to_points({std::vector<double>(e.N - 1, 0.0)}, e.path_length, e.N, e.lam));

        const fs::path dir = prepare_output(cfg);
        const std::string regime = opt.analytic ? "analytic" : "annealed";
        geometry::write_path_json(geometry::make_path_record(sp, e.lam, opt.report.cost, regime), dir / "path.json");
        geometry::write_knots_csv(sp.knots(), dir / "knots.csv");

        const double lam = e.lam.meters();
        out << fmt::format("regime: {}\n", opt.analytic ? "analytic: straight line" : "annealed");
        out << fmt::format("cost: {:.10g}\n", opt.report.cost);
        out << fmt::format("straight_line_cost: {:.10g}\n", line_cost);
        out << fmt::format("L_p: {:.10g} m ({:.6g} lambda)\n", sp.chord_length(), sp.chord_length() / lam);
        out << fmt::format("L_p_prime: {:.10g} m ({:.6g} lambda)\n", sp.length(), sp.length() / lam);
        out << fmt::format("iterations: {}\n", opt.report.iterations_used);
        out << fmt::format("wrote {} and {}\n", (dir / "path.json").string(), (dir / "knots.csv").string());
    }

    void cmd_simulate(const ExperimentConfig &cfg, unsigned threads, std::ostream &out)
    {
        const sim::Experiment e = to_experiment(cfg, threads);
        if (e.family == sim::PathFamily::file && !fs::exists(e.path_file))
            throw ConfigError("Path file not found: " + e.path_file.string());

        sim::PathCache cache;
        const sim::TrialConfig tc = sim::trial_config(e, cache);
        const sim::CmdaPlan plan(tc);
        if (plan.sampling().degenerate)
            out << fmt::format("warning: delta {} m >= path length {} m, sampling only the two end points\n", e.delta,
                               tc.path.length());
        const sim::MonteCarloResult mc = sim::monte_carlo(plan, cfg.trials, cfg.master_seed, threads);

        const fs::path dir = prepare_output(cfg);
        std::string csv = "trial,q_opt_x,q_opt_y,true_power,energy,positioning_distance\n";
        for (std::size_t i = 0; i < mc.trials.size(); ++i)
        {
            const auto &t = mc.trials[i];
            csv += fmt::format("{},{},{},{},{},{}\n", i, t.q_opt.x, t.q_opt.y, t.true_power, t.energy,
                               t.positioning_distance);
        }
        write_text(dir / "trials.csv", csv);

        ojson summary = experiment_json(cfg, e, tc.path.length());
        summary.update(summary_json(mc.summary));
        write_text(dir / "summary.json", summary.dump(2) + "\n");

        out << fmt::format("M: {}\n", mc.summary.M);
        out << fmt::format("mean_power: {:.6f} +/- {:.6f}\n", mc.summary.mean_power, mc.summary.stderr_power);
        out << fmt::format("mean_energy: {:.6f} +/- {:.6f} J\n", mc.summary.mean_energy, mc.summary.stderr_energy);
        out << fmt::format("wrote {} and {}\n", (dir / "trials.csv").string(), (dir / "summary.json").string());
    }

    void cmd_sweep(const ExperimentConfig &cfg, const std::string &axis_name, const std::vector<std::string> &values,
                   unsigned threads, std::ostream &out)
    {
        const sim::Experiment base = to_experiment(cfg, threads);
        sim::SweepAxis axis;
        try
        {
            axis = sim::parse_sweep_axis(axis_name);
            if (values.empty())
                throw ParameterError("--values must list at least one value");
            for (const auto &v : values)
                sim::apply_sweep_value(base, axis, v);
        }
        catch (const ParameterError &e)
        {
            throw ConfigError(e.what());
        }

        sim::PathCache cache;
        const sim::SweepOptions opts{cfg.trials, cfg.master_seed, cfg.common_random_numbers, threads};
        const std::vector<sim::SweepRow> rows = sim::sweep(axis, values, base, opts, cache);

        const fs::path dir = prepare_output(cfg);
        std::string csv = "axis,value,metric,mean,stderr,trials,M,L_p_prime_m\n";
        ojson points = ojson::array();
        for (const auto &row : rows)
        {
            const auto &s = row.stats;
            csv += fmt::format("{},{},power,{},{},{},{},{}\n", axis_name, row.value, s.mean_power, s.stderr_power,
                               s.trials, s.M, row.arc_length);
            csv += fmt::format("{},{},energy,{},{},{},{},{}\n", axis_name, row.value, s.mean_energy, s.stderr_energy,
                               s.trials, s.M, row.arc_length);
            ojson p;
            p["axis"] = axis_name;
            p["value"] = row.value;
            p["L_p_prime_m"] = row.arc_length;
            p.update(summary_json(s));
            points.push_back(std::move(p));
            out << fmt::format("{}={}: power {:.6f} +/- {:.6f}, energy {:.6f} +/- {:.6f} J (M={})\n", axis_name,
                               row.value, s.mean_power, s.stderr_power, s.mean_energy, s.stderr_energy, s.M);
        }
        write_text(dir / "sweep.csv", csv);
        ojson summary;
        summary["axis"] = axis_name;
        summary["master_seed"] = cfg.master_seed;
        summary["common_random_numbers"] = cfg.common_random_numbers;
        summary["points"] = std::move(points);
        write_text(dir / "sweep_summary.json", summary.dump(2) + "\n");
        out << fmt::format("wrote {} and {}\n", (dir / "sweep.csv").string(), (dir / "sweep_summary.json").string());
    }

    int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
    {
        CLI::App app{"Minimum-correlation exploration paths and continuous mobility diversity simulation"};
        app.require_subcommand(1);

        std::string config_file;
        Overrides o;
        std::optional<std::uint64_t> seed;
        std::optional<std::size_t> trials;
        std::optional<std::string> out_dir;
        std::string axis;
        std::vector<std::string> values;

        const auto common = [&](CLI::App *sub) {
            sub->add_option("--config", config_file, "Experiment config (JSON)")->required();
            sub->add_option("--seed", seed, "Override master_seed");
            sub->add_option("--trials", trials, "Override trials");
            sub->add_option("--out", out_dir, "Override output_dir");
            sub->add_option("--threads", o.threads, "Worker threads (results do not depend on it)")
                ->check(CLI::PositiveNumber);
        };

        auto *optimize = app.add_subcommand("optimize", "Design a minimum-correlation path and write path.json / knots.csv");
        common(optimize);
        auto *simulate = app.add_subcommand("simulate", "Monte Carlo run: trials.csv and summary.json");
        common(simulate);
        auto *sweep = app.add_subcommand("sweep", "Sweep one parameter: sweep.csv and sweep_summary.json");
        common(sweep);
        sweep->add_option("--axis", axis, "path_length | delta | snr_db | d_radius | path_family")->required();
        sweep->add_option("--values", values, "Comma-separated values (lengths in wavelengths)")->delimiter(',');
        auto *check = app.add_subcommand("validate-config", "Parse and validate a config, print its canonical form");
        check->add_option("--config", config_file, "Experiment config (JSON)")->required();

        std::vector<const char *> argv;
        argv.reserve(args.size());
        for (const auto &a : args)
            argv.push_back(a.c_str());

        try
        {
            app.parse(int(argv.size()), argv.data());
        }
        catch (const CLI::CallForHelp &e)
        {
            out << app.help();
            return kExitOk;
        }
        catch (const CLI::ParseError &e)
        {
            err << e.what() << "\n";
            return kExitConfig;
        }

        o.seed = seed;
        o.trials = trials;
        o.out = out_dir;

        try
        {
            const ExperimentConfig cfg = apply_overrides(load_config(config_file), o);
            if (*check)
                out << to_json(cfg);
            else if (*optimize)
                cmd_optimize(cfg, o.threads, out);
            else if (*simulate)
                cmd_simulate(cfg, o.threads, out);
            else if (*sweep)
                cmd_sweep(cfg, axis, values, o.threads, out);
            return kExitOk;
        }
        catch (const ConfigError &e)
        {
            err << "config error: " << e.what() << "\n";
            return kExitConfig;
        }
        catch (const ParameterError &e)
        {
            err << "invalid parameter: " << e.what() << "\n";
            return kExitConfig;
        }
        catch (const std::exception &e)
        {
            err << "error: " << e.what() << "\n";
            return kExitRuntime;
        }
    }

} // namespace cmda::cli
