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
#include "cmda/config.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace cmda;
using namespace cmda::cli;
namespace fs = std::filesystem;

namespace
{
    struct TempDir
    {
        fs::path path;
        explicit TempDir(const std::string &name) : path(fs::temp_directory_path() / ("cmda_test_cli_" + name))
        {
            fs::remove_all(path);
            fs::create_directories(path);
        }
        ~TempDir() { fs::remove_all(path); }
    };

    std::string slurp(const fs::path &p)
    {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    void write(const fs::path &p, const std::string &text) { std::ofstream(p, std::ios::binary) << text; }

    struct Run
    {
        int code;
        std::string out, err;
    };

    Run run(std::vector<std::string> args)
    {
        args.insert(args.begin(), "cmda");
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return {code, out.str(), err.str()};
    }

    std::size_t data_rows(const std::string &csv)
    {
        std::size_t n = 0;
        for (char c : csv)
            n += c == '\n';
        return n - 1;
    }

    const char *kLinearNoiseless = R"({
      "schema_version": 1,
      "path": {"family": "linear", "L_p": 0.6, "match_mcp_arc_length": false},
      "delta": 0.05,
      "noiseless": true,
      "trials": 10000,
      "master_seed": 2026
    })";
} // namespace

TEST_CASE("config defaults")
{
    const auto c = parse_config(R"({"schema_version": 1})");
    CHECK(c == ExperimentConfig{});
    CHECK(c.wavelength_m == 0.1402);
    CHECK(c.path.N == 25);
    CHECK(c.delta == 0.05);
    CHECK(c.smoother.d == 0.3828);
    CHECK(c.snr_db == 10.0);
    const auto e = to_experiment(c);
    CHECK(e.delta == doctest::Approx(0.05 * 0.1402));
    CHECK(e.d == doctest::Approx(0.3828 * 0.1402));
    CHECK(e.noise().noise_variance == doctest::Approx(0.1));
}

TEST_CASE("config round trip")
{
    auto c = parse_config(R"({"schema_version": 1})");
    c.path.family = "circular";
    c.path.L_p = 1.25;
    c.noiseless = true;
    c.annealing.seed = 17;
    c.annealing.initial_temperature = 3.5;
    c.energy.mass = 2.5;
    c.trials = 123;
    const std::string text = to_json(c);
    const auto back = parse_config(text);
    CHECK(back == c);
    CHECK(to_json(back) == text);
}

TEST_CASE("config rejects malformed input")
{
    CHECK_THROWS_AS(parse_config("{"), ConfigError);
    CHECK_THROWS_AS(parse_config("{}"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"schema_version": 2})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"schema_version": 1, "colour": "red"})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"schema_version": 1, "path": {"lenght": 1.0}})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"schema_version": 1, "delta": "small"})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"schema_version": 1, "delta": -0.05})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"schema_version": 1, "trials": 0})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"schema_version": 1, "trials": -5})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"schema_version": 1, "path": {"N": 1}})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"schema_version": 1, "path": {"family": "spiral"}})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"schema_version": 1, "path": {"family": "file"}})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"schema_version": 1, "annealing": {"cooling_factor": 1.5}})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"schema_version": 1, "wavelength_m": 0})"), ConfigError);
}

TEST_CASE("cli exit codes")
{
    TempDir tmp("codes");
    const auto out = tmp.path / "out";
    write(tmp.path / "bad.json", R"({"schema_version": 1, "delta": -1})");
    write(tmp.path / "broken.json", "{ nope");

    for (const char *cmd : {"optimize", "simulate"})
    {
        CHECK(run({cmd, "--config", (tmp.path / "bad.json").string(), "--out", out.string()}).code == kExitConfig);
        CHECK(run({cmd, "--config", (tmp.path / "broken.json").string(), "--out", out.string()}).code == kExitConfig);
        CHECK(run({cmd, "--config", (tmp.path / "missing.json").string(), "--out", out.string()}).code == kExitConfig);
        CHECK_FALSE(fs::exists(out));
    }
    CHECK(run({"simulate"}).code == kExitConfig);
    CHECK(run({"frobnicate"}).code == kExitConfig);
    CHECK(run({}).code == kExitConfig);
}

TEST_CASE("cli validate-config prints the canonical form")
{
    TempDir tmp("validate");
    write(tmp.path / "c.json", R"({"schema_version": 1, "trials": 7})");
    const auto r = run({"validate-config", "--config", (tmp.path / "c.json").string()});
    CHECK(r.code == kExitOk);
    CHECK(parse_config(r.out).trials == 7);
}

TEST_CASE("cli optimize in the straight-line regime")
{
    TempDir tmp("optimize");
    write(tmp.path / "c.json", R"({"schema_version": 1, "path": {"L_p": 0.3}})");
    const auto out = tmp.path / "out";
    const auto r = run({"optimize", "--config", (tmp.path / "c.json").string(), "--out", out.string()});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("analytic: straight line") != std::string::npos);
    CHECK(fs::exists(out / "path.json"));
    CHECK(fs::exists(out / "knots.csv"));
    CHECK(data_rows(slurp(out / "knots.csv")) == 25);
    const auto path = nlohmann::json::parse(slurp(out / "path.json"));
    CHECK(path["regime"] == "analytic");

    // the written path drives a simulation
    write(tmp.path / "f.json", nlohmann::json{{"schema_version", 1},
                                              {"path", {{"family", "file"}, {"file", (out / "path.json").string()}}},
                                              {"trials", 50}}
                                   .dump());
    const auto s = run({"simulate", "--config", (tmp.path / "f.json").string(), "--out", (tmp.path / "sim").string()});
    CHECK(s.code == kExitOk);
    CHECK(data_rows(slurp(tmp.path / "sim" / "trials.csv")) == 50);

    write(tmp.path / "g.json", R"({"schema_version": 1, "path": {"family": "file", "file": "/nonexistent/path.json"}})");
    CHECK(run({"simulate", "--config", (tmp.path / "g.json").string(), "--out", (tmp.path / "x").string()}).code ==
          kExitConfig);
    CHECK_FALSE(fs::exists(tmp.path / "x"));
}

TEST_CASE("cli simulate outputs")
{
    TempDir tmp("simulate");
    write(tmp.path / "c.json", kLinearNoiseless);
    const auto cfg = (tmp.path / "c.json").string();

    SUBCASE("single trial")
    {
        const auto r = run({"simulate", "--config", cfg, "--trials", "1", "--out", (tmp.path / "one").string()});
        CHECK(r.code == kExitOk);
        const auto csv = slurp(tmp.path / "one" / "trials.csv");
        CHECK(csv.rfind("trial,q_opt_x,q_opt_y,true_power,energy,positioning_distance\n", 0) == 0);
        CHECK(data_rows(csv) == 1);
    }
    SUBCASE("re-runs are byte identical for any thread count")
    {
        const auto a = tmp.path / "a", b = tmp.path / "b", c = tmp.path / "c";
        CHECK(run({"simulate", "--config", cfg, "--trials", "500", "--out", a.string()}).code == kExitOk);
        CHECK(run({"simulate", "--config", cfg, "--trials", "500", "--out", b.string()}).code == kExitOk);
        CHECK(run({"simulate", "--config", cfg, "--trials", "500", "--threads", "4", "--out", c.string()}).code ==
              kExitOk);
        for (const char *f : {"trials.csv", "summary.json"})
        {
            CHECK(slurp(a / f) == slurp(b / f));
            CHECK(slurp(a / f) == slurp(c / f));
        }
        CHECK(run({"simulate", "--config", cfg, "--trials", "500", "--seed", "9", "--out", c.string()}).code ==
              kExitOk);
        CHECK(slurp(a / "trials.csv") != slurp(c / "trials.csv"));
    }
    SUBCASE("degenerate sampling warns")
    {
        const auto r = run({"simulate", "--config", cfg, "--trials", "5", "--out", (tmp.path / "d").string()});
        CHECK(r.out.find("warning") == std::string::npos);
        write(tmp.path / "wide.json", R"({"schema_version": 1, "path": {"family": "linear", "L_p": 0.6,
            "match_mcp_arc_length": false}, "delta": 0.8, "trials": 5})");
        const auto w = run({"simulate", "--config", (tmp.path / "wide.json").string(), "--out",
                            (tmp.path / "w").string()});
        CHECK(w.code == kExitOk);
        CHECK(w.out.find("warning") != std::string::npos);
    }
}

TEST_CASE("cli simulate regression pin")
{
    // Reference recorded from the first build: noiseless straight line, L_p = 0.6, delta = 0.05, seed 2026
    constexpr double kReferencePower = 1.9022385300676241;
    TempDir tmp("pin");
    write(tmp.path / "c.json", kLinearNoiseless);
    const auto r = run({"simulate", "--config", (tmp.path / "c.json").string(), "--out", (tmp.path / "o").string()});
    REQUIRE(r.code == kExitOk);
    const auto s = nlohmann::json::parse(slurp(tmp.path / "o" / "summary.json"));
    const double mean = s["mean_power"], se = s["stderr_power"];
    CHECK(s["trials"] == 10000);
    CHECK(s["M"] == 13);
    CHECK(std::abs(mean - kReferencePower) <= 3.0 * se);
}

TEST_CASE("cli sweep")
{
    TempDir tmp("sweep");
    write(tmp.path / "c.json", R"({"schema_version": 1, "path": {"family": "linear", "L_p": 1.0,
        "match_mcp_arc_length": false}, "trials": 2000})");
    const auto cfg = (tmp.path / "c.json").string();
    const auto out = tmp.path / "out";

    CHECK(run({"sweep", "--config", cfg, "--axis", "speed", "--values", "1", "--out", out.string()}).code ==
          kExitConfig);
    CHECK(run({"sweep", "--config", cfg, "--axis", "d_radius", "--out", out.string()}).code == kExitConfig);
    CHECK(run({"sweep", "--config", cfg, "--axis", "d_radius", "--values", "0.3,-2", "--out", out.string()}).code ==
          kExitConfig);
    CHECK_FALSE(fs::exists(out));

    const auto r = run({"sweep", "--config", cfg, "--axis", "d_radius", "--values", "0.3,0.3828", "--out", out.string()});
    REQUIRE(r.code == kExitOk);
    const auto csv = slurp(out / "sweep.csv");
    CHECK(csv.rfind("axis,value,metric,mean,stderr,trials,M,L_p_prime_m\n", 0) == 0);
    CHECK(data_rows(csv) == 4);
    const auto summary = nlohmann::json::parse(slurp(out / "sweep_summary.json"));
    REQUIRE(summary["points"].size() == 2);
    const double p0 = summary["points"][0]["mean_power"], p1 = summary["points"][1]["mean_power"];
    CHECK(std::abs(p0 - p1) < 0.02 * p1);

    const auto again = tmp.path / "again";
    CHECK(run({"sweep", "--config", cfg, "--axis", "d_radius", "--values", "0.3,0.3828", "--threads", "3", "--out",
               again.string()})
              .code == kExitOk);
    CHECK(slurp(again / "sweep.csv") == csv);
    CHECK(slurp(again / "sweep_summary.json") == slurp(out / "sweep_summary.json"));
}

TEST_CASE("cli optimize designs a curved path beyond the regime")
{
    TempDir tmp("curved");
    write(tmp.path / "c.json", R"({"schema_version": 1, "path": {"L_p": 1.8, "N": 25}})");
    const auto out = tmp.path / "out";
    const auto r = run({"optimize", "--config", (tmp.path / "c.json").string(), "--out", out.string()});
    REQUIRE(r.code == kExitOk);
    CHECK(r.out.find("regime: annealed") != std::string::npos);
    const auto path = nlohmann::json::parse(slurp(out / "path.json"));
    CHECK(path["regime"] == "annealed");
    CHECK(path["N"] == 25);
    CHECK(double(path["L_p_prime_m"]) > double(path["L_p_m"]));

    // cost < straight-line cost, both as printed
    const auto value = [&](const std::string &key) {
        const auto at = r.out.find("\n" + key + ": ");
        REQUIRE(at != std::string::npos);
        return std::stod(r.out.substr(at + key.size() + 3));
    };
    CHECK(value("cost") < value("straight_line_cost"));
}
