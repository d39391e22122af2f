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


#include "cmda/path_io.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <fstream>
#include <sstream>

namespace cmda::geometry
{
    namespace
    {
        using ojson = nlohmann::ordered_json;

        ojson point_json(Point2D p) { return ojson::array({p.x, p.y}); }

        Point2D point_from(const nlohmann::json &j)
        {
            if (!j.is_array() || j.size() != 2)
                throw ParameterError("Path file: points must be [x, y] pairs");
            return {j.at(0).get<double>(), j.at(1).get<double>()};
        }
    } // namespace

    PathRecord make_path_record(const SplinePath &sp, Wavelength lam, double cost, std::string regime)
    {
        return {lam.meters(), sp.chord_length(), sp.length(), cost, std::move(regime), sp.knots(), sp.segments()};
    }

    std::string path_record_to_json(const PathRecord &rec)
    {
        ojson j;
        j["format"] = "cmda-path";
        j["version"] = 1;
        j["wavelength_m"] = rec.wavelength_m;
        j["L_p_m"] = rec.path_length;
        j["L_p_prime_m"] = rec.arc_length;
        j["cost"] = rec.cost;
        j["regime"] = rec.regime;
        j["N"] = rec.knots.size();
        ojson knots = ojson::array();
        for (const auto &p : rec.knots)
            knots.push_back(point_json(p));
        j["knots"] = std::move(knots);
        ojson segs = ojson::array();
        for (const auto &s : rec.segments)
            segs.push_back({{"a", point_json(s.a)}, {"b", point_json(s.b)}, {"c", point_json(s.c)}});
        j["segments"] = std::move(segs);
        return j.dump(2) + "\n";
    }

    PathRecord path_record_from_json(const std::string &text)
    {
        nlohmann::json j;
        try
        {
            j = nlohmann::json::parse(text);
            if (j.at("format") != "cmda-path" || j.at("version") != 1)
                throw ParameterError("Path file: unsupported format or version");

            PathRecord rec;
            rec.wavelength_m = j.at("wavelength_m").get<double>();
            rec.path_length = j.at("L_p_m").get<double>();
            rec.arc_length = j.at("L_p_prime_m").get<double>();
            rec.cost = j.at("cost").get<double>();
            rec.regime = j.at("regime").get<std::string>();
            for (const auto &p : j.at("knots"))
                rec.knots.push_back(point_from(p));
            for (const auto &s : j.at("segments"))
                rec.segments.push_back({point_from(s.at("a")), point_from(s.at("b")), point_from(s.at("c"))});
            if (rec.knots.size() < 2 || rec.segments.size() + 1 != rec.knots.size())
                throw ParameterError("Path file: needs N >= 2 knots and N-1 segments");
            return rec;
        }
        catch (const nlohmann::json::exception &e)
        {
            throw ParameterError(std::string("Path file: ") + e.what());
        }
    }

    void write_path_json(const PathRecord &rec, const std::filesystem::path &file)
    {
        std::ofstream out(file, std::ios::binary);
        if (!out)
            throw std::runtime_error("Cannot write " + file.string());
        out << path_record_to_json(rec);
    }

    PathRecord read_path_json(const std::filesystem::path &file)
    {
        std::ifstream in(file, std::ios::binary);
        if (!in)
            throw ParameterError("Cannot read path file " + file.string());
        std::stringstream ss;
        ss << in.rdbuf();
        return path_record_from_json(ss.str());
    }

    void write_knots_csv(const std::vector<Point2D> &knots, const std::filesystem::path &file)
    {
        std::ofstream out(file, std::ios::binary);
        if (!out)
            throw std::runtime_error("Cannot write " + file.string());
        out << "index,x_m,y_m\n";
        for (std::size_t i = 0; i < knots.size(); ++i)
            out << fmt::format("{},{},{}\n", i, knots[i].x, knots[i].y);
    }

} // namespace cmda::geometry
