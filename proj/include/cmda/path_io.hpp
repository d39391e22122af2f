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


#ifndef CMDA_PATH_IO_HPP
#define CMDA_PATH_IO_HPP

#include "cmda/geometry.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace cmda::geometry
{
    // Cached optimized path as stored on disk. Lengths in meters.
    struct PathRecord
    {
        double wavelength_m = 0.0;
        double path_length = 0.0; // L_p, chord sum
        double arc_length = 0.0;  // L_p'
        double cost = 0.0;
        std::string regime;       // "analytic" or "annealed"
        std::vector<Point2D> knots;
        std::vector<QuadraticSegment> segments;
    };

    PathRecord make_path_record(const SplinePath &sp, Wavelength lam, double cost, std::string regime);

    // {"format": "cmda-path", "version": 1, ...}
    std::string path_record_to_json(const PathRecord &rec);
    PathRecord path_record_from_json(const std::string &text);

    void write_path_json(const PathRecord &rec, const std::filesystem::path &file);
    PathRecord read_path_json(const std::filesystem::path &file);

    // index,x_m,y_m
    void write_knots_csv(const std::vector<Point2D> &knots, const std::filesystem::path &file);

} // namespace cmda::geometry

#endif
