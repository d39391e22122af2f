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


#ifndef CMDA_FADING_HPP
#define CMDA_FADING_HPP

#include "cmda/common.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <span>
#include <vector>

// Jakes spatial correlation and correlated Rayleigh field generation
namespace cmda::fading
{
    // Spatial correlation kernel between channel gains.
    // `identity` treats every distinct position as independent; it exists so
    // order-statistics results (mean of the max of M Exp(1) draws) can be checked exactly.
    enum class CorrelationModel
    {
        jakes,
        identity,
    };

    // r(p, q) = J0(2 pi |p - q| / lambda)
    double jakes_correlation(Point2D p, Point2D q, Wavelength lam);

    // Same kernel evaluated from a distance in meters
    double jakes_correlation(double distance_m, Wavelength lam);

    class CorrelationMatrix
    {
    public:
        CorrelationMatrix(Eigen::MatrixXd entries, std::vector<Point2D> points);

        const Eigen::MatrixXd &entries() const { return entries_; }
        const std::vector<Point2D> &points() const { return points_; }
        Eigen::Index size() const { return entries_.rows(); }
        double operator()(Eigen::Index m, Eigen::Index n) const { return entries_(m, n); }

    private:
        Eigen::MatrixXd entries_;
        std::vector<Point2D> points_;
    };

    // Pairwise Jakes correlation over a point set; unit diagonal, exactly symmetric
    CorrelationMatrix correlation_matrix(std::span<const Point2D> points, Wavelength lam);

    // Correlation under the given model. For `identity`, coincident points stay fully
    // correlated (entry 1), all other pairs are 0.
    CorrelationMatrix correlation_matrix(std::span<const Point2D> points, Wavelength lam, CorrelationModel model);

    struct FieldRealization
    {
        Eigen::VectorXcd gains;
        std::uint64_t seed = 0;
    };

    // Precomputed square-root factor of a correlation matrix.
    //
    // Rows that are exactly identical in R (coincident positions) share one latent draw,
    // so perfectly correlated entries are reproduced bit for bit. The reduced matrix is
    // repaired by clipping eigenvalues in [-1e-8, 0) to zero, adding 1e-12 to the
    // diagonal and taking a Cholesky factor. A most-negative eigenvalue below -1e-8
    // is reported as a NumericalError.
    class FieldSampler
    {
    public:
        explicit FieldSampler(const CorrelationMatrix &R);

        // h = L u with u_i iid CN(0, 1); deterministic in `seed`
        FieldRealization sample(std::uint64_t seed) const;

        Eigen::Index size() const { return Eigen::Index(representative_.size()); }

        // Covariance actually realized by the factor: E[h h^H]
        Eigen::MatrixXd realized_covariance() const;

    private:
        Eigen::MatrixXd factor_;                  // lower-triangular, over distinct rows
        std::vector<Eigen::Index> representative_; // row of `factor_` used by each point
    };

    FieldRealization sample_field(const CorrelationMatrix &R, std::uint64_t seed);

    // Received tone z = K h + n, n ~ CN(0, sigma_n^2)
    struct NoiseModel
    {
        double amplitude = 1.0;      // K
        double noise_variance = 0.0; // sigma_n^2

        // SNR = K^2 / sigma_n^2, since E|h|^2 = 1
        static NoiseModel from_snr_db(double snr_db, double amplitude = 1.0);
        static NoiseModel noiseless(double amplitude = 1.0) { return {amplitude, 0.0}; }

        void validate() const;

        friend bool operator==(const NoiseModel &, const NoiseModel &) = default;
    };

    Eigen::VectorXcd observe(const FieldRealization &h, const NoiseModel &noise, std::uint64_t seed);

} // namespace cmda::fading

#endif
