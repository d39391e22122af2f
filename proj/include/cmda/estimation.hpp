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


#ifndef CMDA_ESTIMATION_HPP
#define CMDA_ESTIMATION_HPP

#include "cmda/common.hpp"
#include "cmda/fading.hpp"
#include "cmda/geometry.hpp"

#include <Eigen/Dense>

#include <span>
#include <vector>

// LMMSE smoothing of exploration measurements and selection of the best sampling point
namespace cmda::estimation
{
    struct SmootherConfig
    {
        double d;                 // neighbourhood radius, meters
        fading::NoiseModel noise;
        Wavelength lam;
        fading::CorrelationModel model = fading::CorrelationModel::jakes;

        void validate() const;
    };

    using Neighborhood = std::vector<std::size_t>;

    // Set k holds every j with |p_k - p_j| <= d (Euclidean, 1e-9 relative slack), in increasing order
    std::vector<Neighborhood> neighborhoods(std::span<const Point2D> points, double d);
    std::vector<Neighborhood> neighborhoods(const geometry::SamplingSet &S, double d);

    // a = K (K^2 R_J + sigma^2 I)^{-1} r_{J,k}, ordered as J.
    // Noise-free observations (sigma^2/K^2 < 1e-12) return the exact solution e_k / K.
    Eigen::VectorXd lmmse_coefficients(std::span<const Point2D> points, std::size_t k, std::span<const std::size_t> J,
                                       const SmootherConfig &cfg);

    // 1 - K r_{J,k}^T a: mean square error of the estimate at point k
    double lmmse_mse(std::span<const Point2D> points, std::size_t k, std::span<const std::size_t> J,
                     const SmootherConfig &cfg);

    struct EstimateSet
    {
        Eigen::VectorXcd estimates;
        std::vector<std::size_t> neighborhood_sizes;
    };

    // Smoother with all per-point coefficients precomputed: h_hat = W z
    class Smoother
    {
    public:
        Smoother(std::span<const Point2D> points, const SmootherConfig &cfg);

        EstimateSet apply(const Eigen::VectorXcd &z) const;

        const Eigen::MatrixXd &weights() const { return weights_; }
        const std::vector<Neighborhood> &neighborhoods() const { return neighborhoods_; }
        double theoretical_mse(std::size_t k) const { return mse_[k]; }

    private:
        Eigen::MatrixXd weights_;
        std::vector<Neighborhood> neighborhoods_;
        std::vector<double> mse_;
    };

    EstimateSet smooth_all(const Eigen::VectorXcd &z, const geometry::SamplingSet &S, const SmootherConfig &cfg);

    struct Selection
    {
        std::size_t index = 0; // 0-based
        Point2D position;
    };

    // argmax_k |h_hat_k|, lowest index on ties
    Selection select_qopt(const EstimateSet &est, std::span<const Point2D> points);
    Selection select_qopt(const EstimateSet &est, const geometry::SamplingSet &S);

} // namespace cmda::estimation

#endif
