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


#include "cmda/estimation.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace cmda::estimation
{
    namespace
    {
        constexpr double kNoiselessRatio = 1e-12;

        struct Solved
        {
            Eigen::VectorXd a;
            Eigen::VectorXd r; // r_{J,k}
        };

        Solved solve(std::span<const Point2D> points, std::size_t k, std::span<const std::size_t> J,
                     const SmootherConfig &cfg)
        {
            const auto pos = std::find(J.begin(), J.end(), k);
            if (pos == J.end())
                throw ParameterError(fmt::format("Point {} must belong to its own neighbourhood", k));
            const auto self = Eigen::Index(std::distance(J.begin(), pos));

            std::vector<Point2D> sub;
            sub.reserve(J.size());
            for (std::size_t j : J)
            {
                if (j >= points.size())
                    throw ParameterError(fmt::format("Neighbour index {} out of range", j));
                sub.push_back(points[j]);
            }
            const fading::CorrelationMatrix R = fading::correlation_matrix(sub, cfg.lam, cfg.model);
            Solved out;
            out.r = R.entries().col(self);

            const double K = cfg.noise.amplitude;
            const double s2 = cfg.noise.noise_variance;
            if (s2 / (K * K) < kNoiselessRatio)
            {
                // r_{J,k} is column k of R_J, so e_k / K solves K^2 R_J a = K r_{J,k} exactly
                out.a = Eigen::VectorXd::Zero(Eigen::Index(J.size()));
                out.a(self) = 1.0 / K;
                return out;
            }

            Eigen::MatrixXd A = (K * K) * R.entries();
            A.diagonal().array() += s2;
            Eigen::LLT<Eigen::MatrixXd> llt(A);
            if (llt.info() != Eigen::Success)
                throw NumericalError(fmt::format("LMMSE system for point {} ({} neighbours) is not positive definite",
                                                 k, J.size()));
            out.a = llt.solve(K * out.r);
            return out;
        }
    } // namespace

    void SmootherConfig::validate() const
    {
        if (!(d > 0.0) || !std::isfinite(d))
            throw ParameterError("Smoother radius d must be positive");
        noise.validate();
    }

    std::vector<Neighborhood> neighborhoods(std::span<const Point2D> points, double d)
    {
        if (!(d > 0.0))
            throw ParameterError("Smoother radius d must be positive");
        const double limit = d * (1.0 + 1e-9);
        std::vector<Neighborhood> out(points.size());
        for (std::size_t k = 0; k < points.size(); ++k)
            for (std::size_t j = 0; j < points.size(); ++j)
                if (j == k || distance(points[k], points[j]) <= limit)
                    out[k].push_back(j);
        return out;
    }

    std::vector<Neighborhood> neighborhoods(const geometry::SamplingSet &S, double d)
    {
        return neighborhoods(S.points, d);
    }

    Eigen::VectorXd lmmse_coefficients(std::span<const Point2D> points, std::size_t k, std::span<const std::size_t> J,
                                       const SmootherConfig &cfg)
    {
        cfg.validate();
        return solve(points, k, J, cfg).a;
    }

    double lmmse_mse(std::span<const Point2D> points, std::size_t k, std::span<const std::size_t> J,
                     const SmootherConfig &cfg)
    {
        cfg.validate();
        const Solved s = solve(points, k, J, cfg);
        return 1.0 - cfg.noise.amplitude * s.r.dot(s.a);
    }

    Smoother::Smoother(std::span<const Point2D> points, const SmootherConfig &cfg)
    {
        cfg.validate();
        const auto M = Eigen::Index(points.size());
        neighborhoods_ = estimation::neighborhoods(points, cfg.d);
        weights_ = Eigen::MatrixXd::Zero(M, M);
        mse_.resize(points.size());
        for (std::size_t k = 0; k < points.size(); ++k)
        {
            const Neighborhood &J = neighborhoods_[k];
            const Solved s = solve(points, k, J, cfg);
            for (std::size_t i = 0; i < J.size(); ++i)
                weights_(Eigen::Index(k), Eigen::Index(J[i])) = s.a(Eigen::Index(i));
            mse_[k] = 1.0 - cfg.noise.amplitude * s.r.dot(s.a);
        }
    }

    EstimateSet Smoother::apply(const Eigen::VectorXcd &z) const
    {
        if (z.size() != weights_.cols())
            throw ParameterError(fmt::format("Expected {} measurements, got {}", weights_.cols(), z.size()));
        EstimateSet out;
        out.estimates.resize(z.size());
        out.estimates.real() = weights_ * z.real();
        out.estimates.imag() = weights_ * z.imag();
        out.neighborhood_sizes.reserve(neighborhoods_.size());
        for (const auto &J : neighborhoods_)
            out.neighborhood_sizes.push_back(J.size());
        return out;
    }

    EstimateSet smooth_all(const Eigen::VectorXcd &z, const geometry::SamplingSet &S, const SmootherConfig &cfg)
    {
        return Smoother(S.points, cfg).apply(z);
    }

    Selection select_qopt(const EstimateSet &est, std::span<const Point2D> points)
    {
        if (est.estimates.size() == 0 || std::size_t(est.estimates.size()) != points.size())
            throw ParameterError("Selection needs one estimate per sampling point");
        std::size_t best = 0;
        double best_mag = std::abs(est.estimates(0));
        for (Eigen::Index k = 1; k < est.estimates.size(); ++k)
        {
            const double mag = std::abs(est.estimates(k));
            if (mag > best_mag)
            {
                best_mag = mag;
                best = std::size_t(k);
            }
        }
        return {best, points[best]};
    }

    Selection select_qopt(const EstimateSet &est, const geometry::SamplingSet &S)
    {
        return select_qopt(est, S.points);
    }

} // namespace cmda::estimation
