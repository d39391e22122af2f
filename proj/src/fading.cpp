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


#include "cmda/fading.hpp"

#include "cmda/bessel.hpp"
#include "cmda/rng.hpp"

#include <fmt/format.h>

#include <cmath>

namespace cmda::fading
{
    namespace
    {
        constexpr double kEigenClipFloor = -1e-8;
        constexpr double kFactorJitter = 1e-12;

        bool rows_identical(const Eigen::MatrixXd &R, Eigen::Index a, Eigen::Index b)
        {
            for (Eigen::Index c = 0; c < R.cols(); ++c)
                if (R(a, c) != R(b, c))
                    return false;
            return true;
        }
    } // namespace

    double jakes_correlation(double distance_m, Wavelength lam)
    {
        return bessel_j0(kTwoPi * distance_m / lam.meters());
    }

    double jakes_correlation(Point2D p, Point2D q, Wavelength lam)
    {
        return jakes_correlation(distance(p, q), lam);
    }

    CorrelationMatrix::CorrelationMatrix(Eigen::MatrixXd entries, std::vector<Point2D> points)
        : entries_(std::move(entries)), points_(std::move(points))
    {
        if (entries_.rows() != entries_.cols() || entries_.rows() != Eigen::Index(points_.size()))
            throw ParameterError("Correlation matrix must be square with one row per point");
    }

    CorrelationMatrix correlation_matrix(std::span<const Point2D> points, Wavelength lam)
    {
        return correlation_matrix(points, lam, CorrelationModel::jakes);
    }

    CorrelationMatrix correlation_matrix(std::span<const Point2D> points, Wavelength lam, CorrelationModel model)
    {
        if (points.empty())
            throw ParameterError("Correlation matrix needs at least one point");

        const auto n = Eigen::Index(points.size());
        Eigen::MatrixXd R(n, n);
        for (Eigen::Index m = 0; m < n; ++m)
        {
            R(m, m) = 1.0;
            for (Eigen::Index k = m + 1; k < n; ++k)
            {
                double r = 0.0;
                if (model == CorrelationModel::jakes)
                    r = jakes_correlation(points[m], points[k], lam);
                else
                    r = points[m] == points[k] ? 1.0 : 0.0;
                R(m, k) = r;
                R(k, m) = r;
            }
        }
        return {std::move(R), std::vector<Point2D>(points.begin(), points.end())};
    }

    FieldSampler::FieldSampler(const CorrelationMatrix &R)
    {
        const Eigen::MatrixXd &C = R.entries();
        const Eigen::Index n = C.rows();

        std::vector<Eigen::Index> distinct;
        representative_.assign(std::size_t(n), 0);
        for (Eigen::Index i = 0; i < n; ++i)
        {
            bool merged = false;
            for (std::size_t d = 0; d < distinct.size(); ++d)
            {
                if (rows_identical(C, distinct[d], i))
                {
                    representative_[std::size_t(i)] = Eigen::Index(d);
                    merged = true;
                    break;
                }
            }
            if (!merged)
            {
                representative_[std::size_t(i)] = Eigen::Index(distinct.size());
                distinct.push_back(i);
            }
        }

        const auto r = Eigen::Index(distinct.size());
        Eigen::MatrixXd reduced(r, r);
        for (Eigen::Index a = 0; a < r; ++a)
            for (Eigen::Index b = 0; b < r; ++b)
                reduced(a, b) = C(distinct[std::size_t(a)], distinct[std::size_t(b)]);

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(reduced);
        if (eig.info() != Eigen::Success)
            throw NumericalError(fmt::format("Eigen-decomposition of a {}x{} correlation matrix failed", r, r));

        const Eigen::VectorXd &lambdas = eig.eigenvalues();
        const double min_eig = lambdas.minCoeff();
        const double max_eig = lambdas.maxCoeff();
        if (min_eig < kEigenClipFloor)
            throw NumericalError(fmt::format(
                "Correlation matrix is not positive semidefinite: eigenvalues in [{:.3e}, {:.3e}] (size {})",
                min_eig, max_eig, r));

        const Eigen::VectorXd clipped = lambdas.cwiseMax(0.0);
        Eigen::MatrixXd repaired = eig.eigenvectors() * clipped.asDiagonal() * eig.eigenvectors().transpose();
        repaired = 0.5 * (repaired + repaired.transpose());
        repaired.diagonal().array() += kFactorJitter;

        Eigen::LLT<Eigen::MatrixXd> llt(repaired);
        if (llt.info() != Eigen::Success)
            throw NumericalError(fmt::format(
                "Cholesky factorization failed after jitter: eigenvalues in [{:.3e}, {:.3e}], condition ~{:.3e} (size {})",
                min_eig, max_eig, max_eig / std::max(std::abs(min_eig), kFactorJitter), r));
        factor_ = llt.matrixL();
    }

    FieldRealization FieldSampler::sample(std::uint64_t seed) const
    {
        rng::Stream stream(seed);
        const Eigen::Index r = factor_.rows();
        Eigen::VectorXcd u(r);
        for (Eigen::Index i = 0; i < r; ++i)
            u(i) = stream.complex_normal(1.0);

        const Eigen::VectorXcd reduced = factor_.triangularView<Eigen::Lower>() * u;

        FieldRealization out;
        out.seed = seed;
        out.gains.resize(Eigen::Index(representative_.size()));
        for (std::size_t i = 0; i < representative_.size(); ++i)
            out.gains(Eigen::Index(i)) = reduced(representative_[i]);
        return out;
    }

    Eigen::MatrixXd FieldSampler::realized_covariance() const
    {
        const Eigen::MatrixXd LLt = factor_ * factor_.transpose();
        const auto n = Eigen::Index(representative_.size());
        Eigen::MatrixXd out(n, n);
        for (Eigen::Index a = 0; a < n; ++a)
            for (Eigen::Index b = 0; b < n; ++b)
                out(a, b) = LLt(representative_[std::size_t(a)], representative_[std::size_t(b)]);
        return out;
    }

    FieldRealization sample_field(const CorrelationMatrix &R, std::uint64_t seed)
    {
        return FieldSampler(R).sample(seed);
    }

    NoiseModel NoiseModel::from_snr_db(double snr_db, double amplitude)
    {
        if (!std::isfinite(snr_db))
            throw ParameterError("SNR must be finite; use NoiseModel::noiseless for the noise-free case");
        NoiseModel m{amplitude, amplitude * amplitude / std::pow(10.0, snr_db / 10.0)};
        m.validate();
        return m;
    }

    void NoiseModel::validate() const
    {
        if (!(amplitude > 0.0) || !std::isfinite(amplitude))
            throw ParameterError("Tone amplitude K must be positive");
        if (!(noise_variance >= 0.0) || !std::isfinite(noise_variance))
            throw ParameterError("Noise variance must be nonnegative");
    }

    Eigen::VectorXcd observe(const FieldRealization &h, const NoiseModel &noise, std::uint64_t seed)
    {
        noise.validate();
        Eigen::VectorXcd z = noise.amplitude * h.gains;
        if (noise.noise_variance > 0.0)
        {
            rng::Stream stream(seed);
            for (Eigen::Index k = 0; k < z.size(); ++k)
                z(k) += stream.complex_normal(noise.noise_variance);
        }
        return z;
    }

} // namespace cmda::fading
