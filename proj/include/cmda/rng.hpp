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


#ifndef CMDA_RNG_HPP
#define CMDA_RNG_HPP

#include <complex>
#include <cstdint>
#include <limits>
#include <random>
#include <string_view>

namespace cmda::rng
{
    // SplitMix64 finalizer (Steele, Lea, Flood 2014)
    constexpr std::uint64_t mix64(std::uint64_t z)
    {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Stream key for the draw identified by (master, purpose tag, index).
    // Every random quantity in the library is drawn from a stream keyed this way,
    // so results do not depend on the order in which trials are executed.
    std::uint64_t derive_seed(std::uint64_t master, std::string_view tag, std::uint64_t index);

    // Counter-based SplitMix64 stream: the n-th output is mix64(key + n * golden_gamma).
    // Satisfies UniformRandomBitGenerator.
    class Stream
    {
    public:
        using result_type = std::uint64_t;

        explicit Stream(std::uint64_t key) : key_(key) {}

        static constexpr result_type min() { return 0; }
        static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

        result_type operator()()
        {
            ++counter_;
            return mix64(key_ + counter_ * 0x9e3779b97f4a7c15ULL);
        }

        // Uniform on [0, 1) with 53 random bits
        double uniform() { return double((*this)() >> 11) * 0x1.0p-53; }

        double normal() { return normal_(*this); }

        // Circularly symmetric complex Gaussian CN(0, variance): real and imaginary parts N(0, variance/2)
        std::complex<double> complex_normal(double variance = 1.0)
        {
            const double s = std::sqrt(0.5 * variance);
            const double re = normal();
            const double im = normal();
            return {s * re, s * im};
        }

    private:
        std::uint64_t key_;
        std::uint64_t counter_ = 0;
        std::normal_distribution<double> normal_{0.0, 1.0};
    };

} // namespace cmda::rng

#endif
