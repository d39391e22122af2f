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


#include "cmda/rng.hpp"

namespace cmda::rng
{
    std::uint64_t derive_seed(std::uint64_t master, std::string_view tag, std::uint64_t index)
    {
        // FNV-1a over the tag, then chained through the mixer
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (unsigned char c : tag)
        {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
        std::uint64_t z = mix64(master ^ 0x6a09e667f3bcc909ULL);
        z = mix64(z ^ h);
        z = mix64(z + index * 0x9e3779b97f4a7c15ULL);
        return z;
    }

} // namespace cmda::rng
