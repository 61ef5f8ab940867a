// SPDX-License-Identifier: Apache-2.0
//
// nomaisac - performance analysis toolkit for two-user NOMA sensing/communication systems
// Copyright (C) 2026 The nomaisac authors
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

#include "doctest.h"

#include "nomaisac/rng.hpp"

#include <cmath>
#include <set>

using namespace nisac;

TEST_CASE("Philox4x32-10 known-answer vectors")
{
    using Block = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;
    CHECK(philox4x32_10(Block{0, 0, 0, 0}, Key{0, 0}) == Block{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(philox4x32_10(Block{0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, Key{0xffffffff, 0xffffffff}) ==
          Block{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(philox4x32_10(Block{0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, Key{0xa4093822, 0x299f31d0}) ==
          Block{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("a stream is a pure function of (seed, stream id)")
{
    CounterStream a(42, 7);
    CounterStream b(42, 7);
    for (int i = 0; i < 1000; ++i)
        CHECK(a.uniform() == b.uniform());

    CounterStream other_stream(42, 8);
    CounterStream other_seed(43, 7);
    CounterStream fresh(42, 7);
    int same_stream = 0, same_seed = 0;
    for (int i = 0; i < 100; ++i)
    {
        const double v = fresh.uniform();
        same_stream += v == other_stream.uniform();
        same_seed += v == other_seed.uniform();
    }
    CHECK(same_stream == 0);
    CHECK(same_seed == 0);
}

TEST_CASE("uniform variates lie in [0, 1) with the right moments")
{
    CounterStream s(1, 0);
    const int n = 200'000;
    double sum = 0.0, sum2 = 0.0;
    std::set<double> seen;
    for (int i = 0; i < n; ++i)
    {
        const double u = s.uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
        sum2 += u * u;
        if (i < 1000)
            seen.insert(u);
    }
    CHECK(seen.size() == 1000);
    // Mean 1/2 (sd 1/sqrt(12 n)) and second moment 1/3 (sd ~0.298/sqrt(n)), 5-sigma bands.
    CHECK(std::abs(sum / n - 0.5) < 5.0 / std::sqrt(12.0 * n));
    CHECK(std::abs(sum2 / n - 1.0 / 3.0) < 5.0 * 0.2981 / std::sqrt(n));
}

TEST_CASE("complex normal variates are CN(0, 1)")
{
    CounterStream s(5, 3);
    const int n = 200'000;
    std::complex<double> mean = 0.0;
    double power = 0.0, re2 = 0.0, pseudo = 0.0;
    for (int i = 0; i < n; ++i)
    {
        const std::complex<double> z = s.complex_normal();
        REQUIRE(std::isfinite(z.real()));
        mean += z;
        power += std::norm(z);
        re2 += z.real() * z.real();
        pseudo += z.real() * z.imag();
    }
    CHECK(std::abs(mean / static_cast<double>(n)) < 5.0 / std::sqrt(n));
    // |z|^2 ~ Exp(1): mean 1, sd 1.
    CHECK(std::abs(power / n - 1.0) < 5.0 / std::sqrt(n));
    CHECK(std::abs(re2 / n - 0.5) < 5.0 * std::sqrt(0.5) / std::sqrt(n));
    CHECK(std::abs(pseudo / n) < 5.0 * 0.5 / std::sqrt(n));
}
