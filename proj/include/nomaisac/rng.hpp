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

#ifndef NOMAISAC_RNG_HPP
#define NOMAISAC_RNG_HPP

#include <array>
#include <complex>
#include <cstdint>

namespace nisac
{

// Philox4x32-10 block function (Salmon et al., SC'11). Maps a 128-bit counter
// and 64-bit key to 128 pseudo-random bits.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter, std::array<std::uint32_t, 2> key);

// Deterministic random stream identified by (seed, stream_id).
//
// The stream is a pure function of its identity: stream(seed, i) yields the
// same sequence no matter when, where or in which order it is created, which
// is what lets Monte Carlo trials run in any order on any number of workers.
// Each 128-bit block produces two 53-bit uniforms.
class CounterStream
{
public:
    CounterStream(std::uint64_t seed, std::uint64_t stream_id);

    // Uniform variate in [0, 1).
    double uniform();

    // Standard circularly-symmetric complex Gaussian CN(0, 1).
    std::complex<double> complex_normal();

private:
    void refill();

    std::array<std::uint32_t, 2> key_;
    std::uint64_t stream_id_;
    std::uint64_t block_ = 0;
    std::array<double, 2> buffer_{};
    int next_ = 2;
};

} // namespace nisac

#endif
