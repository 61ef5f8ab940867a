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

#ifndef NOMAISAC_MONTECARLO_HPP
#define NOMAISAC_MONTECARLO_HPP

#include "nomaisac/channel.hpp"
#include "nomaisac/core.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace nisac
{

struct TrialSinrs
{
    double sinr_sic = 0.0; // near user decoding the far user's message
    double snr_n = 0.0;    // near user decoding its own message after SIC
    double sinr_f = 0.0;   // far user, near-user signal treated as interference
};

// Per-trial SINRs with the mode's bandwidth/power fractions applied.
TrialSinrs trial_sinrs(const SystemConfig &cfg, const Mode &mode, double p, const ChannelDraw &draw);

struct EstimateWithError
{
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t trials = 0;
};

struct UserEstimates
{
    EstimateWithError near;
    EstimateWithError far;
};

// Trial i uses CounterStream(seed, i). Trials are grouped in fixed-size blocks
// that are reduced in block order, so results are bit-identical for any worker
// count. workers == 0 means one per hardware thread.
struct McOptions
{
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 1;
    unsigned workers = 0;
};

/// Empirical outage probabilities. A near-user trial is in outage unless both the
/// SIC SINR and its own SNR exceed their thresholds; a far-user trial is in outage
/// when its SINR falls below its threshold. std_error = sqrt(q (1 - q) / trials).
/// Throws std::invalid_argument for trials == 0 and std::domain_error for p <= 0.
UserEstimates estimate_outage(const SystemConfig &cfg, const Mode &mode, double p, const McOptions &opts);

/// Sample means of kappa log2(1 + SINR); std_error = sample std / sqrt(trials).
UserEstimates estimate_ecr(const SystemConfig &cfg, const Mode &mode, double p, const McOptions &opts);

// Largest L*M for which the dense LM x LM sensing determinant is evaluated.
inline constexpr int max_bruteforce_dimension = 256;

/// Sensing mutual information in bits, log2 det(I_LM + X R X^H / sigma2_s) with
/// X = I_M (x) x, built and factorised densely. Throws std::invalid_argument when
/// L*M exceeds max_bruteforce_dimension.
double sensing_mi_bruteforce(std::span<const std::complex<double>> x, const CorrelationMatrix &corr, double sigma2_s);

/// The same quantity reduced to M x M: log2 det(I_M + (x^H x) R / sigma2_s).
double sensing_mi_reduced(std::span<const std::complex<double>> x, const CorrelationMatrix &corr, double sigma2_s);

/// 2 x L unit-power data streams with exactly orthogonal rows, S S^H = L I
/// up to rounding. Requires L >= 2.
Eigen::MatrixXcd orthogonal_streams(int frame_length, CounterStream &stream);

/// 2 x L streams of i.i.d. CN(0, 1) symbols; S S^H only approximates L I.
Eigen::MatrixXcd random_streams(int frame_length, CounterStream &stream);

/// Dual-function transmit vector x = sqrt(p) S^T [sqrt(alpha_n), sqrt(alpha_f)]^T.
Eigen::VectorXcd dual_function_signal(const SystemConfig &cfg, double p, const Eigen::MatrixXcd &streams);

struct SlopePoint
{
    double x = 0.0;
    double y = 0.0;
};

// Least-squares slope. Throws std::invalid_argument for fewer than two points
// or when all abscissae coincide.
double estimate_slope(std::span<const SlopePoint> points);

} // namespace nisac

#endif
