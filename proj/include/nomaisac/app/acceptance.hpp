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

#ifndef NOMAISAC_APP_ACCEPTANCE_HPP
#define NOMAISAC_APP_ACCEPTANCE_HPP

#include "nomaisac/core.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nisac::app
{

struct AcceptanceOptions
{
    std::uint64_t trials = 1'000'000; // Monte Carlo trials per SNR point
    std::uint64_t seed = 1;
    unsigned workers = 0;
};

struct CheckResult
{
    std::string id;
    std::string title;
    bool passed = false;
    std::string detail;
};

// FDSAC split used wherever a check compares against FDSAC.
inline constexpr double acceptance_kappa = 0.5;
inline constexpr double acceptance_mu = 0.5;

// SNR points 0, 5, ..., 40 dB used by the Monte Carlo agreement checks.
std::vector<double> acceptance_snr_db();

/// AC1: closed-form outage within 3 binomial standard errors of the empirical estimate,
/// both modes, every SNR point. The standard error is the larger of the closed-form and
/// empirical binomial errors sqrt(q (1 - q) / n).
CheckResult check_outage_agreement(const SystemConfig &cfg, const AcceptanceOptions &opts);

/// AC2: closed-form ergodic rates within max(3 standard errors, 1e-2) of the sample mean.
CheckResult check_ecr_agreement(const SystemConfig &cfg, const AcceptanceOptions &opts);

/// AC3: least-squares log-log outage slopes over 30..40 dB.
CheckResult check_diversity_orders(const SystemConfig &cfg);

/// AC4: ergodic-rate increase over a 4x power step ending at 40 dB, halved.
CheckResult check_rate_slopes(const SystemConfig &cfg);

/// AC5: eigenvalue-sum sensing rate against dense log-det, and the LM x LM sensing
/// determinant against its M x M reduction.
CheckResult check_sensing_identity(const SystemConfig &cfg, const AcceptanceOptions &opts);

/// AC6: sensing asymptote slopes r/L and (1 - kappa) r/L, and the 40 dB asymptote gap.
CheckResult check_sensing_slopes(const SystemConfig &cfg);

/// AC7: 101 x 101 FDSAC grid at 5 dB inside the ISAC rectangle, with the equality corners.
CheckResult check_region_containment(const SystemConfig &cfg);

/// AC8: scalar split-resource inequality at 10^4 random tuples.
CheckResult check_split_inequality(const AcceptanceOptions &opts);

/// AC9: exponential integral derivative identity and small-argument limit.
CheckResult check_special_functions(const AcceptanceOptions &opts);

/// AC10: command outputs byte-identical across repeated runs and worker counts.
CheckResult check_determinism(const SystemConfig &cfg, const AcceptanceOptions &opts);

std::vector<CheckResult> run_acceptance(const SystemConfig &cfg, const AcceptanceOptions &opts);

bool all_passed(const std::vector<CheckResult> &results);

// One "ID  PASS|FAIL  title | detail" line per check plus a totals line.
std::string format_report(const std::vector<CheckResult> &results);

} // namespace nisac::app

#endif
