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

#ifndef NOMAISAC_ANALYTIC_HPP
#define NOMAISAC_ANALYTIC_HPP

#include "nomaisac/core.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nisac
{

// Thrown when an asymptotic expression does not exist for the requested operating point.
class AsymptoteError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// SINR thresholds implied by the target rates.
///
/// gamma_bar = 2^(R / kappa) - 1, so a narrower communication band raises the
/// threshold. The allocation is feasible when alpha_f > gamma_bar_f * alpha_n;
/// the boundary case counts as infeasible. When infeasible, theta and vartheta
/// are +infinity.
struct Thresholds
{
    double gamma_bar_n = 0.0;
    double gamma_bar_f = 0.0;
    double theta = 0.0;    // max(gamma_bar_n / alpha_n, vartheta)
    double vartheta = 0.0; // gamma_bar_f / (alpha_f - alpha_n gamma_bar_f)
    bool feasible = true;
};

// chi_b = kappa sigma_c^2 / (mu rho_b) for b = 1, 2, 3.
struct ChiSet
{
    double chi1 = 0.0;
    double chi2 = 0.0;
    double chi3 = 0.0;
};

// Throws std::domain_error for FDSAC with kappa = 0 and a positive target rate.
Thresholds thresholds(const SystemConfig &cfg, const Mode &mode);

// Throws std::domain_error if communications have no bandwidth or power.
ChiSet chi_set(const SystemConfig &cfg, const Mode &mode);

struct OutagePair
{
    double near = 1.0;
    double far = 1.0;
};

struct RatePair
{
    double near = 0.0;
    double far = 0.0;

    double sum() const { return near + far; }
};

/// Exact outage probabilities of the near and far user at transmit power p (linear).
/// Returns (1, 1) for an infeasible allocation or when communications get no resources.
OutagePair outage_probability(const SystemConfig &cfg, const Mode &mode, double p);

/// High-power outage asymptotes chi1 chi2 theta^2 / p^2 and chi3 vartheta / p.
/// Throws AsymptoteError when the allocation is infeasible or resources are zero.
OutagePair outage_asymptotic(const SystemConfig &cfg, const Mode &mode, double p);

/// Exact ergodic rates in bits/s/Hz, written with the exponential integral.
/// Returns (0, 0) when communications get no bandwidth or power.
RatePair ergodic_rates(const SystemConfig &cfg, const Mode &mode, double p);

/// High-power ergodic-rate asymptotes: the near-user rate grows as kappa log2 p, the
/// far-user rate saturates at -kappa log2 alpha_n.
RatePair ergodic_rates_asymptotic(const SystemConfig &cfg, const Mode &mode, double p);

/// Sensing rate (1/L) log2 det(I + p L R / sigma_s^2) for ISAC and its band/power-split
/// counterpart for FDSAC. FDSAC with kappa = 1 (no sensing band) returns the limit 0.
double sensing_rate(const SystemConfig &cfg, const Mode &mode, double p);

/// High-power sensing-rate asymptote over the positive eigenvalues only.
/// FDSAC with no sensing bandwidth or no sensing power returns 0.
double sensing_rate_asymptotic(const SystemConfig &cfg, const Mode &mode, double p);

RateTriple rate_triple(const SystemConfig &cfg, const Mode &mode, double p);

// One entry of the diversity-order / high-SNR-slope summary.
struct ReferenceEntry
{
    std::string system;                  // "NOMA-ISAC" or "NOMA-FDSAC"
    std::string stream;                  // "N", "F", "CU pair" or "sensing"
    std::optional<int> diversity_order;  // only defined for the two users
    double high_snr_slope = 0.0;
};

std::vector<ReferenceEntry> reference_table(double kappa, int rank, int frame_length);

} // namespace nisac

#endif
