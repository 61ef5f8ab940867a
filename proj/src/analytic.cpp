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

#include "nomaisac/analytic.hpp"

#include "nomaisac/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace nisac
{

namespace
{

constexpr double inf = std::numeric_limits<double>::infinity();

void require_positive_power(double p, const char *what)
{
    if (!(p > 0.0))
        throw std::domain_error(std::string(what) + ": transmit power must be positive");
}

// 2^(rate / kappa) - 1
double rate_threshold(double rate, double kappa)
{
    if (rate == 0.0)
        return 0.0;
    return std::expm1(rate / kappa * std::numbers::ln2);
}

} // namespace

Thresholds thresholds(const SystemConfig &cfg, const Mode &mode)
{
    const double kappa = mode.kappa();
    if (kappa == 0.0 && (cfg.target_rate_n > 0.0 || cfg.target_rate_f > 0.0))
        throw std::domain_error("threshold undefined: zero communication bandwidth");

    Thresholds th;
    th.gamma_bar_n = rate_threshold(cfg.target_rate_n, kappa);
    th.gamma_bar_f = rate_threshold(cfg.target_rate_f, kappa);
    th.feasible = cfg.alpha_f > th.gamma_bar_f * cfg.alpha_n;
    if (th.feasible)
    {
        th.vartheta = th.gamma_bar_f / (cfg.alpha_f - cfg.alpha_n * th.gamma_bar_f);
        th.theta = std::max(th.gamma_bar_n / cfg.alpha_n, th.vartheta);
    }
    else
    {
        th.vartheta = inf;
        th.theta = inf;
    }
    return th;
}

ChiSet chi_set(const SystemConfig &cfg, const Mode &mode)
{
    if (mode.comm_degenerate())
        throw std::domain_error("chi undefined: communications have no bandwidth or power");
    const double scale = mode.kappa() * cfg.sigma2_c / mode.mu();
    return {scale / cfg.rho1, scale / cfg.rho2, scale / rho3(cfg)};
}

OutagePair outage_probability(const SystemConfig &cfg, const Mode &mode, double p)
{
    require_positive_power(p, "outage_probability");
    if (mode.comm_degenerate())
        return {1.0, 1.0};
    const Thresholds th = thresholds(cfg, mode);
    if (!th.feasible)
        return {1.0, 1.0};
    const ChiSet chi = chi_set(cfg, mode);
    const double near = std::expm1(-chi.chi1 * th.theta / p) * std::expm1(-chi.chi2 * th.theta / p);
    const double far = -std::expm1(-chi.chi3 * th.vartheta / p);
    return {near, far};
}

OutagePair outage_asymptotic(const SystemConfig &cfg, const Mode &mode, double p)
{
    require_positive_power(p, "outage_asymptotic");
    if (mode.comm_degenerate())
        throw AsymptoteError("asymptote undefined: communications have no bandwidth or power");
    const Thresholds th = thresholds(cfg, mode);
    if (!th.feasible)
        throw AsymptoteError("asymptote undefined: infeasible power allocation");
    const ChiSet chi = chi_set(cfg, mode);
    return {chi.chi1 * chi.chi2 * th.theta * th.theta / (p * p), chi.chi3 * th.vartheta / p};
}

RatePair ergodic_rates(const SystemConfig &cfg, const Mode &mode, double p)
{
    require_positive_power(p, "ergodic_rates");
    if (mode.comm_degenerate())
        return {0.0, 0.0};
    const ChiSet chi = chi_set(cfg, mode);
    const double scale = cfg.alpha_n * p;
    const double psi1 = psi_term(chi.chi1, scale);
    const double psi2 = psi_term(chi.chi2, scale);
    const double psi3 = psi_term(chi.chi3, scale);
    const double factor = mode.kappa() / std::numbers::ln2;
    const double near = factor * (psi3 - psi2 - psi1);
    const double far = factor * (psi3 - psi_term(chi.chi3, p));
    return {std::max(near, 0.0), std::max(far, 0.0)};
}

RatePair ergodic_rates_asymptotic(const SystemConfig &cfg, const Mode &mode, double p)
{
    require_positive_power(p, "ergodic_rates_asymptotic");
    if (mode.comm_degenerate())
        return {0.0, 0.0};
    const double kappa = mode.kappa();
    const double offset = std::log2(kappa * cfg.sigma2_c / (mode.mu() * cfg.alpha_n * (cfg.rho1 + cfg.rho2)));
    const double near = kappa * (std::log2(p) - euler_gamma / std::numbers::ln2 - offset);
    const double far = -kappa * std::log2(cfg.alpha_n);
    return {near, far};
}

double sensing_rate(const SystemConfig &cfg, const Mode &mode, double p)
{
    require_positive_power(p, "sensing_rate");
    const double frame = cfg.frame_length;
    if (mode.is_isac())
        return log2_det_i_plus_scaled(p * frame / cfg.sigma2_s, cfg.sensing_eigenvalues) / frame;

    const double band = 1.0 - mode.kappa();
    if (band == 0.0)
        return 0.0;
    const double c = (1.0 - mode.mu()) * p * frame / (band * cfg.sigma2_s);
    return band / frame * log2_det_i_plus_scaled(c, cfg.sensing_eigenvalues);
}

double sensing_rate_asymptotic(const SystemConfig &cfg, const Mode &mode, double p)
{
    require_positive_power(p, "sensing_rate_asymptotic");
    const double frame = cfg.frame_length;
    const double band = mode.is_isac() ? 1.0 : 1.0 - mode.kappa();
    const double power = mode.is_isac() ? 1.0 : 1.0 - mode.mu();
    if (band == 0.0 || power == 0.0)
        return 0.0;

    std::vector<double> positive;
    for (double v : cfg.sensing_eigenvalues)
        if (v > 0.0)
            positive.push_back(v);
    std::sort(positive.begin(), positive.end());

    CompensatedSum offset;
    for (double v : positive)
        offset.add(std::log2(power * v * frame / (band * cfg.sigma2_s)));
    const double rank = static_cast<double>(positive.size());
    return band * rank / frame * std::log2(p) + band / frame * offset.value();
}

RateTriple rate_triple(const SystemConfig &cfg, const Mode &mode, double p)
{
    const RatePair comm = ergodic_rates(cfg, mode, p);
    return {comm.near, comm.far, sensing_rate(cfg, mode, p)};
}

std::vector<ReferenceEntry> reference_table(double kappa, int rank, int frame_length)
{
    if (!(kappa >= 0.0 && kappa <= 1.0))
        throw std::invalid_argument("reference_table: kappa must lie in [0, 1]");
    if (rank < 0 || frame_length < 1)
        throw std::invalid_argument("reference_table: rank must be >= 0 and frame length positive");
    const double r_over_l = static_cast<double>(rank) / frame_length;
    return {
        {"NOMA-FDSAC", "N", 2, kappa},
        {"NOMA-FDSAC", "F", 1, 0.0},
        {"NOMA-FDSAC", "CU pair", std::nullopt, kappa},
        {"NOMA-FDSAC", "sensing", std::nullopt, (1.0 - kappa) * r_over_l},
        {"NOMA-ISAC", "N", 2, 1.0},
        {"NOMA-ISAC", "F", 1, 0.0},
        {"NOMA-ISAC", "CU pair", std::nullopt, 1.0},
        {"NOMA-ISAC", "sensing", std::nullopt, r_over_l},
    };
}

} // namespace nisac
