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

#include "nomaisac/region.hpp"

#include "nomaisac/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace nisac
{

bool dominates(const RatePoint &a, const RatePoint &b)
{
    return a.rate_s >= b.rate_s && a.rate_c >= b.rate_c && (a.rate_s > b.rate_s || a.rate_c > b.rate_c);
}

RatePoint isac_corner(const SystemConfig &cfg, double p)
{
    const Mode mode = Mode::isac();
    return {sensing_rate(cfg, mode, p), ergodic_rates(cfg, mode, p).sum()};
}

RatePoint fdsac_point(const SystemConfig &cfg, double kappa, double mu, double p)
{
    const Mode mode = Mode::fdsac(kappa, mu);
    return {sensing_rate(cfg, mode, p), ergodic_rates(cfg, mode, p).sum()};
}

RegionFrontier fdsac_frontier(const SystemConfig &cfg, double p, int grid_n)
{
    if (grid_n < 2)
        throw std::invalid_argument("fdsac_frontier: grid needs at least two points per axis");
    if (!(p > 0.0))
        throw std::domain_error("fdsac_frontier: transmit power must be positive");

    auto axis = [grid_n](int i) { return i == grid_n - 1 ? 1.0 : static_cast<double>(i) / (grid_n - 1); };
    RegionFrontier out;
    out.points.reserve(static_cast<std::size_t>(grid_n) * grid_n);
    for (int i = 0; i < grid_n; ++i)
        for (int j = 0; j < grid_n; ++j)
        {
            const double kappa = axis(i);
            const double mu = axis(j);
            out.points.push_back({kappa, mu, fdsac_point(cfg, kappa, mu, p)});
        }
    out.pareto = pareto_subset(out.points);
    return out;
}

std::vector<FrontierPoint> pareto_subset(const std::vector<FrontierPoint> &points)
{
    std::vector<FrontierPoint> sorted = points;
    std::stable_sort(sorted.begin(), sorted.end(), [](const FrontierPoint &a, const FrontierPoint &b) {
        if (a.rates.rate_s != b.rates.rate_s)
            return a.rates.rate_s > b.rates.rate_s;
        return a.rates.rate_c > b.rates.rate_c;
    });
    // Sweeping in decreasing rate_s, a point survives only if it beats every rate_c seen so far.
    std::vector<FrontierPoint> front;
    double best_c = -1.0;
    for (const auto &pt : sorted)
        if (pt.rates.rate_c > best_c)
        {
            front.push_back(pt);
            best_c = pt.rates.rate_c;
        }
    return front;
}

ContainmentReport containment_check(const RegionFrontier &frontier, const RatePoint &corner)
{
    ContainmentReport report;
    report.corner = corner;
    report.max_violation = -std::numeric_limits<double>::infinity();
    for (const auto &pt : frontier.points)
        report.max_violation = std::max({report.max_violation, pt.rates.rate_s - corner.rate_s,
                                         pt.rates.rate_c - corner.rate_c});
    report.holds = report.max_violation <= containment_tolerance;
    return report;
}

ContainmentReport containment_check(const SystemConfig &cfg, double p, int grid_n)
{
    return containment_check(fdsac_frontier(cfg, p, grid_n), isac_corner(cfg, p));
}

double lemma4_f(double x, double a, double b)
{
    if (!(a > 0.0) || !(b >= 0.0))
        throw std::domain_error("lemma4_f: requires a > 0 and b >= 0");
    if (!(x >= 0.0 && x <= 1.0))
        throw std::domain_error("lemma4_f: x must lie in [0, 1]");
    if (x == 0.0)
        return 0.0;
    return x * std::log1p(a / (x + b));
}

double lemma3_g(double c, double x)
{
    if (!(c >= 0.0) || !(x >= 0.0) || (x + c) == 0.0)
        throw std::domain_error("lemma3_g: requires c >= 0, x >= 0 and x + c > 0");
    return std::log(x + c) + c / (x + c);
}

double split_rate_gap(double y1, double y2, double kappa, double mu)
{
    if (!(y1 > 0.0) || !(y2 >= 0.0) || !(kappa > 0.0 && kappa <= 1.0) || !(mu > 0.0 && mu <= 1.0))
        throw std::domain_error("split_rate_gap: requires y1 > 0, y2 >= 0, kappa and mu in (0, 1]");
    const double full = std::log2(1.0 + (y1 / mu) / (1.0 + y2 / mu));
    const double split = kappa * std::log2(1.0 + y1 / (kappa + y2));
    return full - split;
}

} // namespace nisac
