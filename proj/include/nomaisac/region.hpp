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

#ifndef NOMAISAC_REGION_HPP
#define NOMAISAC_REGION_HPP

#include "nomaisac/core.hpp"

#include <vector>

namespace nisac
{

// (sensing rate, sum communication rate), bits/s/Hz.
struct RatePoint
{
    double rate_s = 0.0;
    double rate_c = 0.0;
};

// True if a is no worse than b in both coordinates and strictly better in one.
bool dominates(const RatePoint &a, const RatePoint &b);

struct FrontierPoint
{
    double kappa = 0.0;
    double mu = 0.0;
    RatePoint rates;
};

/// FDSAC operating points over a (kappa, mu) grid and their Pareto-maximal subset.
/// points are ordered kappa-major, each axis ascending from exactly 0 to exactly 1.
struct RegionFrontier
{
    std::vector<FrontierPoint> points;
    std::vector<FrontierPoint> pareto;
};

// Corner of the ISAC rectangle: full-resource sensing rate and sum ergodic rate.
RatePoint isac_corner(const SystemConfig &cfg, double p);

RatePoint fdsac_point(const SystemConfig &cfg, double kappa, double mu, double p);

// Throws std::invalid_argument for grid_n < 2 and std::domain_error for p <= 0.
RegionFrontier fdsac_frontier(const SystemConfig &cfg, double p, int grid_n);

// Non-dominated subset, sorted by decreasing sensing rate. Exact duplicates are kept once.
std::vector<FrontierPoint> pareto_subset(const std::vector<FrontierPoint> &points);

struct ContainmentReport
{
    bool holds = false;
    // Largest excess of any FDSAC coordinate over the ISAC corner; negative when every
    // point sits strictly inside the rectangle.
    double max_violation = 0.0;
    RatePoint corner;
};

inline constexpr double containment_tolerance = 1e-9;

ContainmentReport containment_check(const SystemConfig &cfg, double p, int grid_n);
ContainmentReport containment_check(const RegionFrontier &frontier, const RatePoint &corner);

// x ln(1 + a / (x + b)); increasing on [0, 1] for a > 0, b >= 0.
double lemma4_f(double x, double a, double b);

// ln(x + c) + c / (x + c); nondecreasing on [0, inf) for c >= 0.
double lemma3_g(double c, double x);

// log2(1 + (y1/mu)/(1 + y2/mu)) - kappa log2(1 + y1/(kappa + y2)): the per-realisation
// gap between the full-resource rate and the split-resource rate. Never negative for
// y1 > 0, y2 >= 0 and kappa, mu in (0, 1].
double split_rate_gap(double y1, double y2, double kappa, double mu);

} // namespace nisac

#endif
