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

#include "nomaisac/analytic.hpp"
#include "nomaisac/channel.hpp"
#include "nomaisac/montecarlo.hpp"
#include "nomaisac/rng.hpp"
#include "nomaisac/specfun.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>

#include <cmath>
#include <limits>
#include <numbers>

using namespace nisac;

namespace
{

const Mode fdsac_half = Mode::fdsac(0.5, 0.5);

// Ergodic rates by direct quadrature over the ordered-gain densities.
RatePair ecr_by_quadrature(const SystemConfig &cfg, const Mode &mode, double p)
{
    const double k = mode.kappa(), m = mode.mu();
    boost::math::quadrature::exp_sinh<double> q;
    const double inf = std::numeric_limits<double>::infinity();
    const double near = q.integrate(
        [&](double x) {
            return pdf_near(x, cfg) * k * std::log2(1.0 + m * p * x * cfg.alpha_n / (k * cfg.sigma2_c));
        },
        0.0, inf);
    const double far = q.integrate(
        [&](double x) {
            const double s = m * p * x;
            return pdf_far(x, cfg) * k * std::log2(1.0 + s * cfg.alpha_f / (k * cfg.sigma2_c + s * cfg.alpha_n));
        },
        0.0, inf);
    return {near, far};
}

} // namespace

TEST_CASE("thresholds")
{
    const SystemConfig cfg;
    const Thresholds t = thresholds(cfg, Mode::isac());
    CHECK(t.gamma_bar_n == doctest::Approx(0.74110112659224828).epsilon(1e-14));
    CHECK(t.gamma_bar_f == doctest::Approx(0.74110112659224828).epsilon(1e-14));
    CHECK(t.vartheta == doctest::Approx(1.1370422271147321).epsilon(1e-14));
    CHECK(t.theta == doctest::Approx(0.74110112659224828 / 0.2).epsilon(1e-14));
    CHECK(t.feasible);

    const Thresholds half = thresholds(cfg, fdsac_half);
    CHECK(half.gamma_bar_n == doctest::Approx(std::pow(2.0, 1.6) - 1.0).epsilon(1e-14));

    SystemConfig zero_rate;
    zero_rate.target_rate_n = 0.0;
    zero_rate.target_rate_f = 0.0;
    const Thresholds z = thresholds(zero_rate, Mode::isac());
    CHECK(z.gamma_bar_f == 0.0);
    CHECK(z.vartheta == 0.0);
    CHECK(z.feasible);
    CHECK_NOTHROW(thresholds(zero_rate, Mode::fdsac(0.0, 0.5)));

    CHECK_THROWS_WITH_AS(thresholds(cfg, Mode::fdsac(0.0, 0.5)), "threshold undefined: zero communication bandwidth",
                         std::domain_error);

    SystemConfig tight;
    tight.alpha_n = 0.45;
    tight.alpha_f = 0.55;
    tight.target_rate_f = 2.0;
    const Thresholds bad = thresholds(tight, Mode::isac());
    CHECK_FALSE(bad.feasible);
    CHECK(std::isinf(bad.theta));
    CHECK(std::isinf(bad.vartheta));

    // alpha_f == gamma_bar_f alpha_n exactly: R_f = log2(1 + 3) with a 1:3 split.
    SystemConfig boundary;
    boundary.alpha_n = 0.25;
    boundary.alpha_f = 0.75;
    boundary.target_rate_f = 2.0;
    CHECK_FALSE(thresholds(boundary, Mode::isac()).feasible);
    CHECK(outage_probability(boundary, Mode::isac(), 1e6).far == 1.0);
}

TEST_CASE("chi set")
{
    const SystemConfig cfg;
    const ChiSet c = chi_set(cfg, Mode::fdsac(0.5, 0.25));
    CHECK(c.chi1 == doctest::Approx(2.0 / 0.9).epsilon(1e-15));
    CHECK(c.chi2 == doctest::Approx(2.0 / 0.2).epsilon(1e-15));
    CHECK(c.chi3 == doctest::Approx(2.0 / rho3(cfg)).epsilon(1e-15));
    CHECK_THROWS_AS(chi_set(cfg, Mode::fdsac(0.5, 0.0)), std::domain_error);
}

TEST_CASE("outage probability against independent integration of the gain densities")
{
    const SystemConfig cfg;
    struct Row
    {
        double db;
        bool isac;
        double near, far;
    };
    // Reference values from 30-digit quadrature of the order-statistic densities.
    const Row rows[] = {
        {0, true, 0.98371039229118264, 0.99904001354974851},
        {0, false, 0.99998744936916476, 0.99999999999997976},
        {10, true, 0.28457170818502166, 0.50085524683388664},
        {10, false, 0.67229198586913044, 0.95728199783725109},
        {30, true, 7.5424375410162391e-5, 0.0069245057461679968},
        {30, false, 0.0005557031684515103, 0.031039419495509912},
    };
    for (const Row &r : rows)
    {
        CAPTURE(r.db);
        CAPTURE(r.isac);
        const OutagePair op = outage_probability(cfg, r.isac ? Mode::isac() : fdsac_half, db_to_linear(r.db));
        CHECK(op.near == doctest::Approx(r.near).epsilon(1e-12));
        CHECK(op.far == doctest::Approx(r.far).epsilon(1e-12));
    }
}

TEST_CASE("outage probability edge cases")
{
    SystemConfig tight;
    tight.alpha_n = 0.45;
    tight.alpha_f = 0.55;
    tight.target_rate_f = 2.0;
    const OutagePair bad = outage_probability(tight, Mode::isac(), 1e9);
    CHECK(bad.near == 1.0);
    CHECK(bad.far == 1.0);
    CHECK_THROWS_AS(outage_asymptotic(tight, Mode::isac(), 10.0), AsymptoteError);
    CHECK_THROWS_WITH(outage_asymptotic(tight, Mode::isac(), 10.0), doctest::Contains("asymptote undefined"));

    const SystemConfig cfg;
    const OutagePair none = outage_probability(cfg, Mode::fdsac(0.5, 0.0), 10.0);
    CHECK(none.near == 1.0);
    CHECK(none.far == 1.0);
    CHECK_THROWS_AS(outage_asymptotic(cfg, Mode::fdsac(0.0, 0.5), 10.0), AsymptoteError);

    const OutagePair huge = outage_probability(cfg, Mode::isac(), 1e15);
    CHECK(huge.near < 1e-20);
    CHECK(huge.far < 1e-12);
    CHECK(huge.near > 0.0);

    CHECK_THROWS_AS(outage_probability(cfg, Mode::isac(), 0.0), std::domain_error);
    CHECK_THROWS_AS(outage_probability(cfg, Mode::isac(), -1.0), std::domain_error);
}

TEST_CASE("outage probability is strictly decreasing in power")
{
    const SystemConfig cfg;
    for (const Mode &mode : {Mode::isac(), fdsac_half, Mode::fdsac(0.6, 0.8)})
    {
        REQUIRE(thresholds(cfg, mode).feasible);
        OutagePair prev = outage_probability(cfg, mode, db_to_linear(0.0));
        for (double db = 1.0; db <= 40.0; db += 1.0)
        {
            const OutagePair cur = outage_probability(cfg, mode, db_to_linear(db));
            CHECK(cur.near < prev.near);
            CHECK(cur.far < prev.far);
            prev = cur;
        }
    }
}

TEST_CASE("ISAC outage never exceeds FDSAC outage")
{
    const SystemConfig cfg;
    for (double db = 0.0; db <= 40.0; db += 5.0)
    {
        const OutagePair i = outage_probability(cfg, Mode::isac(), db_to_linear(db));
        const OutagePair f = outage_probability(cfg, fdsac_half, db_to_linear(db));
        CHECK(i.near <= f.near);
        CHECK(i.far <= f.far);
    }
}

TEST_CASE("outage asymptotes")
{
    const SystemConfig cfg;
    for (const Mode &mode : {Mode::isac(), fdsac_half})
    {
        const double p = db_to_linear(60.0);
        const OutagePair exact = outage_probability(cfg, mode, p);
        const OutagePair asym = outage_asymptotic(cfg, mode, p);
        CHECK(asym.near / exact.near == doctest::Approx(1.0).epsilon(1e-4));
        CHECK(asym.far / exact.far == doctest::Approx(1.0).epsilon(1e-4));
        // Diversity orders 2 and 1 are exact in the asymptotes.
        const OutagePair asym10 = outage_asymptotic(cfg, mode, 10.0 * p);
        CHECK(asym.near / asym10.near == doctest::Approx(100.0).epsilon(1e-12));
        CHECK(asym.far / asym10.far == doctest::Approx(10.0).epsilon(1e-12));
    }
    const double p40 = db_to_linear(40.0);
    const double ratio = outage_asymptotic(cfg, Mode::isac(), p40).far / outage_probability(cfg, Mode::isac(), p40).far;
    CHECK(std::abs(ratio - 1.0) < 0.02);
}

TEST_CASE("diversity orders from the closed form")
{
    const SystemConfig cfg;
    for (const Mode &mode : {Mode::isac(), fdsac_half})
    {
        std::vector<SlopePoint> near, far;
        for (int db = 30; db <= 40; ++db)
        {
            const OutagePair op = outage_probability(cfg, mode, db_to_linear(db));
            near.push_back({db / 10.0, std::log10(op.near)});
            far.push_back({db / 10.0, std::log10(op.far)});
        }
        CHECK(std::abs(estimate_slope(near) + 2.0) <= 0.15);
        CHECK(std::abs(estimate_slope(far) + 1.0) <= 0.1);
    }
}

TEST_CASE("ergodic rates against independent integration of the gain densities")
{
    const SystemConfig cfg;
    struct Row
    {
        double db;
        double near, far; // ISAC; FDSAC with kappa = mu = 0.5 is exactly half
    };
    const Row rows[] = {
        {0, 0.23407439929580792, 0.16043993210728909},
        {5, 0.60261811256672413, 0.39882862029380489},
        {20, 3.7988533913454454, 1.7465914547436362},
    };
    for (const Row &r : rows)
    {
        CAPTURE(r.db);
        const RatePair isac = ergodic_rates(cfg, Mode::isac(), db_to_linear(r.db));
        CHECK(isac.near == doctest::Approx(r.near).epsilon(1e-11));
        CHECK(isac.far == doctest::Approx(r.far).epsilon(1e-11));
        const RatePair half = ergodic_rates(cfg, fdsac_half, db_to_linear(r.db));
        CHECK(half.near == doctest::Approx(r.near / 2).epsilon(1e-11));
        CHECK(half.far == doctest::Approx(r.far / 2).epsilon(1e-11));
    }
}

TEST_CASE("ergodic rates against quadrature at random configurations")
{
    CounterStream stream(11, 0);
    for (int i = 0; i < 25; ++i)
    {
        SystemConfig cfg;
        cfg.rho1 = 0.05 + 3.0 * stream.uniform();
        cfg.rho2 = 0.05 + 3.0 * stream.uniform();
        cfg.alpha_n = 0.05 + 0.4 * stream.uniform();
        cfg.alpha_f = 1.0 - cfg.alpha_n;
        cfg.sigma2_c = 0.2 + 2.0 * stream.uniform();
        const Mode mode = i % 2 == 0 ? Mode::isac() : Mode::fdsac(0.05 + 0.95 * stream.uniform(), 0.05 + 0.95 * stream.uniform());
        const double p = db_to_linear(-10.0 + 50.0 * stream.uniform());
        CAPTURE(i);
        const RatePair closed = ergodic_rates(cfg, mode, p);
        const RatePair quad = ecr_by_quadrature(cfg, mode, p);
        CHECK(closed.near == doctest::Approx(quad.near).epsilon(1e-9));
        CHECK(closed.far == doctest::Approx(quad.far).epsilon(1e-9));
    }
}

TEST_CASE("ergodic rate limits and bounds")
{
    const SystemConfig cfg;
    const RatePair tiny = ergodic_rates(cfg, Mode::isac(), 1e-12);
    CHECK(tiny.near >= 0.0);
    CHECK(tiny.far >= 0.0);
    CHECK(tiny.near < 1e-11);
    CHECK(tiny.far < 1e-11);

    const RatePair none = ergodic_rates(cfg, Mode::fdsac(0.0, 0.7), 100.0);
    CHECK(none.near == 0.0);
    CHECK(none.far == 0.0);
    CHECK_THROWS_AS(ergodic_rates(cfg, Mode::isac(), 0.0), std::domain_error);

    const double ceiling = -std::log2(cfg.alpha_n);
    for (double db = -20.0; db <= 80.0; db += 0.5)
    {
        const double p = db_to_linear(db);
        const RatePair r = ergodic_rates(cfg, Mode::isac(), p);
        CHECK(r.far <= ceiling);
        CHECK(ergodic_rates_asymptotic(cfg, Mode::isac(), p).far == doctest::Approx(ceiling).epsilon(1e-15));
        CHECK(ergodic_rates(cfg, fdsac_half, p).far <= 0.5 * ceiling);
    }
}

TEST_CASE("ergodic-rate asymptotes")
{
    const SystemConfig cfg;
    for (const Mode &mode : {Mode::isac(), fdsac_half})
    {
        const double p = db_to_linear(70.0);
        const RatePair exact = ergodic_rates(cfg, mode, p);
        const RatePair asym = ergodic_rates_asymptotic(cfg, mode, p);
        CHECK(exact.near == doctest::Approx(asym.near).epsilon(1e-5));
        // The far-user gap closes only like ln(p) / p.
        CHECK(exact.far == doctest::Approx(asym.far).epsilon(1e-4));
        const RatePair asym4 = ergodic_rates_asymptotic(cfg, mode, 4.0 * p);
        CHECK((asym4.near - asym.near) / 2.0 == doctest::Approx(mode.kappa()).epsilon(1e-12));
    }
    const double p = 1e4;
    const double expected = std::log2(p) - euler_gamma / std::numbers::ln2 -
                            std::log2(cfg.sigma2_c / (cfg.alpha_n * (cfg.rho1 + cfg.rho2)));
    CHECK(ergodic_rates_asymptotic(cfg, Mode::isac(), p).near == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("sensing rate")
{
    const SystemConfig cfg;
    const std::pair<double, std::pair<double, double>> rows[] = {
        {0, {1.5710180983845778, 0.7855090491922889}},
        {5, {2.0081797689996975, 1.0040898844998487}},
        {20, {3.3343233296573809, 1.6671616648286905}},
    };
    for (const auto &[db, ref] : rows)
    {
        CHECK(sensing_rate(cfg, Mode::isac(), db_to_linear(db)) == doctest::Approx(ref.first).epsilon(1e-13));
        CHECK(sensing_rate(cfg, fdsac_half, db_to_linear(db)) == doctest::Approx(ref.second).epsilon(1e-13));
    }

    SystemConfig dark;
    dark.sensing_eigenvalues = std::vector<double>(8, 0.0);
    CHECK(sensing_rate(dark, Mode::isac(), 10.0) == 0.0);
    CHECK(sensing_rate_asymptotic(dark, Mode::isac(), 10.0) == 0.0);
    CHECK(sensing_rate(cfg, Mode::fdsac(1.0, 0.5), 10.0) == 0.0);
    CHECK(sensing_rate(cfg, Mode::fdsac(0.5, 1.0), 10.0) == 0.0);
    CHECK(sensing_rate_asymptotic(cfg, Mode::fdsac(0.5, 1.0), 10.0) == 0.0);
    CHECK_THROWS_AS(sensing_rate(cfg, Mode::isac(), 0.0), std::domain_error);
}

TEST_CASE("sensing rate is concave and nondecreasing in power")
{
    const SystemConfig cfg;
    for (const Mode &mode : {Mode::isac(), fdsac_half, Mode::fdsac(0.9, 0.1)})
    {
        std::vector<double> r;
        for (double db = -20.0; db <= 60.0; db += 1.0)
            r.push_back(sensing_rate(cfg, mode, db_to_linear(db)));
        for (std::size_t i = 1; i < r.size(); ++i)
            CHECK(r[i] >= r[i - 1]);
        // Concave in p: on a log grid the chord slope in p must not grow.
        for (std::size_t i = 1; i + 1 < r.size(); ++i)
        {
            const double p0 = db_to_linear(-20.0 + (i - 1)), p1 = db_to_linear(-20.0 + i), p2 = db_to_linear(-20.0 + i + 1);
            CHECK((r[i + 1] - r[i]) / (p2 - p1) <= (r[i] - r[i - 1]) / (p1 - p0) * (1 + 1e-9));
        }
    }
}

TEST_CASE("sensing asymptote slopes and gap")
{
    SystemConfig cfg;
    const double p = db_to_linear(40.0);
    const double slope_isac = (sensing_rate_asymptotic(cfg, Mode::isac(), 4 * p) - sensing_rate_asymptotic(cfg, Mode::isac(), p)) / 2;
    const double slope_fd = (sensing_rate_asymptotic(cfg, fdsac_half, 4 * p) - sensing_rate_asymptotic(cfg, fdsac_half, p)) / 2;
    CHECK(slope_isac == doctest::Approx(8.0 / 30.0).epsilon(1e-13));
    CHECK(slope_fd == doctest::Approx(4.0 / 30.0).epsilon(1e-13));
    CHECK(std::abs(sensing_rate(cfg, Mode::isac(), p) - sensing_rate_asymptotic(cfg, Mode::isac(), p)) < 1e-3);

    // Rank-deficient spectrum: the slope follows the rank.
    cfg.sensing_eigenvalues = {4.0, 0.0, 1.0};
    const double slope_r2 = (sensing_rate_asymptotic(cfg, Mode::isac(), 4 * p) - sensing_rate_asymptotic(cfg, Mode::isac(), p)) / 2;
    CHECK(slope_r2 == doctest::Approx(2.0 / 30.0).epsilon(1e-13));
}

TEST_CASE("rate triple and reference table")
{
    const SystemConfig cfg;
    const RateTriple t = rate_triple(cfg, Mode::isac(), 10.0);
    const RatePair r = ergodic_rates(cfg, Mode::isac(), 10.0);
    CHECK(t.rate_n == r.near);
    CHECK(t.rate_f == r.far);
    CHECK(t.rate_s == sensing_rate(cfg, Mode::isac(), 10.0));

    const auto table = reference_table(0.5, 8, 30);
    REQUIRE(table.size() == 8);
    auto find = [&](const std::string &system, const std::string &stream) {
        for (const auto &e : table)
            if (e.system == system && e.stream == stream)
                return e;
        FAIL("missing row " << system << " " << stream);
        return ReferenceEntry{};
    };
    CHECK(find("NOMA-ISAC", "N").diversity_order == 2);
    CHECK(find("NOMA-ISAC", "N").high_snr_slope == 1.0);
    CHECK(find("NOMA-ISAC", "F").diversity_order == 1);
    CHECK(find("NOMA-ISAC", "F").high_snr_slope == 0.0);
    CHECK(find("NOMA-ISAC", "sensing").high_snr_slope == doctest::Approx(8.0 / 30.0));
    CHECK_FALSE(find("NOMA-ISAC", "sensing").diversity_order.has_value());
    CHECK(find("NOMA-FDSAC", "N").high_snr_slope == 0.5);
    CHECK(find("NOMA-FDSAC", "F").diversity_order == 1);
    CHECK(find("NOMA-FDSAC", "F").high_snr_slope == 0.0);
    CHECK(find("NOMA-FDSAC", "CU pair").high_snr_slope == 0.5);
    CHECK(find("NOMA-FDSAC", "sensing").high_snr_slope == doctest::Approx(4.0 / 30.0));
    CHECK_THROWS_AS(reference_table(1.5, 8, 30), std::invalid_argument);
    CHECK_THROWS_AS(reference_table(0.5, 8, 0), std::invalid_argument);
}
