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
#include "nomaisac/core.hpp"

#include <cmath>
#include <limits>

using namespace nisac;

namespace
{

std::string config_error(const SystemConfig &cfg)
{
    try
    {
        validate_config(cfg);
    }
    catch (const ConfigError &e)
    {
        return e.what();
    }
    return {};
}

} // namespace

TEST_CASE("default config carries the reference parameter set")
{
    const SystemConfig cfg = default_config();
    CHECK(cfg.rho1 == 0.9);
    CHECK(cfg.rho2 == 0.2);
    CHECK(cfg.alpha_n == 0.2);
    CHECK(cfg.alpha_f == 0.8);
    CHECK(cfg.num_rx_antennas == 8);
    CHECK(cfg.frame_length == 30);
    CHECK(cfg.sensing_eigenvalues == std::vector<double>{5, 3, 3.5, 2.5, 1.5, 2, 1, 0.5});
    CHECK(config_error(cfg).empty());
    CHECK(sensing_rank(cfg) == 8);
    CHECK(rho3(cfg) == doctest::Approx(0.9 * 0.2 / 1.1).epsilon(1e-15));
}

TEST_CASE("validate_config rejects broken invariants with named messages")
{
    SystemConfig cfg;
    cfg.alpha_n = 0.5;
    cfg.alpha_f = 0.5;
    CHECK(config_error(cfg) == "alpha_n >= alpha_f");

    cfg = SystemConfig{};
    cfg.rho1 = 0.0;
    CHECK(config_error(cfg) == "rho1 must be positive");

    cfg = SystemConfig{};
    cfg.rho2 = std::nan("");
    CHECK(config_error(cfg) == "rho2 must be positive");

    cfg = SystemConfig{};
    cfg.alpha_n = 0.3;
    CHECK(config_error(cfg) == "alpha_n + alpha_f must equal 1");

    cfg = SystemConfig{};
    cfg.alpha_n = 0.8;
    cfg.alpha_f = 0.2;
    CHECK(config_error(cfg) == "alpha_n >= alpha_f");

    cfg = SystemConfig{};
    cfg.sigma2_c = -1.0;
    CHECK(config_error(cfg) == "sigma2_c must be positive");

    cfg = SystemConfig{};
    cfg.frame_length = 0;
    CHECK(config_error(cfg) == "frame_length must be positive");

    cfg = SystemConfig{};
    cfg.target_rate_f = std::numeric_limits<double>::infinity();
    CHECK(config_error(cfg) == "target_rate_f must be finite and nonnegative");

    cfg = SystemConfig{};
    cfg.sensing_eigenvalues.push_back(1.0);
    CHECK(config_error(cfg) == "sensing_eigenvalues has more entries than num_rx_antennas");

    cfg = SystemConfig{};
    cfg.sensing_eigenvalues[2] = -0.1;
    CHECK(config_error(cfg) == "sensing_eigenvalues must be finite and nonnegative");
}

TEST_CASE("validate_config is idempotent")
{
    SystemConfig cfg;
    cfg.rho1 = 2.5;
    cfg.alpha_n = 0.1;
    cfg.alpha_f = 0.9;
    cfg.sensing_eigenvalues = {1.0, 0.0};
    const SystemConfig &once = validate_config(cfg);
    const SystemConfig copy = once;
    CHECK(validate_config(copy) == cfg);
    CHECK(sensing_rank(cfg) == 1);
}

TEST_CASE("db_to_linear")
{
    CHECK(db_to_linear(0.0) == 1.0);
    CHECK(db_to_linear(10.0) == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(db_to_linear(5.0) == doctest::Approx(3.1622776601683795).epsilon(1e-15));
    CHECK(db_to_linear(-20.0) == doctest::Approx(0.01).epsilon(1e-15));
}

TEST_CASE("resource split and mode")
{
    CHECK_THROWS_AS(ResourceSplit(-0.1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(ResourceSplit(0.5, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(ResourceSplit(std::nan(""), 0.5), std::invalid_argument);
    CHECK_NOTHROW(ResourceSplit(0.0, 1.0));

    const Mode isac = Mode::isac();
    CHECK(isac.is_isac());
    CHECK(isac.kappa() == 1.0);
    CHECK(isac.mu() == 1.0);
    CHECK_FALSE(isac.comm_degenerate());
    CHECK(isac.name() == "isac");

    const Mode f = Mode::fdsac(0.25, 0.75);
    CHECK_FALSE(f.is_isac());
    CHECK(f.kappa() == 0.25);
    CHECK(f.mu() == 0.75);
    CHECK(f.name() == "fdsac");
    CHECK(Mode::fdsac(0.0, 0.5).comm_degenerate());
    CHECK(Mode::fdsac(0.5, 0.0).comm_degenerate());
    CHECK_FALSE(Mode::fdsac(1.0, 1.0) == isac);
}

TEST_CASE("ISAC matches FDSAC at full communication share in every communication metric")
{
    const SystemConfig cfg;
    const Mode isac = Mode::isac();
    const Mode full = Mode::fdsac(1.0, 1.0);
    for (double db = -10.0; db <= 50.0; db += 2.5)
    {
        const double p = db_to_linear(db);
        const OutagePair a = outage_probability(cfg, isac, p);
        const OutagePair b = outage_probability(cfg, full, p);
        CHECK(a.near == doctest::Approx(b.near).epsilon(1e-12));
        CHECK(a.far == doctest::Approx(b.far).epsilon(1e-12));
        const RatePair ra = ergodic_rates(cfg, isac, p);
        const RatePair rb = ergodic_rates(cfg, full, p);
        CHECK(ra.near == doctest::Approx(rb.near).epsilon(1e-12));
        CHECK(ra.far == doctest::Approx(rb.far).epsilon(1e-12));
    }
}

TEST_CASE("ISAC sensing matches FDSAC with the whole band and power on sensing")
{
    const SystemConfig cfg;
    const Mode none_to_comm = Mode::fdsac(0.0, 0.0);
    for (double db = -10.0; db <= 50.0; db += 2.5)
    {
        const double p = db_to_linear(db);
        CHECK(sensing_rate(cfg, Mode::isac(), p) == doctest::Approx(sensing_rate(cfg, none_to_comm, p)).epsilon(1e-12));
        CHECK(sensing_rate_asymptotic(cfg, Mode::isac(), p) ==
              doctest::Approx(sensing_rate_asymptotic(cfg, none_to_comm, p)).epsilon(1e-12));
    }
}
