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

#include "nomaisac/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nisac
{

SystemConfig default_config()
{
    return SystemConfig{};
}

const SystemConfig &validate_config(const SystemConfig &cfg)
{
    // Comparisons are written so that NaN fails them.
    if (!(cfg.rho1 > 0.0))
        throw ConfigError("rho1 must be positive");
    if (!(cfg.rho2 > 0.0))
        throw ConfigError("rho2 must be positive");
    if (!(cfg.alpha_n > 0.0 && cfg.alpha_n < 1.0))
        throw ConfigError("alpha_n must lie in (0, 1)");
    if (!(cfg.alpha_f > 0.0 && cfg.alpha_f < 1.0))
        throw ConfigError("alpha_f must lie in (0, 1)");
    if (!(std::abs(cfg.alpha_n + cfg.alpha_f - 1.0) <= std::numeric_limits<double>::epsilon()))
        throw ConfigError("alpha_n + alpha_f must equal 1");
    if (!(cfg.alpha_n < cfg.alpha_f))
        throw ConfigError("alpha_n >= alpha_f");
    if (!(cfg.sigma2_c > 0.0))
        throw ConfigError("sigma2_c must be positive");
    if (!(cfg.sigma2_s > 0.0))
        throw ConfigError("sigma2_s must be positive");
    if (cfg.num_rx_antennas < 1)
        throw ConfigError("num_rx_antennas must be positive");
    if (cfg.frame_length < 1)
        throw ConfigError("frame_length must be positive");
    if (!(cfg.target_rate_n >= 0.0) || std::isinf(cfg.target_rate_n))
        throw ConfigError("target_rate_n must be finite and nonnegative");
    if (!(cfg.target_rate_f >= 0.0) || std::isinf(cfg.target_rate_f))
        throw ConfigError("target_rate_f must be finite and nonnegative");
    if (cfg.sensing_eigenvalues.size() > static_cast<std::size_t>(cfg.num_rx_antennas))
        throw ConfigError("sensing_eigenvalues has more entries than num_rx_antennas");
    if (!std::all_of(cfg.sensing_eigenvalues.begin(), cfg.sensing_eigenvalues.end(),
                     [](double v) { return v >= 0.0 && std::isfinite(v); }))
        throw ConfigError("sensing_eigenvalues must be finite and nonnegative");
    return cfg;
}

int sensing_rank(const SystemConfig &cfg)
{
    return static_cast<int>(std::count_if(cfg.sensing_eigenvalues.begin(), cfg.sensing_eigenvalues.end(),
                                          [](double v) { return v > 0.0; }));
}

double rho3(const SystemConfig &cfg)
{
    return cfg.rho1 * cfg.rho2 / (cfg.rho1 + cfg.rho2);
}

ResourceSplit::ResourceSplit(double kappa, double mu) : kappa_(kappa), mu_(mu)
{
    if (!(kappa >= 0.0 && kappa <= 1.0))
        throw std::invalid_argument("kappa must lie in [0, 1]");
    if (!(mu >= 0.0 && mu <= 1.0))
        throw std::invalid_argument("mu must lie in [0, 1]");
}

Mode Mode::isac()
{
    return Mode(Kind::isac, ResourceSplit(1.0, 1.0));
}

Mode Mode::fdsac(ResourceSplit split)
{
    return Mode(Kind::fdsac, split);
}

std::string Mode::name() const
{
    return is_isac() ? "isac" : "fdsac";
}

double db_to_linear(double x_db)
{
    return std::pow(10.0, x_db / 10.0);
}

} // namespace nisac
