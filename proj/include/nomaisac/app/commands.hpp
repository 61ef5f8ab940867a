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

#ifndef NOMAISAC_APP_COMMANDS_HPP
#define NOMAISAC_APP_COMMANDS_HPP

#include "nomaisac/app/table.hpp"
#include "nomaisac/core.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace nisac::app
{

// SNR axis and Monte Carlo settings shared by the sweep commands.
struct SweepSpec
{
    double snr_db_min = 0.0;
    double snr_db_max = 40.0;
    double snr_db_step = 5.0;
    std::uint64_t trials = 0; // 0 = analytic columns only
    std::uint64_t seed = 1;
    Mode::Kind kind = Mode::Kind::isac;
    ResourceSplit split{0.5, 0.5}; // FDSAC split; also the FDSAC column of the sensing table
    unsigned workers = 0;

    Mode mode() const { return kind == Mode::Kind::isac ? Mode::isac() : Mode::fdsac(split); }
};

// Throws std::invalid_argument on an empty or malformed axis.
void validate_sweep(const SweepSpec &spec);

// snr_db_min + i * snr_db_step for every i that stays within snr_db_max.
std::vector<double> snr_grid(const SweepSpec &spec);

struct CommandOutput
{
    Table table;
    nlohmann::json metadata;
    std::vector<std::string> warnings; // for the diagnostic stream, never the data file
};

// Outage probability: analytic, asymptotic and (if trials > 0) empirical columns.
CommandOutput outage_command(const SystemConfig &cfg, const SweepSpec &spec);

// Ergodic rates of both users and their sum: analytic, asymptotic and empirical columns.
CommandOutput ecr_command(const SystemConfig &cfg, const SweepSpec &spec);

// Sensing rate of ISAC and of FDSAC with spec.split, exact and asymptotic.
CommandOutput sensing_command(const SystemConfig &cfg, const SweepSpec &spec);

// ISAC corner, FDSAC (kappa, mu) grid, its Pareto subset and the containment verdict.
CommandOutput region_command(const SystemConfig &cfg, double p_db, int grid_n);

nlohmann::json config_json(const SystemConfig &cfg);

// Full command-line entry point. Exit codes: 0 success, 1 usage or configuration
// error, 2 self-test failure.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace nisac::app

#endif
