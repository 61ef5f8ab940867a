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

#ifndef NOMAISAC_CORE_HPP
#define NOMAISAC_CORE_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace nisac
{

// Raised by validate_config; what() names the first violated invariant.
class ConfigError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Static system parameters. All powers are dimensionless ratios.
struct SystemConfig
{
    double rho1 = 0.9;             // variance of unordered channel 1
    double rho2 = 0.2;             // variance of unordered channel 2
    double alpha_n = 0.2;          // near-user power allocation factor
    double alpha_f = 0.8;          // far-user power allocation factor
    double sigma2_c = 1.0;         // communication noise power
    double sigma2_s = 1.0;         // sensing noise power
    int num_rx_antennas = 8;       // M
    int frame_length = 30;         // L, symbols per frame / radar pulse
    double target_rate_n = 0.8;    // bits/s/Hz
    double target_rate_f = 0.8;    // bits/s/Hz
    std::vector<double> sensing_eigenvalues = {5.0, 3.0, 3.5, 2.5, 1.5, 2.0, 1.0, 0.5};

    bool operator==(const SystemConfig &) const = default;
};

// The reference parameter set; identical to a default-constructed SystemConfig.
SystemConfig default_config();

// Returns cfg unchanged if every invariant holds, throws ConfigError otherwise.
const SystemConfig &validate_config(const SystemConfig &cfg);

// Number of strictly positive sensing eigenvalues (the rank of the correlation matrix).
int sensing_rank(const SystemConfig &cfg);

// Harmonic-type combination rho1*rho2/(rho1+rho2): the mean of the weaker channel gain.
double rho3(const SystemConfig &cfg);

// Bandwidth fraction kappa and power fraction mu given to communications in FDSAC.
class ResourceSplit
{
public:
    ResourceSplit(double kappa, double mu); // throws std::invalid_argument outside [0,1]

    double kappa() const { return kappa_; }
    double mu() const { return mu_; }

    bool operator==(const ResourceSplit &) const = default;

private:
    double kappa_;
    double mu_;
};

// ISAC or FDSAC with a resource split. ISAC uses the full band and full power
// for both functions, so its communication side is kappa = mu = 1.
class Mode
{
public:
    enum class Kind
    {
        isac,
        fdsac
    };

    static Mode isac();
    static Mode fdsac(ResourceSplit split);
    static Mode fdsac(double kappa, double mu) { return fdsac(ResourceSplit(kappa, mu)); }

    Kind kind() const { return kind_; }
    bool is_isac() const { return kind_ == Kind::isac; }

    // Communication bandwidth and power fractions (1 for ISAC).
    double kappa() const { return split_.kappa(); }
    double mu() const { return split_.mu(); }

    // True if communications receive no bandwidth or no power.
    bool comm_degenerate() const { return kappa() == 0.0 || mu() == 0.0; }

    std::string name() const;

    bool operator==(const Mode &) const = default;

private:
    Mode(Kind kind, ResourceSplit split) : kind_(kind), split_(split) {}

    Kind kind_;
    ResourceSplit split_;
};

// Near-user, far-user and sensing rate at one operating point, bits/s/Hz.
struct RateTriple
{
    double rate_n = 0.0;
    double rate_f = 0.0;
    double rate_s = 0.0;
};

double db_to_linear(double x_db);

} // namespace nisac

#endif
