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

#ifndef NOMAISAC_CHANNEL_HPP
#define NOMAISAC_CHANNEL_HPP

#include "nomaisac/core.hpp"
#include "nomaisac/rng.hpp"

#include <Eigen/Dense>

#include <vector>

namespace nisac
{

// One realisation of the ordered squared channel gains, gain_n >= gain_f >= 0.
struct ChannelDraw
{
    double gain_n = 0.0; // |h_N|^2 = max(|h_1|^2, |h_2|^2)
    double gain_f = 0.0; // |h_F|^2 = min(|h_1|^2, |h_2|^2)
};

// Draws |h_1|^2 ~ Exp(mean rho1) and |h_2|^2 ~ Exp(mean rho2) by inverse CDF and orders them.
ChannelDraw sample_draw(const SystemConfig &cfg, CounterStream &stream);

// Distribution of the ordered gains. All throw std::domain_error for x < 0.
double cdf_near(double x, const SystemConfig &cfg);
double cdf_far(double x, const SystemConfig &cfg);
double pdf_near(double x, const SystemConfig &cfg);
double pdf_far(double x, const SystemConfig &cfg);

struct Target
{
    double strength = 1.0; // sigma_k^2, average reflection power
    double aoa = 0.0;      // radians in [-pi/2, pi/2]
};

struct TargetScene
{
    std::vector<Target> targets;
};

// Throws std::invalid_argument for an empty scene, nonpositive strengths or out-of-range angles.
void validate_scene(const TargetScene &scene);

// Half-wavelength uniform linear array response; entry i is exp(j pi i sin(theta)).
Eigen::VectorXcd steering_vector(double theta, int m);

// Hermitian PSD M x M correlation matrix of the target response vector.
class CorrelationMatrix
{
public:
    // Throws std::invalid_argument unless the matrix is square, Hermitian to 1e-12
    // (relative to its largest entry) and has no eigenvalue below -1e-10.
    explicit CorrelationMatrix(Eigen::MatrixXcd entries);

    static CorrelationMatrix diagonal(const std::vector<double> &eigenvalues);

    const Eigen::MatrixXcd &entries() const { return entries_; }
    Eigen::Index size() const { return entries_.rows(); }

    // Eigenvalues in ascending order, tiny negative round-off clamped to zero.
    std::vector<double> eigenvalues() const;

    // Number of eigenvalues above tol * largest eigenvalue.
    int numeric_rank(double tol = 1e-9) const;

private:
    Eigen::MatrixXcd entries_;
};

// R = sum_k sigma_k^2 a(theta_k) a(theta_k)^H.
CorrelationMatrix build_correlation(const TargetScene &scene, int m);

} // namespace nisac

#endif
