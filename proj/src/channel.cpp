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

#include "nomaisac/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nisac
{

namespace
{

void require_nonnegative(double x, const char *what)
{
    if (!(x >= 0.0))
        throw std::domain_error(std::string(what) + ": argument must be nonnegative");
}

} // namespace

ChannelDraw sample_draw(const SystemConfig &cfg, CounterStream &stream)
{
    const double e1 = -cfg.rho1 * std::log1p(-stream.uniform());
    const double e2 = -cfg.rho2 * std::log1p(-stream.uniform());
    return {std::max(e1, e2), std::min(e1, e2)};
}

double cdf_near(double x, const SystemConfig &cfg)
{
    require_nonnegative(x, "cdf_near");
    return std::expm1(-x / cfg.rho1) * std::expm1(-x / cfg.rho2);
}

double cdf_far(double x, const SystemConfig &cfg)
{
    require_nonnegative(x, "cdf_far");
    return -std::expm1(-x / rho3(cfg));
}

double pdf_near(double x, const SystemConfig &cfg)
{
    require_nonnegative(x, "pdf_near");
    // f_N = f_1 (1 - e^{-x/rho2}) + f_2 (1 - e^{-x/rho1}); same value as the three-term
    // form but without cancellation near x = 0.
    return std::exp(-x / cfg.rho1) / cfg.rho1 * -std::expm1(-x / cfg.rho2) +
           std::exp(-x / cfg.rho2) / cfg.rho2 * -std::expm1(-x / cfg.rho1);
}

double pdf_far(double x, const SystemConfig &cfg)
{
    require_nonnegative(x, "pdf_far");
    const double r3 = rho3(cfg);
    return std::exp(-x / r3) / r3;
}

void validate_scene(const TargetScene &scene)
{
    if (scene.targets.empty())
        throw std::invalid_argument("target scene must contain at least one target");
    for (const Target &t : scene.targets)
    {
        if (!(t.strength > 0.0) || std::isinf(t.strength))
            throw std::invalid_argument("target strength must be positive");
        if (!(std::abs(t.aoa) <= std::numbers::pi / 2.0))
            throw std::invalid_argument("target angle of arrival must lie in [-pi/2, pi/2]");
    }
}

Eigen::VectorXcd steering_vector(double theta, int m)
{
    if (m < 1)
        throw std::domain_error("steering_vector: antenna count must be positive");
    Eigen::VectorXcd a(m);
    const double phase = std::numbers::pi * std::sin(theta);
    for (int i = 0; i < m; ++i)
        a(i) = std::polar(1.0, phase * i);
    return a;
}

CorrelationMatrix::CorrelationMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries))
{
    if (entries_.rows() != entries_.cols() || entries_.rows() == 0)
        throw std::invalid_argument("correlation matrix must be square and nonempty");
    const double scale = std::max(1.0, entries_.cwiseAbs().maxCoeff());
    if ((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw std::invalid_argument("correlation matrix must be Hermitian");
    // Symmetrise away round-off so the eigen solver sees an exactly Hermitian matrix.
    entries_ = 0.5 * (entries_ + entries_.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(entries_, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -1e-10 * scale)
        throw std::invalid_argument("correlation matrix must be positive semidefinite");
}

CorrelationMatrix CorrelationMatrix::diagonal(const std::vector<double> &eigenvalues)
{
    Eigen::VectorXcd d(static_cast<Eigen::Index>(eigenvalues.size()));
    for (std::size_t i = 0; i < eigenvalues.size(); ++i)
        d(static_cast<Eigen::Index>(i)) = eigenvalues[i];
    return CorrelationMatrix(d.asDiagonal().toDenseMatrix());
}

std::vector<double> CorrelationMatrix::eigenvalues() const
{
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(entries_, Eigen::EigenvaluesOnly);
    std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
    for (double &v : out)
        v = std::max(v, 0.0);
    return out;
}

int CorrelationMatrix::numeric_rank(double tol) const
{
    const auto ev = eigenvalues();
    const double largest = ev.empty() ? 0.0 : ev.back();
    if (largest <= 0.0)
        return 0;
    return static_cast<int>(std::count_if(ev.begin(), ev.end(), [&](double v) { return v > tol * largest; }));
}

CorrelationMatrix build_correlation(const TargetScene &scene, int m)
{
    validate_scene(scene);
    Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(m, m);
    for (const Target &t : scene.targets)
    {
        const Eigen::VectorXcd a = steering_vector(t.aoa, m);
        r += t.strength * (a * a.adjoint());
    }
    return CorrelationMatrix(std::move(r));
}

} // namespace nisac
