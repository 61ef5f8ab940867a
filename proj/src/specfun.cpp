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

#include "nomaisac/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace nisac
{

namespace
{

constexpr double series_limit = 1.0; // |x| at or below which the power series is used
constexpr double rel_eps = std::numeric_limits<double>::epsilon();
constexpr int max_iterations = 500;

// Ei(-z) for 0 < z <= series_limit: euler_gamma + ln z + sum_k (-z)^k / (k k!).
double ei_neg_series(double z)
{
    double term = 1.0;
    double sum = 0.0;
    for (int k = 1; k < max_iterations; ++k)
    {
        term *= -z / k;
        const double contrib = term / k;
        sum += contrib;
        if (std::abs(contrib) < rel_eps * std::abs(sum))
            break;
    }
    return euler_gamma + std::log(z) + sum;
}

// exp(z) * E1(z) for z > series_limit, modified Lentz evaluation of the continued fraction
// E1(z) = exp(-z) / (z + 1 - 1^2 / (z + 3 - 2^2 / (z + 5 - ...))).
double scaled_e1_fraction(double z)
{
    constexpr double tiny = 1e-300;
    double b = z + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < max_iterations; ++i)
    {
        const double a = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const double delta = c * d;
        h *= delta;
        if (std::abs(delta - 1.0) <= rel_eps)
            return h;
    }
    throw std::runtime_error("exponential integral continued fraction did not converge");
}

void require_negative(double x)
{
    if (!(x < 0.0))
        throw std::domain_error("exp_int_ei: argument must be strictly negative");
}

} // namespace

double exp_int_ei(double x)
{
    require_negative(x);
    const double z = -x;
    if (z <= series_limit)
        return ei_neg_series(z);
    return -scaled_e1_fraction(z) * std::exp(-z);
}

double psi_term(double chi, double scale)
{
    if (!(chi > 0.0) || !(scale > 0.0))
        throw std::domain_error("psi_term: chi and scale must be positive");
    const double z = chi / scale;
    if (!(z > 0.0))
        throw std::domain_error("psi_term: chi/scale underflows to zero");
    if (z <= series_limit)
        return ei_neg_series(z) * std::exp(z);
    if (std::isinf(z))
        return -0.0;
    return -scaled_e1_fraction(z);
}

double log2_det_i_plus_scaled(double c, std::span<const double> eigenvalues)
{
    if (!(c >= 0.0))
        throw std::domain_error("log2_det_i_plus_scaled: scale must be nonnegative");
    std::vector<double> sorted(eigenvalues.begin(), eigenvalues.end());
    for (double v : sorted)
        if (!(v >= 0.0))
            throw std::domain_error("log2_det_i_plus_scaled: eigenvalues must be nonnegative");
    std::sort(sorted.begin(), sorted.end());

    CompensatedSum acc;
    for (double v : sorted)
        acc.add(std::log1p(c * v));
    return acc.value() / std::numbers::ln2;
}

double hermitian_log2_det(const Eigen::MatrixXcd &a)
{
    if (a.rows() != a.cols())
        throw std::domain_error("hermitian_log2_det: matrix must be square");
    Eigen::LLT<Eigen::MatrixXcd> llt(a);
    if (llt.info() != Eigen::Success)
        throw std::domain_error("hermitian_log2_det: matrix is not positive definite");
    const Eigen::MatrixXcd &l = llt.matrixLLT();
    CompensatedSum acc;
    for (Eigen::Index i = 0; i < l.rows(); ++i)
        acc.add(std::log(l(i, i).real()));
    return 2.0 * acc.value() / std::numbers::ln2;
}

double log2_det_i_plus_scaled_dense(double c, const Eigen::MatrixXcd &r)
{
    if (!(c >= 0.0))
        throw std::domain_error("log2_det_i_plus_scaled_dense: scale must be nonnegative");
    const Eigen::MatrixXcd a = Eigen::MatrixXcd::Identity(r.rows(), r.cols()) + c * r;
    return hermitian_log2_det(a);
}

} // namespace nisac
