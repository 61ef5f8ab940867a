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

#ifndef NOMAISAC_SPECFUN_HPP
#define NOMAISAC_SPECFUN_HPP

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numbers>
#include <span>

namespace nisac
{

inline constexpr double euler_gamma = std::numbers::egamma_v<double>;

/// Exponential integral Ei(x) on the negative real axis, Ei(x) = -E1(-x).
///
/// Uses the convergent power series around the origin for |x| <= 1 and the
/// Lentz-evaluated continued fraction of E1 beyond that. Throws
/// std::domain_error for x >= 0 (including -0.0) and NaN. For |x| beyond
/// ~708 the true value underflows and -0.0 is returned.
double exp_int_ei(double x);

/// Ei(-chi/scale) * exp(chi/scale), evaluated without forming the exponential
/// factor for large arguments. Negative (-0.0 once the value underflows); tends to 0 as chi/scale grows
/// and behaves like euler_gamma + ln(chi/scale) as chi/scale -> 0.
double psi_term(double chi, double scale);

/// Sum of log2(1 + c * lambda) over the eigenvalue list, i.e. log2 det(I + cR)
/// for any Hermitian PSD R with that spectrum. Terms are accumulated in
/// ascending eigenvalue order with compensated summation, so the result does
/// not depend on the order of the input list.
double log2_det_i_plus_scaled(double c, std::span<const double> eigenvalues);

/// log2 det(A) for a Hermitian positive definite matrix, via Cholesky.
/// Throws std::domain_error if the factorisation fails.
double hermitian_log2_det(const Eigen::MatrixXcd &a);

/// Dense route for log2 det(I + c R).
double log2_det_i_plus_scaled_dense(double c, const Eigen::MatrixXcd &r);

// Neumaier-compensated running sum.
class CompensatedSum
{
public:
    void add(double v)
    {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace nisac

#endif
