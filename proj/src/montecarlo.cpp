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

#include "nomaisac/montecarlo.hpp"

#include "nomaisac/analytic.hpp"
#include "nomaisac/specfun.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <numbers>
#include <thread>

namespace nisac
{

namespace
{

constexpr std::uint64_t block_size = 1u << 15;

// Runs fn(first, last) over fixed trial blocks on a pool of workers and returns the
// per-block results in block order.
template <class Partial, class Fn>
std::vector<Partial> run_blocks(std::uint64_t trials, unsigned workers, Fn fn)
{
    const std::uint64_t n_blocks = (trials + block_size - 1) / block_size;
    std::vector<Partial> partials(n_blocks);
    if (workers == 0)
        workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(n_blocks, 1)));

    std::atomic<std::uint64_t> next{0};
    auto work = [&] {
        for (std::uint64_t b = next++; b < n_blocks; b = next++)
            partials[b] = fn(b * block_size, std::min(trials, (b + 1) * block_size));
    };
    if (workers <= 1)
    {
        work();
        return partials;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back(work);
    pool.clear(); // joins
    return partials;
}

void check_request(double p, const McOptions &opts)
{
    if (opts.trials == 0)
        throw std::invalid_argument("Monte Carlo estimate needs at least one trial");
    if (!(p > 0.0))
        throw std::domain_error("Monte Carlo estimate: transmit power must be positive");
}

EstimateWithError binomial_estimate(std::uint64_t hits, std::uint64_t trials)
{
    const double q = static_cast<double>(hits) / static_cast<double>(trials);
    return {q, std::sqrt(q * (1.0 - q) / static_cast<double>(trials)), trials};
}

// Running mean and sum of squared deviations, merged pairwise (Chan et al.).
struct Moments
{
    std::uint64_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double v)
    {
        ++n;
        const double delta = v - mean;
        mean += delta / static_cast<double>(n);
        m2 += delta * (v - mean);
    }

    void merge(const Moments &o)
    {
        if (o.n == 0)
            return;
        const double total = static_cast<double>(n + o.n);
        const double delta = o.mean - mean;
        mean += delta * static_cast<double>(o.n) / total;
        m2 += o.m2 + delta * delta * static_cast<double>(n) * static_cast<double>(o.n) / total;
        n += o.n;
    }

    EstimateWithError estimate() const
    {
        const double var = n > 1 ? m2 / static_cast<double>(n - 1) : 0.0;
        return {mean, std::sqrt(var / static_cast<double>(n)), n};
    }
};

} // namespace

TrialSinrs trial_sinrs(const SystemConfig &cfg, const Mode &mode, double p, const ChannelDraw &draw)
{
    const double noise = mode.kappa() * cfg.sigma2_c;
    const double rx_n = mode.mu() * p * draw.gain_n;
    const double rx_f = mode.mu() * p * draw.gain_f;
    TrialSinrs s;
    s.sinr_sic = rx_n == 0.0 ? 0.0 : rx_n * cfg.alpha_f / (noise + rx_n * cfg.alpha_n);
    s.snr_n = rx_n == 0.0 ? 0.0 : rx_n * cfg.alpha_n / noise;
    s.sinr_f = rx_f == 0.0 ? 0.0 : rx_f * cfg.alpha_f / (noise + rx_f * cfg.alpha_n);
    return s;
}

UserEstimates estimate_outage(const SystemConfig &cfg, const Mode &mode, double p, const McOptions &opts)
{
    check_request(p, opts);
    if (mode.comm_degenerate())
        return {binomial_estimate(opts.trials, opts.trials), binomial_estimate(opts.trials, opts.trials)};
    const Thresholds th = thresholds(cfg, mode);

    struct Counts
    {
        std::uint64_t near = 0;
        std::uint64_t far = 0;
    };
    const auto blocks = run_blocks<Counts>(opts.trials, opts.workers, [&](std::uint64_t first, std::uint64_t last) {
        Counts c;
        for (std::uint64_t i = first; i < last; ++i)
        {
            CounterStream stream(opts.seed, i);
            const TrialSinrs s = trial_sinrs(cfg, mode, p, sample_draw(cfg, stream));
            if (!(s.sinr_sic > th.gamma_bar_f && s.snr_n > th.gamma_bar_n))
                ++c.near;
            if (s.sinr_f < th.gamma_bar_f)
                ++c.far;
        }
        return c;
    });

    Counts total;
    for (const Counts &c : blocks)
    {
        total.near += c.near;
        total.far += c.far;
    }
    return {binomial_estimate(total.near, opts.trials), binomial_estimate(total.far, opts.trials)};
}

UserEstimates estimate_ecr(const SystemConfig &cfg, const Mode &mode, double p, const McOptions &opts)
{
    check_request(p, opts);
    if (mode.comm_degenerate())
        return {{0.0, 0.0, opts.trials}, {0.0, 0.0, opts.trials}};
    const double kappa = mode.kappa();

    struct Pair
    {
        Moments near;
        Moments far;
    };
    const auto blocks = run_blocks<Pair>(opts.trials, opts.workers, [&](std::uint64_t first, std::uint64_t last) {
        Pair acc;
        for (std::uint64_t i = first; i < last; ++i)
        {
            CounterStream stream(opts.seed, i);
            const TrialSinrs s = trial_sinrs(cfg, mode, p, sample_draw(cfg, stream));
            acc.near.add(kappa * std::log1p(s.snr_n) / std::numbers::ln2);
            acc.far.add(kappa * std::log1p(s.sinr_f) / std::numbers::ln2);
        }
        return acc;
    });

    Pair total;
    for (const Pair &b : blocks)
    {
        total.near.merge(b.near);
        total.far.merge(b.far);
    }
    return {total.near.estimate(), total.far.estimate()};
}

double sensing_mi_bruteforce(std::span<const std::complex<double>> x, const CorrelationMatrix &corr, double sigma2_s)
{
    if (!(sigma2_s > 0.0))
        throw std::domain_error("sensing noise power must be positive");
    const Eigen::Index frame = static_cast<Eigen::Index>(x.size());
    const Eigen::Index m = corr.size();
    if (frame < 1)
        throw std::invalid_argument("sensing signal must have at least one symbol");
    if (frame * m > max_bruteforce_dimension)
        throw std::invalid_argument("sensing_mi_bruteforce: L*M exceeds the dense evaluation bound");

    // X = I_M (x) x, so that vec(Y^T) = X g + n.
    Eigen::MatrixXcd big_x = Eigen::MatrixXcd::Zero(frame * m, m);
    for (Eigen::Index col = 0; col < m; ++col)
        for (Eigen::Index l = 0; l < frame; ++l)
            big_x(col * frame + l, col) = x[static_cast<std::size_t>(l)];

    Eigen::MatrixXcd k = big_x * corr.entries() * big_x.adjoint() / sigma2_s;
    k = 0.5 * (k + k.adjoint()).eval();
    k += Eigen::MatrixXcd::Identity(frame * m, frame * m);
    return hermitian_log2_det(k);
}

double sensing_mi_reduced(std::span<const std::complex<double>> x, const CorrelationMatrix &corr, double sigma2_s)
{
    if (!(sigma2_s > 0.0))
        throw std::domain_error("sensing noise power must be positive");
    if (x.empty())
        throw std::invalid_argument("sensing signal must have at least one symbol");
    CompensatedSum energy;
    for (const auto &v : x)
        energy.add(std::norm(v));
    return log2_det_i_plus_scaled_dense(energy.value() / sigma2_s, corr.entries());
}

Eigen::MatrixXcd orthogonal_streams(int frame_length, CounterStream &stream)
{
    if (frame_length < 2)
        throw std::invalid_argument("orthogonal_streams: need at least two symbols per frame");
    Eigen::VectorXcd v1(frame_length), v2(frame_length);
    for (int l = 0; l < frame_length; ++l)
        v1(l) = stream.complex_normal();
    for (int l = 0; l < frame_length; ++l)
        v2(l) = stream.complex_normal();

    const Eigen::VectorXcd e1 = v1.normalized();
    const Eigen::VectorXcd e2 = (v2 - e1.dot(v2) * e1).normalized(); // dot() conjugates its left operand
    Eigen::MatrixXcd s(2, frame_length);
    s.row(0) = std::sqrt(static_cast<double>(frame_length)) * e1.transpose();
    s.row(1) = std::sqrt(static_cast<double>(frame_length)) * e2.transpose();
    return s;
}

Eigen::MatrixXcd random_streams(int frame_length, CounterStream &stream)
{
    if (frame_length < 1)
        throw std::invalid_argument("random_streams: frame length must be positive");
    Eigen::MatrixXcd s(2, frame_length);
    for (int row = 0; row < 2; ++row)
        for (int l = 0; l < frame_length; ++l)
            s(row, l) = stream.complex_normal();
    return s;
}

Eigen::VectorXcd dual_function_signal(const SystemConfig &cfg, double p, const Eigen::MatrixXcd &streams)
{
    if (streams.rows() != 2)
        throw std::invalid_argument("dual_function_signal: expected two data streams");
    Eigen::Vector2cd weights(std::sqrt(cfg.alpha_n), std::sqrt(cfg.alpha_f));
    return std::sqrt(p) * (streams.transpose() * weights);
}

double estimate_slope(std::span<const SlopePoint> points)
{
    if (points.size() < 2)
        throw std::invalid_argument("estimate_slope: need at least two points");
    const double n = static_cast<double>(points.size());
    double mx = 0.0, my = 0.0;
    for (const auto &pt : points)
    {
        mx += pt.x;
        my += pt.y;
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (const auto &pt : points)
    {
        sxx += (pt.x - mx) * (pt.x - mx);
        sxy += (pt.x - mx) * (pt.y - my);
    }
    if (!(sxx > 0.0))
        throw std::invalid_argument("estimate_slope: abscissae are degenerate");
    return sxy / sxx;
}

} // namespace nisac
