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

#include "nomaisac/app/acceptance.hpp"

#include "nomaisac/analytic.hpp"
#include "nomaisac/app/commands.hpp"
#include "nomaisac/montecarlo.hpp"
#include "nomaisac/region.hpp"
#include "nomaisac/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace nisac::app
{

namespace
{

std::string num(double v)
{
    return format_number(v, 4);
}

Mode fdsac_mode()
{
    return Mode::fdsac(acceptance_kappa, acceptance_mu);
}

std::vector<Mode> both_modes()
{
    return {Mode::isac(), fdsac_mode()};
}

// Random Hermitian PSD matrix U diag(lambda) U^H with a Haar-like unitary U and the
// given spectrum.
Eigen::MatrixXcd conjugated_diagonal(const std::vector<double> &spectrum, CounterStream &stream)
{
    const auto m = static_cast<Eigen::Index>(spectrum.size());
    Eigen::MatrixXcd g(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < m; ++j)
            g(i, j) = stream.complex_normal();
    const Eigen::MatrixXcd q = Eigen::HouseholderQR<Eigen::MatrixXcd>(g).householderQ();
    Eigen::VectorXcd d(m);
    for (Eigen::Index i = 0; i < m; ++i)
        d(i) = spectrum[static_cast<std::size_t>(i)];
    Eigen::MatrixXcd r = q * d.asDiagonal() * q.adjoint();
    return 0.5 * (r + r.adjoint());
}

// Spectrum of size m with a random rank in [1, m] and positive entries in (0.1, 5].
std::vector<double> random_spectrum(int m, CounterStream &stream)
{
    const int rank = 1 + static_cast<int>(stream.uniform() * m);
    std::vector<double> spectrum(static_cast<std::size_t>(m), 0.0);
    for (int a = 0; a < rank; ++a)
        spectrum[static_cast<std::size_t>(a)] = 0.1 + 4.9 * (1.0 - stream.uniform());
    return spectrum;
}

// Drops the trailing "; " of a list built with operator<<.
std::string joined(const std::ostringstream &parts)
{
    std::string s = parts.str();
    if (s.size() >= 2 && s.compare(s.size() - 2, 2, "; ") == 0)
        s.resize(s.size() - 2);
    return s;
}

double rel_diff(double a, double b)
{
    return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

} // namespace

std::vector<double> acceptance_snr_db()
{
    return {0.0, 5.0, 10.0, 15.0, 20.0, 25.0, 30.0, 35.0, 40.0};
}

CheckResult check_outage_agreement(const SystemConfig &cfg, const AcceptanceOptions &opts)
{
    CheckResult r{"AC1", "closed-form vs Monte Carlo outage (3 binomial std errors)", true, {}};
    double worst_z = 0.0;
    std::string worst_at = "-";
    for (const Mode &mode : both_modes())
        for (double db : acceptance_snr_db())
        {
            const double p = db_to_linear(db);
            const OutagePair exact = outage_probability(cfg, mode, p);
            const UserEstimates mc = estimate_outage(cfg, mode, p, {opts.trials, opts.seed, opts.workers});
            const double n = static_cast<double>(opts.trials);
            const std::pair<double, double> users[] = {{exact.near, mc.near.value}, {exact.far, mc.far.value}};
            for (int u = 0; u < 2; ++u)
            {
                const auto [q, est] = users[u];
                // The larger of the empirical and closed-form binomial errors: the first alone is
                // zero when no outage is seen, the second alone is tiny for a single rare event.
                const double se = std::max(std::sqrt(q * (1.0 - q) / n), std::sqrt(est * (1.0 - est) / n));
                const double diff = std::abs(q - est);
                const bool ok = se > 0.0 ? diff <= 3.0 * se : diff == 0.0;
                const double z = se > 0.0 ? diff / se : (diff == 0.0 ? 0.0 : INFINITY);
                if (!ok)
                    r.passed = false;
                if (z > worst_z)
                {
                    worst_z = z;
                    worst_at = mode.name() + " " + (u == 0 ? "NU" : "FU") + " @ " + num(db) + " dB";
                }
            }
        }
    r.detail = "trials=" + std::to_string(opts.trials) + " worst |z|=" + num(worst_z) + " (" + worst_at + ")";
    return r;
}

CheckResult check_ecr_agreement(const SystemConfig &cfg, const AcceptanceOptions &opts)
{
    CheckResult r{"AC2", "closed-form vs Monte Carlo ergodic rate (max(3 se, 1e-2))", true, {}};
    double worst_ratio = 0.0;
    std::string worst_at = "-";
    for (const Mode &mode : both_modes())
        for (double db : acceptance_snr_db())
        {
            const double p = db_to_linear(db);
            const RatePair exact = ergodic_rates(cfg, mode, p);
            const UserEstimates mc = estimate_ecr(cfg, mode, p, {opts.trials, opts.seed, opts.workers});
            const std::pair<double, EstimateWithError> users[] = {{exact.near, mc.near}, {exact.far, mc.far}};
            for (int u = 0; u < 2; ++u)
            {
                const auto &[value, est] = users[u];
                const double tol = std::max(3.0 * est.std_error, 1e-2);
                const double ratio = std::abs(value - est.value) / tol;
                if (!(ratio <= 1.0))
                    r.passed = false;
                if (ratio > worst_ratio)
                {
                    worst_ratio = ratio;
                    worst_at = mode.name() + " " + (u == 0 ? "NU" : "FU") + " @ " + num(db) + " dB";
                }
            }
        }
    r.detail = "trials=" + std::to_string(opts.trials) + " worst |diff|/tol=" + num(worst_ratio) + " (" + worst_at + ")";
    return r;
}

CheckResult check_diversity_orders(const SystemConfig &cfg)
{
    CheckResult r{"AC3", "outage diversity orders over 30-40 dB", true, {}};
    std::ostringstream detail;
    for (const Mode &mode : both_modes())
    {
        std::vector<SlopePoint> near, far;
        for (int db = 30; db <= 40; ++db)
        {
            const double p = db_to_linear(db);
            const OutagePair op = outage_probability(cfg, mode, p);
            near.push_back({std::log10(p), std::log10(op.near)});
            far.push_back({std::log10(p), std::log10(op.far)});
        }
        const double s_near = estimate_slope(near);
        const double s_far = estimate_slope(far);
        const bool ok = s_near >= -2.15 && s_near <= -1.85 && s_far >= -1.1 && s_far <= -0.9;
        r.passed = r.passed && ok;
        detail << mode.name() << ": NU " << num(s_near) << " FU " << num(s_far) << "; ";
    }
    r.detail = joined(detail);
    return r;
}

CheckResult check_rate_slopes(const SystemConfig &cfg)
{
    CheckResult r{"AC4", "ergodic-rate high-SNR slopes over a 4x power step at 40 dB", true, {}};
    const double p_hi = db_to_linear(40.0);
    const double p_lo = p_hi / 4.0;
    std::ostringstream detail;
    for (const Mode &mode : both_modes())
    {
        const RatePair hi = ergodic_rates(cfg, mode, p_hi);
        const RatePair lo = ergodic_rates(cfg, mode, p_lo);
        const double s_near = (hi.near - lo.near) / 2.0;
        const double s_far = (hi.far - lo.far) / 2.0;
        const double s_sum = (hi.sum() - lo.sum()) / 2.0;
        const double expected = mode.kappa(); // 1 for ISAC
        const bool ok = std::abs(s_near - expected) <= 0.05 && std::abs(s_far) < 0.05 &&
                        std::abs(s_sum - expected) <= 0.05;
        r.passed = r.passed && ok;
        detail << mode.name() << ": NU " << num(s_near) << " FU " << num(s_far) << " sum " << num(s_sum) << "; ";
    }
    r.detail = joined(detail);
    return r;
}

CheckResult check_sensing_identity(const SystemConfig &cfg, const AcceptanceOptions &opts)
{
    CheckResult r{"AC5", "sensing-rate eigenvalue sum and LM x LM determinant identities", true, {}};
    CounterStream stream(opts.seed, 0x5E45'0000ull);

    double worst_eig = 0.0;
    for (int instance = 0; instance < 20; ++instance)
    {
        const int m = 1 + static_cast<int>(stream.uniform() * 8);
        const std::vector<double> spectrum = random_spectrum(m, stream);
        const Eigen::MatrixXcd big_r = conjugated_diagonal(spectrum, stream);
        const double p = db_to_linear(40.0 * stream.uniform());
        const double c = p * cfg.frame_length / cfg.sigma2_s;
        worst_eig = std::max(worst_eig, rel_diff(log2_det_i_plus_scaled(c, spectrum),
                                                 log2_det_i_plus_scaled_dense(c, big_r)));
    }

    double worst_brute = 0.0;
    for (int instance = 0; instance < 50; ++instance)
    {
        const int m = 1 + static_cast<int>(stream.uniform() * 4);
        const int frame = 1 + static_cast<int>(stream.uniform() * 8);
        const CorrelationMatrix corr(conjugated_diagonal(random_spectrum(m, stream), stream));
        std::vector<std::complex<double>> x(static_cast<std::size_t>(frame));
        const double amplitude = std::sqrt(db_to_linear(20.0 * stream.uniform()));
        for (auto &v : x)
            v = amplitude * stream.complex_normal();
        worst_brute = std::max(worst_brute, rel_diff(sensing_mi_bruteforce(x, corr, cfg.sigma2_s),
                                                     sensing_mi_reduced(x, corr, cfg.sigma2_s)));
    }
    r.passed = worst_eig <= 1e-9 && worst_brute <= 1e-8;
    r.detail = "eigen-sum vs dense worst rel " + num(worst_eig) + " (tol 1e-9); brute vs reduced worst rel " +
               num(worst_brute) + " (tol 1e-8)";
    return r;
}

CheckResult check_sensing_slopes(const SystemConfig &cfg)
{
    CheckResult r{"AC6", "sensing-rate asymptote slopes and 40 dB gap", true, {}};
    const double rank = sensing_rank(cfg);
    const double frame = cfg.frame_length;
    const double p = db_to_linear(40.0);
    std::ostringstream detail;
    for (const Mode &mode : both_modes())
    {
        const double band = mode.is_isac() ? 1.0 : 1.0 - mode.kappa();
        const double expected = band * rank / frame;
        const double slope = (sensing_rate_asymptotic(cfg, mode, 4.0 * p) - sensing_rate_asymptotic(cfg, mode, p)) / 2.0;
        const double gap = std::abs(sensing_rate(cfg, mode, p) - sensing_rate_asymptotic(cfg, mode, p));
        const bool ok = std::abs(slope - expected) <= 1e-12 && gap < 1e-3;
        r.passed = r.passed && ok;
        detail << mode.name() << ": slope " << format_number(slope, 12) << " (expect " << format_number(expected, 12)
               << ") gap " << num(gap) << "; ";
    }
    r.detail = joined(detail);
    return r;
}

CheckResult check_region_containment(const SystemConfig &cfg)
{
    CheckResult r{"AC7", "FDSAC region inside ISAC rectangle at 5 dB (101 x 101 grid)", true, {}};
    const double p = db_to_linear(5.0);
    const int grid_n = 101;
    const RegionFrontier frontier = fdsac_frontier(cfg, p, grid_n);
    const RatePoint corner = isac_corner(cfg, p);
    const ContainmentReport report = containment_check(frontier, corner);

    const FrontierPoint &origin = frontier.points.front(); // (kappa, mu) = (0, 0)
    const FrontierPoint &full = frontier.points.back();    // (1, 1)
    const bool corners_exact = origin.kappa == 0.0 && origin.mu == 0.0 && full.kappa == 1.0 && full.mu == 1.0;
    const double sr_gap = std::abs(origin.rates.rate_s - corner.rate_s);
    const double ecr_gap = std::abs(full.rates.rate_c - corner.rate_c);
    r.passed = report.holds && corners_exact && sr_gap <= 1e-9 && ecr_gap <= 1e-9;
    r.detail = "max violation " + num(report.max_violation) + "; |SR(0,0) - SR_isac| " + num(sr_gap) +
               "; |ECR(1,1) - ECR_isac| " + num(ecr_gap);
    return r;
}

CheckResult check_split_inequality(const AcceptanceOptions &opts)
{
    CheckResult r{"AC8", "split-resource rate inequality at 10^4 random tuples", true, {}};
    CounterStream stream(opts.seed, 0x1E'4A00ull);
    int violations = 0;
    double worst = INFINITY;
    for (int i = 0; i < 10'000; ++i)
    {
        const double y1 = std::pow(10.0, -3.0 + 6.0 * stream.uniform());
        const double y2 = stream.uniform() < 0.1 ? 0.0 : std::pow(10.0, -3.0 + 6.0 * stream.uniform());
        const double kappa = 1.0 - stream.uniform();
        const double mu = 1.0 - stream.uniform();
        const double gap = split_rate_gap(y1, y2, kappa, mu);
        worst = std::min(worst, gap);
        if (gap < -1e-12)
            ++violations;
    }
    r.passed = violations == 0;
    r.detail = "violations " + std::to_string(violations) + "; smallest gap " + num(worst);
    return r;
}

CheckResult check_special_functions(const AcceptanceOptions &opts)
{
    CheckResult r{"AC9", "exponential integral derivative identity and small-argument limit", true, {}};
    CounterStream stream(opts.seed, 0xE1'0000ull);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i)
    {
        const double x = -10.0 + 9.9 * stream.uniform();
        const double h = 1e-5 * std::abs(x);
        const double fd = (exp_int_ei(x + h) - exp_int_ei(x - h)) / (2.0 * h);
        worst = std::max(worst, rel_diff(fd, std::exp(x) / x));
    }
    const double small = 1e-6;
    const double limit_gap = std::abs(exp_int_ei(-small) - (euler_gamma + std::log(small)));
    r.passed = worst <= 1e-6 && limit_gap <= 1e-5;
    r.detail = "derivative worst rel " + num(worst) + "; |Ei(-1e-6) - (gamma + ln 1e-6)| " + num(limit_gap);
    return r;
}

CheckResult check_determinism(const SystemConfig &cfg, const AcceptanceOptions &opts)
{
    CheckResult r{"AC10", "byte-identical outputs across runs and worker counts", true, {}};
    SweepSpec spec;
    spec.trials = std::min<std::uint64_t>(opts.trials, 200'000);
    spec.seed = opts.seed;
    spec.snr_db_step = 10.0;

    auto render_all = [&](unsigned workers) {
        std::ostringstream buf;
        SweepSpec s = spec;
        s.workers = workers;
        for (Mode::Kind kind : {Mode::Kind::isac, Mode::Kind::fdsac})
        {
            s.kind = kind;
            for (const CommandOutput &out : {outage_command(cfg, s), ecr_command(cfg, s)})
            {
                write_table(buf, out.table, OutputFormat::csv, out.metadata);
                write_table(buf, out.table, OutputFormat::json, out.metadata);
            }
        }
        const CommandOutput region = region_command(cfg, 5.0, 21);
        write_table(buf, region.table, OutputFormat::csv, region.metadata);
        return buf.str();
    };

    const std::string reference = render_all(1);
    int mismatches = 0;
    for (unsigned workers : {1u, 2u, 4u, 7u})
        if (render_all(workers) != reference)
            ++mismatches;
    r.passed = mismatches == 0;
    r.detail = "4 reruns with 1/2/4/7 workers, " + std::to_string(reference.size()) + " bytes each, mismatches " +
               std::to_string(mismatches);
    return r;
}

std::vector<CheckResult> run_acceptance(const SystemConfig &cfg, const AcceptanceOptions &opts)
{
    validate_config(cfg);
    return {check_outage_agreement(cfg, opts), check_ecr_agreement(cfg, opts), check_diversity_orders(cfg),
            check_rate_slopes(cfg),           check_sensing_identity(cfg, opts), check_sensing_slopes(cfg),
            check_region_containment(cfg),    check_split_inequality(opts),      check_special_functions(opts),
            check_determinism(cfg, opts)};
}

bool all_passed(const std::vector<CheckResult> &results)
{
    return std::all_of(results.begin(), results.end(), [](const CheckResult &c) { return c.passed; });
}

std::string format_report(const std::vector<CheckResult> &results)
{
    std::ostringstream out;
    int passed = 0;
    for (const auto &c : results)
    {
        out << c.id << std::string(c.id.size() < 5 ? 5 - c.id.size() : 0, ' ') << ' ' << (c.passed ? "PASS" : "FAIL")
            << "  " << c.title << " | " << c.detail << '\n';
        passed += c.passed ? 1 : 0;
    }
    out << passed << '/' << results.size() << " checks passed\n";
    return out.str();
}

} // namespace nisac::app
