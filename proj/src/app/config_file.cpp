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

#include "nomaisac/app/config_file.hpp"

#include "nomaisac/app/table.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace nisac::app
{

namespace
{

std::string trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

class LineError
{
public:
    LineError(const std::string &origin, int line) : prefix_(origin + ":" + std::to_string(line) + ": ") {}
    [[noreturn]] void fail(const std::string &msg) const { throw ConfigError(prefix_ + msg); }

private:
    std::string prefix_;
};

double parse_double(const std::string &text, const LineError &err)
{
    double v = 0.0;
    const char *end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end || text.empty())
        err.fail("not a number: '" + text + "'");
    return v;
}

int parse_int(const std::string &text, const LineError &err)
{
    int v = 0;
    const char *end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end || text.empty())
        err.fail("not an integer: '" + text + "'");
    return v;
}

std::vector<double> parse_list(const std::string &text, const LineError &err)
{
    std::vector<double> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
    {
        item = trim(item);
        if (item.empty())
            err.fail("empty entry in list");
        out.push_back(parse_double(item, err));
    }
    return out;
}

// Eigenvalues of a scene-built correlation matrix; numerically-zero ones are set to exactly 0
// so they do not count towards the rank.
std::vector<double> scene_eigenvalues(const TargetScene &scene, int m)
{
    const CorrelationMatrix r = build_correlation(scene, m);
    std::vector<double> ev = r.eigenvalues();
    const double largest = ev.empty() ? 0.0 : ev.back();
    for (double &v : ev)
        if (v <= 1e-9 * largest)
            v = 0.0;
    std::sort(ev.rbegin(), ev.rend());
    return ev;
}

} // namespace

LoadedConfig parse_config(std::istream &in, const std::string &origin)
{
    LoadedConfig out;
    SystemConfig &cfg = out.system;
    std::set<std::string> seen;
    std::vector<double> strengths, aoas;
    bool explicit_eigenvalues = false;

    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw))
    {
        ++line_no;
        const LineError err(origin, line_no);
        if (const auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            err.fail("expected key=value");
        const std::string key = trim(std::string_view(line).substr(0, eq));
        const std::string value = trim(std::string_view(line).substr(eq + 1));

        if (key == "target.strength")
        {
            strengths.push_back(parse_double(value, err));
            continue;
        }
        if (key == "target.aoa")
        {
            aoas.push_back(parse_double(value, err));
            continue;
        }
        if (!seen.insert(key).second)
            err.fail("duplicate key '" + key + "'");

        if (key == "rho1")
            cfg.rho1 = parse_double(value, err);
        else if (key == "rho2")
            cfg.rho2 = parse_double(value, err);
        else if (key == "alpha_n")
            cfg.alpha_n = parse_double(value, err);
        else if (key == "alpha_f")
            cfg.alpha_f = parse_double(value, err);
        else if (key == "sigma2_c")
            cfg.sigma2_c = parse_double(value, err);
        else if (key == "sigma2_s")
            cfg.sigma2_s = parse_double(value, err);
        else if (key == "num_rx_antennas")
            cfg.num_rx_antennas = parse_int(value, err);
        else if (key == "frame_length")
            cfg.frame_length = parse_int(value, err);
        else if (key == "target_rate_n")
            cfg.target_rate_n = parse_double(value, err);
        else if (key == "target_rate_f")
            cfg.target_rate_f = parse_double(value, err);
        else if (key == "sensing_eigenvalues")
        {
            cfg.sensing_eigenvalues = value.empty() ? std::vector<double>{} : parse_list(value, err);
            explicit_eigenvalues = true;
        }
        else
            err.fail("unknown key '" + key + "'");
    }

    if (strengths.size() != aoas.size())
        throw ConfigError(origin + ": target.strength and target.aoa must appear the same number of times");
    if (!strengths.empty())
    {
        if (explicit_eigenvalues)
            throw ConfigError(origin + ": sensing_eigenvalues and a target scene are mutually exclusive");
        TargetScene scene;
        for (std::size_t i = 0; i < strengths.size(); ++i)
            scene.targets.push_back({strengths[i], aoas[i]});
        if (cfg.num_rx_antennas < 1)
            throw ConfigError("num_rx_antennas must be positive");
        try
        {
            cfg.sensing_eigenvalues = scene_eigenvalues(scene, cfg.num_rx_antennas);
        }
        catch (const std::invalid_argument &e)
        {
            throw ConfigError(origin + ": " + e.what());
        }
        out.scene = std::move(scene);
    }
    validate_config(cfg);
    return out;
}

LoadedConfig load_config_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    return parse_config(in, path);
}

std::string format_config(const SystemConfig &cfg)
{
    std::ostringstream out;
    out << "rho1=" << format_number(cfg.rho1, 17) << '\n'
        << "rho2=" << format_number(cfg.rho2, 17) << '\n'
        << "alpha_n=" << format_number(cfg.alpha_n, 17) << '\n'
        << "alpha_f=" << format_number(cfg.alpha_f, 17) << '\n'
        << "sigma2_c=" << format_number(cfg.sigma2_c, 17) << '\n'
        << "sigma2_s=" << format_number(cfg.sigma2_s, 17) << '\n'
        << "num_rx_antennas=" << cfg.num_rx_antennas << '\n'
        << "frame_length=" << cfg.frame_length << '\n'
        << "target_rate_n=" << format_number(cfg.target_rate_n, 17) << '\n'
        << "target_rate_f=" << format_number(cfg.target_rate_f, 17) << '\n'
        << "sensing_eigenvalues=";
    for (std::size_t i = 0; i < cfg.sensing_eigenvalues.size(); ++i)
        out << (i ? "," : "") << format_number(cfg.sensing_eigenvalues[i], 17);
    out << '\n';
    return out.str();
}

} // namespace nisac::app
