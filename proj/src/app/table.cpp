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

#include "nomaisac/app/table.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace nisac::app
{

namespace
{

std::string cell_text(const Cell &cell)
{
    if (const double *v = std::get_if<double>(&cell))
        return std::isnan(*v) ? std::string() : format_number(*v);
    if (const std::string *s = std::get_if<std::string>(&cell))
        return *s;
    return {};
}

nlohmann::json cell_json(const Cell &cell)
{
    if (const double *v = std::get_if<double>(&cell))
        return std::isfinite(*v) ? nlohmann::json(*v) : nlohmann::json(nullptr);
    if (const std::string *s = std::get_if<std::string>(&cell))
        return *s;
    return nullptr;
}

} // namespace

void Table::add_row(std::vector<Cell> row)
{
    if (row.size() != columns.size())
        throw std::logic_error("table row width does not match the header");
    rows.push_back(std::move(row));
}

std::string format_number(double v, int significant_digits)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, significant_digits);
    if (ec != std::errc())
        throw std::runtime_error("number formatting failed");
    return std::string(buf, ptr);
}

void write_csv(std::ostream &out, const Table &table)
{
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        out << (i ? "," : "") << table.columns[i];
    out << '\n';
    for (const auto &row : table.rows)
    {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << cell_text(row[i]);
        out << '\n';
    }
    if (!table.summary.empty())
    {
        out << '#';
        for (const auto &[key, value] : table.summary)
            out << ' ' << key << '=' << cell_text(value);
        out << '\n';
    }
}

void write_json(std::ostream &out, const Table &table, const nlohmann::json &metadata)
{
    out << nlohmann::json{{"metadata", metadata}}.dump() << '\n';
    for (const auto &row : table.rows)
    {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i)
            obj[table.columns[i]] = cell_json(row[i]);
        out << obj.dump() << '\n';
    }
    if (!table.summary.empty())
    {
        nlohmann::ordered_json summary = nlohmann::ordered_json::object();
        for (const auto &[key, value] : table.summary)
            summary[key] = cell_json(value);
        out << nlohmann::ordered_json{{"summary", summary}}.dump() << '\n';
    }
}

void write_table(std::ostream &out, const Table &table, OutputFormat format, const nlohmann::json &metadata)
{
    if (format == OutputFormat::csv)
        write_csv(out, table);
    else
        write_json(out, table, metadata);
}

} // namespace nisac::app
