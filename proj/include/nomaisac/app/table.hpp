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

#ifndef NOMAISAC_APP_TABLE_HPP
#define NOMAISAC_APP_TABLE_HPP

#include "json.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace nisac::app
{

enum class OutputFormat
{
    csv,
    json
};

// Empty cells are written as nothing in CSV and null in JSON.
using Cell = std::variant<std::monostate, double, std::string>;

struct Table
{
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    // Written after the data: a '#' comment line in CSV, a {"summary": ...} line in JSON.
    std::vector<std::pair<std::string, Cell>> summary;

    void add_row(std::vector<Cell> row);
};

// '%g'-style rendering with the given number of significant digits; always uses '.'
// as decimal separator, whatever the process locale.
std::string format_number(double v, int significant_digits = 12);

void write_csv(std::ostream &out, const Table &table);

// JSON Lines: a {"metadata": ...} line, one object per row, then the optional summary.
void write_json(std::ostream &out, const Table &table, const nlohmann::json &metadata);

void write_table(std::ostream &out, const Table &table, OutputFormat format, const nlohmann::json &metadata);

} // namespace nisac::app

#endif
