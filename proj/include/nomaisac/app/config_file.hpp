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

#ifndef NOMAISAC_APP_CONFIG_FILE_HPP
#define NOMAISAC_APP_CONFIG_FILE_HPP

#include "nomaisac/channel.hpp"
#include "nomaisac/core.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace nisac::app
{

// Result of reading a key=value configuration file.
struct LoadedConfig
{
    SystemConfig system;
    std::optional<TargetScene> scene; // present when target.* entries were given
};

/// Parses key=value lines. Keys are the SystemConfig field names; unspecified keys keep
/// their default values. '#' starts a comment. sensing_eigenvalues takes a comma
/// separated list. A target scene is given by repeated target.strength and target.aoa
/// (radians) entries, paired in order; its correlation-matrix eigenvalues then replace
/// the eigenvalue list, so the two are mutually exclusive.
///
/// Throws ConfigError with the origin and line number on malformed input, and
/// ConfigError from validate_config for invalid values.
LoadedConfig parse_config(std::istream &in, const std::string &origin = "<config>");

LoadedConfig load_config_file(const std::string &path);

// Canonical key=value rendering, one field per line; parse_config reads it back.
std::string format_config(const SystemConfig &cfg);

} // namespace nisac::app

#endif
