// Copyright 2026 The orient9 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "orient9/caps.hpp"

#include <cstdlib>
#include <sstream>

#include "orient9/errors.hpp"

namespace orient9 {

namespace {

std::uint64_t parse_count(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    double d = std::stod(value, &used);
    if (used != value.size() || d < 0) throw std::invalid_argument(value);
    return static_cast<std::uint64_t>(d);
  } catch (const std::exception&) {
    throw InvalidInput("bad value for cap '" + key + "': " + value);
  }
}

}  // namespace

Caps Caps::parse(const std::string& spec) {
  Caps caps;
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidInput("bad cap entry: " + item);
    std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    std::uint64_t n = parse_count(key, value);
    if (key == "partition") {
      caps.partition_vertices = static_cast<int>(n);
    } else if (key == "cut") {
      caps.cut_scan_vertices = static_cast<int>(n);
    } else if (key == "sz") {
      caps.sz_states = n;
    } else if (key == "sc") {
      caps.sc_combinations = n;
    } else if (key == "hom") {
      caps.hom_nodes = n;
    } else if (key == "witness") {
      caps.witness_vertices = static_cast<int>(n);
    } else if (key == "lifts") {
      caps.witness_lifts = static_cast<int>(n);
    } else if (key == "checks") {
      caps.witness_checks = n;
    } else if (key == "slow") {
      caps.slow_mode = n != 0;
    } else {
      throw InvalidInput("unknown cap '" + key + "'");
    }
  }
  if (caps.cut_scan_vertices > 30) {
    throw InvalidInput("cut scan cap cannot exceed 30 vertices");
  }
  return caps;
}

Caps Caps::from_env() {
  const char* env = std::getenv("ORIENT9_CAPS");
  return env ? parse(env) : Caps{};
}

Caps& default_caps() {
  static Caps caps = Caps::from_env();
  return caps;
}

}  // namespace orient9
