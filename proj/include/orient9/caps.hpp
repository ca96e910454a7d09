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

#pragma once

#include <cstdint>
#include <string>

namespace orient9 {

struct Caps {
  int partition_vertices = 13;
  int cut_scan_vertices = 24;
  std::uint64_t sz_states = 100000000ULL;
  std::uint64_t sc_combinations = 1000000000ULL;
  std::uint64_t hom_nodes = 50000000ULL;
  int witness_vertices = 8;
  int witness_lifts = 3;
  std::uint64_t witness_checks = 200000ULL;
  bool slow_mode = false;

  // Reads ORIENT9_CAPS, e.g. "partition=13,cut=24,sz=1e8,sc=1e9,checks=2e5,slow=1".
  static Caps from_env();
  static Caps parse(const std::string& spec);
};

// Process-wide defaults; overridable by the CLI and by tests.
Caps& default_caps();

}  // namespace orient9
