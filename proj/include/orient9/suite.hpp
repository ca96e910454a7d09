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

#include <functional>
#include <string>
#include <vector>

#include "orient9/caps.hpp"

namespace orient9 {

enum class SuiteScale { kQuick, kFull };

struct SuiteItem {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct SuiteReport {
  SuiteScale scale = SuiteScale::kFull;
  std::vector<SuiteItem> items;
  bool all_passed() const;
};

/** Runs the twelve acceptance items in id order; on_item sees each result. */
SuiteReport run_suite(SuiteScale scale, const Caps& caps = default_caps(),
                      const std::function<void(const SuiteItem&)>& on_item = {});

/** One line per item: "[PASS] 3 name (1.2s): detail". */
std::string format_item(const SuiteItem& item);

}  // namespace orient9
