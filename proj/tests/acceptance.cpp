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


// Runs the acceptance items and prints one line per item.

#include <cstring>
#include <iostream>

#include "orient9/suite.hpp"

int main(int argc, char** argv) {
  orient9::SuiteScale scale = orient9::SuiteScale::kFull;
  if (argc > 1 && std::strcmp(argv[1], "--quick") == 0) scale = orient9::SuiteScale::kQuick;
  orient9::SuiteReport report = orient9::run_suite(
      scale, orient9::default_caps(),
      [](const orient9::SuiteItem& item) { std::cout << orient9::format_item(item) << std::endl; });
  int passed = 0;
  for (const auto& item : report.items) passed += item.passed;
  std::cout << passed << "/" << report.items.size() << " acceptance items passed" << std::endl;
  return report.all_passed() ? 0 : 1;
}
