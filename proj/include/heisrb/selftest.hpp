/*
 *   Copyright 2026 The heisrb Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef HEISRB_SELFTEST_HPP
#define HEISRB_SELFTEST_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace heisrb {

struct CheckResult {
    std::string id;   // "1".."13" for the acceptance criteria, "m:<module>" otherwise
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

using CheckCallback = std::function<void(const CheckResult &)>;

/// The thirteen acceptance properties, in order. Deterministic given seed.
std::vector<CheckResult> run_acceptance(std::uint64_t seed, const CheckCallback &on_result = {});

/// Acceptance properties followed by per-module invariants.
std::vector<CheckResult> run_selftest(std::uint64_t seed, const CheckCallback &on_result = {});

} // namespace heisrb

#endif
