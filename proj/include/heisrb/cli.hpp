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

#ifndef HEISRB_CLI_HPP
#define HEISRB_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace heisrb::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`. Returns 0 on pass or report, 1 on fail, 2 on usage errors.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace heisrb::cli

#endif
