/*
 * Copyright 2026 The pitwo Authors
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

#ifndef PITWO_TOOLS_CLI_HPP_
#define PITWO_TOOLS_CLI_HPP_

#include <ostream>

namespace pitwo {

/// Runs one `pitwo` command. Exit codes: 0 success or positive verdict,
/// 1 negative verdict or counterexample, 2 usage, parse, or budget error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pitwo

#endif  // PITWO_TOOLS_CLI_HPP_
