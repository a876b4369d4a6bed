// Copyright 2026 The cagen Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// The cagen command line: generate, diversity, cycle, adversary,
// distinguish and validate. Settings come from an optional JSON file
// (--config) whose keys are the flag names with dashes replaced by
// underscores; flags given on the command line override the file.

#ifndef CAGEN_CLI_H_
#define CAGEN_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace cagen::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;  // runtime failure or guard refusal
inline constexpr int kExitConfig = 2;   // malformed config or constraint violation

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cagen::cli

#endif  // CAGEN_CLI_H_
