// Copyright 2026 The Simpeval Authors.
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

// The simpeval command line.
//
//   simpeval score      score instances, append JSON-lines records
//   simpeval correlate  correlate scores with human ratings
//   simpeval audit      per-question QuestEval report for one pair
//   simpeval fixtures   inspect record/replay fixture files
//
// Exit codes: 0 success, 1 fatal error, 2 partial success (score), 64 usage.

#ifndef SIMPEVAL_CLI_H_
#define SIMPEVAL_CLI_H_

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace simpeval {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFatal = 1;
inline constexpr int kExitPartial = 2;
inline constexpr int kExitUsage = 64;

// Consulted when --backend-url is not given.
inline constexpr char kBackendUrlEnv[] = "SIMPEVAL_BACKEND_URL";

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

// args[0] is the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err, const EnvLookup& env = {});

}  // namespace simpeval

#endif  // SIMPEVAL_CLI_H_
