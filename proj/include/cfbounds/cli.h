// Copyright 2026 The cfbounds Authors.
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

// Command-line front end. Exit codes: 0 success, 1 usage or parse error,
// 2 infeasible data, 3 query outside the linear scope, 4 failed self-check
// (closed form disagreeing with the linear program, or a simulated
// population whose true effect falls outside its bounds).

#ifndef CFBOUNDS_CLI_H_
#define CFBOUNDS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace cfbounds {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitScope = 3;
inline constexpr int kExitCheckFailed = 4;

// `args` excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cfbounds

#endif  // CFBOUNDS_CLI_H_
