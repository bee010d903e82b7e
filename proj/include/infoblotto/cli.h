// Copyright 2026 The infoblotto Authors
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

#ifndef INFOBLOTTO_CLI_H_
#define INFOBLOTTO_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace infoblotto {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCertificationFailed = 1;
inline constexpr int kExitInvalidInput = 2;

// Runs one command line (program name excluded). Subcommands: payoff, sweep,
// strategy, verify, simulate. Returns the process exit code.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace infoblotto

#endif  // INFOBLOTTO_CLI_H_
