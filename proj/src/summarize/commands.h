// Copyright 2026 The Authors.
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

#ifndef LISTPRED_SUMMARIZE_COMMANDS_H_
#define LISTPRED_SUMMARIZE_COMMANDS_H_

namespace listpred {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitVerifyFailed = 2;

// Entry point of the `listpred` command-line tool.
int RunCli(int argc, char** argv);

}  // namespace listpred

#endif  // LISTPRED_SUMMARIZE_COMMANDS_H_
