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

#ifndef LISTPRED_SUMMARIZE_TOKENIZER_H_
#define LISTPRED_SUMMARIZE_TOKENIZER_H_

#include <string>
#include <string_view>
#include <vector>

namespace listpred {

// Lowercases ASCII letters, treats ASCII punctuation as whitespace and
// splits on whitespace. Non-ASCII bytes are kept verbatim.
std::vector<std::string> Tokenize(std::string_view text);

// True for tokens made only of ASCII digits.
bool IsNumeral(std::string_view token);

}  // namespace listpred

#endif  // LISTPRED_SUMMARIZE_TOKENIZER_H_
