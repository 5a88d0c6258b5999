// Copyright 2026 The magma-lab Authors
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

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace magma_lab::cli {

/// Exit codes shared by every command.
inline constexpr int kOk = 0;       ///< success / holds / found
inline constexpr int kNegative = 1; ///< fails / exhausted / not isomorphic
inline constexpr int kUsage = 2;    ///< bad flags, parse or I/O error

/// Runs one command line; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace magma_lab::cli
