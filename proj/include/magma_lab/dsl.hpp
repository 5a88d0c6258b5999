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

/**
 * @file
 *
 * Recursive-descent parser for laws and search specifications.
 *
 *     law   := NAME | term '=' term
 *     term  := VAR | term '+' term | '(' term ')'     ('+' left-associative)
 *     spec  := 'assume' law (',' law)* ';' 'refute' law ';' 'orders' INT '..' INT
 *
 * NAME is a built-in tag, case-insensitive. VAR is a single letter a-z.
 */

#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "magma_lab/core.hpp"
#include "magma_lab/law.hpp"
#include "magma_lab/search.hpp"

namespace magma_lab {

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : Error(message), offset_(offset) {}

    /// Byte offset into the parsed text.
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

LawId parse_law(std::string_view text);

SearchSpec parse_spec(std::string_view text);

/// One law per line; blank lines and `#` comments are skipped. Errors are
/// prefixed with the 1-based line number.
std::vector<LawId> parse_law_file(std::string_view text);

} // namespace magma_lab
