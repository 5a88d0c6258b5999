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

#include "magma_lab/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include <fmt/format.h>

namespace magma_lab {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

class LawParser {
public:
    LawParser(std::string_view text, std::size_t base) : text_(text), base_(base) {}

    LawId parse() {
        const auto first = skip_from(0);
        if (first == text_.size()) {
            fail("empty law", first);
        }
        if (auto name = bare_identifier()) {
            if (const auto tag = tag_from_name(*name)) {
                return LawId(*tag);
            }
            if (name->size() > 1 ||
                std::any_of(name->begin(), name->end(),
                            [](unsigned char c) { return std::isupper(c); })) {
                fail(fmt::format("unknown name '{}'", *name), first);
            }
        }
        return LawId::user(equation());
    }

private:
    // The whole text as one identifier, if it is one.
    std::optional<std::string_view> bare_identifier() const {
        const auto begin = skip_from(0);
        auto end = text_.size();
        while (end > begin && is_space(text_[end - 1])) {
            --end;
        }
        const auto word = text_.substr(begin, end - begin);
        if (word.empty() || !std::all_of(word.begin(), word.end(), [](unsigned char c) {
                return std::isalpha(c);
            })) {
            return std::nullopt;
        }
        return word;
    }

    Equation equation() {
        skip();
        if (peek() == '=') {
            fail("empty left side", pos_);
        }
        Term lhs = term();
        skip();
        if (at_end()) {
            fail("expected '='", pos_);
        }
        if (peek() == ')') {
            fail("unbalanced parenthesis", pos_);
        }
        if (peek() != '=') {
            unexpected("expected '+' or '='");
        }
        ++pos_;
        skip();
        if (at_end()) {
            fail("empty right side", pos_);
        }
        Term rhs = term();
        skip();
        if (!at_end()) {
            if (peek() == ')') {
                fail("unbalanced parenthesis", pos_);
            }
            unexpected("expected '+' or end of law");
        }
        return Equation{std::move(lhs), std::move(rhs)};
    }

    Term term() {
        Term acc = primary();
        while (true) {
            skip();
            if (at_end() || peek() != '+') {
                return acc;
            }
            ++pos_;
            acc = Term::sum(std::move(acc), primary());
        }
    }

    Term primary() {
        skip();
        if (at_end() || peek() == '=') {
            if (depth_ > 0) {
                fail("unbalanced parenthesis", pos_);
            }
            fail("expected variable or '('", pos_);
        }
        const char c = peek();
        if (c >= 'a' && c <= 'z') {
            ++pos_;
            return Term::var(c);
        }
        if (c == '(') {
            ++pos_;
            ++depth_;
            Term inner = term();
            skip();
            if (at_end() || peek() != ')') {
                fail("unbalanced parenthesis", pos_);
            }
            ++pos_;
            --depth_;
            return inner;
        }
        if (c == ')') {
            fail(depth_ > 0 ? "expected variable or '('" : "unbalanced parenthesis", pos_);
        }
        fail(fmt::format("invalid character '{}'", c), pos_);
    }

    [[noreturn]] void unexpected(std::string_view what) {
        const char c = peek();
        if (c == '(' || c == '+' || (c >= 'a' && c <= 'z')) {
            fail(std::string(what), pos_);
        }
        fail(fmt::format("invalid character '{}'", c), pos_);
    }

    [[noreturn]] void fail(const std::string& what, std::size_t at) const {
        throw ParseError(fmt::format("{} at offset {}", what, base_ + at), base_ + at);
    }

    std::size_t skip_from(std::size_t p) const {
        while (p < text_.size() && is_space(text_[p])) {
            ++p;
        }
        return p;
    }
    void skip() { pos_ = skip_from(pos_); }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    std::string_view text_;
    std::size_t base_;
    std::size_t pos_ = 0;
    int depth_ = 0;
};

LawId parse_law_at(std::string_view text, std::size_t base) {
    return LawParser(text, base).parse();
}

struct Segment {
    std::string_view text;
    std::size_t offset;
};

Segment trimmed(std::string_view s, std::size_t offset) {
    std::size_t b = 0;
    while (b < s.size() && is_space(s[b])) {
        ++b;
    }
    std::size_t e = s.size();
    while (e > b && is_space(s[e - 1])) {
        --e;
    }
    return {s.substr(b, e - b), offset + b};
}

// Strips a leading keyword; throws if it is missing.
Segment after_keyword(Segment seg, std::string_view keyword) {
    const auto t = trimmed(seg.text, seg.offset);
    const bool ok = t.text.substr(0, keyword.size()) == keyword &&
                    (t.text.size() == keyword.size() || is_space(t.text[keyword.size()]));
    if (!ok) {
        throw ParseError(fmt::format("expected '{}' at offset {}", keyword, t.offset),
                         t.offset);
    }
    return trimmed(t.text.substr(keyword.size()), t.offset + keyword.size());
}

LawId law_after(Segment seg, std::string_view after) {
    const auto t = trimmed(seg.text, seg.offset);
    if (t.text.empty()) {
        throw ParseError(fmt::format("expected law after '{}'", after), t.offset);
    }
    return parse_law_at(seg.text, seg.offset);
}

int parse_bound(Segment seg) {
    const auto t = trimmed(seg.text, seg.offset);
    int v = 0;
    const auto* end = t.text.data() + t.text.size();
    auto [ptr, ec] = std::from_chars(t.text.data(), end, v);
    if (t.text.empty() || ec != std::errc() || ptr != end) {
        throw ParseError(fmt::format("malformed range at offset {}", t.offset), t.offset);
    }
    return v;
}

} // namespace

LawId parse_law(std::string_view text) { return parse_law_at(text, 0); }

SearchSpec parse_spec(std::string_view text) {
    std::vector<Segment> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ';') {
            parts.push_back({text.substr(start, i - start), start});
            start = i + 1;
        }
    }
    if (parts.size() < 3) {
        const auto at = text.size();
        throw ParseError(fmt::format("expected '{}' at offset {}",
                                     parts.size() == 1 ? "refute" : "orders", at),
                         at);
    }
    if (parts.size() > 3) {
        throw ParseError(
            fmt::format("unexpected ';' at offset {}", parts[3].offset - 1),
            parts[3].offset - 1);
    }

    SearchSpec spec;
    const auto assume = after_keyword(parts[0], "assume");
    std::size_t law_start = 0;
    std::string_view after = "assume";
    for (std::size_t i = 0; i <= assume.text.size(); ++i) {
        if (i == assume.text.size() || assume.text[i] == ',') {
            spec.assume.push_back(law_after(
                {assume.text.substr(law_start, i - law_start), assume.offset + law_start},
                after));
            law_start = i + 1;
            after = ",";
        }
    }

    spec.refute = law_after(after_keyword(parts[1], "refute"), "refute");

    const auto orders = after_keyword(parts[2], "orders");
    const auto dots = orders.text.find("..");
    if (dots == std::string_view::npos) {
        throw ParseError(fmt::format("malformed range at offset {}", orders.offset),
                         orders.offset);
    }
    spec.orders.lo = parse_bound({orders.text.substr(0, dots), orders.offset});
    spec.orders.hi = parse_bound({orders.text.substr(dots + 2), orders.offset + dots + 2});
    if (spec.orders.lo < 1 || spec.orders.hi < spec.orders.lo) {
        throw ParseError(fmt::format("malformed range at offset {}", orders.offset),
                         orders.offset);
    }
    return spec;
}

std::vector<LawId> parse_law_file(std::string_view text) {
    std::vector<LawId> laws;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            nl = text.size();
        }
        const auto line = trimmed(text.substr(pos, nl - pos), 0).text;
        pos = nl + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') {
            continue;
        }
        try {
            laws.push_back(parse_law(line));
        } catch (const ParseError& e) {
            throw ParseError(fmt::format("line {}: {}", line_no, e.what()), e.offset());
        }
    }
    return laws;
}

} // namespace magma_lab
