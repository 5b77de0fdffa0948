#include "maintlab/loc.hpp"

#include <algorithm>
#include <string_view>

#include "maintlab/lexer.hpp"

namespace maintlab {

namespace {

bool segment_has_ink(std::string_view segment) {
    return segment.find_first_not_of(" \t\r\f\v") != std::string_view::npos;
}

}  // namespace

LocCounts count_loc(const SourceUnit& unit, std::vector<std::string>* diagnostics) {
    const std::string& text = unit.text;
    LocCounts counts;
    if (text.empty()) return counts;

    int total = 1;
    for (char c : text) {
        if (c == '\n') ++total;
    }
    if (!text.empty() && text.back() == '\n') --total;  // trailing newline opens no line
    counts.total_lines = total;

    std::vector<bool> has_code(static_cast<std::size_t>(total) + 1, false);
    std::vector<bool> has_comment(static_cast<std::size_t>(total) + 1, false);

    LexOutput lexed = lex_java_lenient(text);
    if (diagnostics != nullptr) {
        diagnostics->insert(diagnostics->end(), lexed.diagnostics.begin(),
                            lexed.diagnostics.end());
    }

    for (const Token& token : lexed.tokens) {
        if (token.kind == TokenKind::Whitespace) continue;
        auto& flags = token.kind == TokenKind::Comment ? has_comment : has_code;
        std::string_view rest = token.lexeme;
        int line = token.line;
        while (true) {
            const std::size_t nl = rest.find('\n');
            const std::string_view segment = rest.substr(0, nl);
            if (segment_has_ink(segment) && line <= total) {
                flags[static_cast<std::size_t>(line)] = true;
            }
            if (nl == std::string_view::npos) break;
            rest.remove_prefix(nl + 1);
            ++line;
        }
    }

    for (int line = 1; line <= total; ++line) {
        const auto i = static_cast<std::size_t>(line);
        if (has_code[i]) {
            ++counts.code_lines;
        } else if (has_comment[i]) {
            ++counts.comment_lines;
        } else {
            ++counts.blank_lines;
        }
    }
    return counts;
}

}  // namespace maintlab
