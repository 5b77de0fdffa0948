#pragma once

#include <string_view>
#include <vector>

#include "maintlab/token.hpp"

namespace maintlab {

struct LexOutput {
    std::vector<Token> tokens;
    std::vector<std::string> diagnostics;
};

/// Tokenize Java source. Tokens cover every character of `text` exactly once.
/// Throws MalformedTextError on unterminated strings, chars, or block comments.
std::vector<Token> tokenize_java(std::string_view text);

/// Lenient variant for line counting: an unterminated construct turns the
/// remainder of the file into a code token and records a diagnostic instead
/// of aborting.
LexOutput lex_java_lenient(std::string_view text);

bool is_java_keyword(std::string_view word);

}  // namespace maintlab
