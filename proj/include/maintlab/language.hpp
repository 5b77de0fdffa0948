#pragma once

#include <string>
#include <string_view>

#include "maintlab/lexer.hpp"
#include "maintlab/structure.hpp"
#include "maintlab/token.hpp"

namespace maintlab {

/// Per-language front end. Everything downstream of tokenize/parse is
/// language-neutral; adding a language means adding one adapter.
class LanguageAdapter {
  public:
    virtual ~LanguageAdapter() = default;
    virtual std::string_view id() const = 0;
    virtual std::vector<Token> tokenize(std::string_view text) const = 0;
    virtual LexOutput lex_lenient(std::string_view text) const = 0;
    virtual StructuralModel parse(std::span<const Token> tokens) const = 0;
};

/// Adapter registered for `language` tag, or nullptr.
const LanguageAdapter* find_adapter(std::string_view language);

/// Language tag inferred from a file extension (".java" -> "java"), empty if
/// unknown.
std::string language_for_path(std::string_view path);

/// Tokenize one unit via its language adapter.
/// Throws UnsupportedLanguageError / MalformedTextError.
std::vector<Token> tokenize(const SourceUnit& unit);

}  // namespace maintlab
