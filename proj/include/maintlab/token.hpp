#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace maintlab {

/// One source file queued for analysis. `path` is relative to the corpus
/// root and doubles as the join key across all output tables.
struct SourceUnit {
    std::string path;
    std::string project;
    std::string language;  // lowercase tag, e.g. "java"
    std::string text;      // full UTF-8 contents
};

enum class TokenKind {
    Operator,
    Operand,  // identifiers
    Keyword,
    Literal,
    Comment,
    Whitespace,
    Punctuation,
};

/// Lexical token. Tokens are contiguous: concatenating the lexemes of a
/// file's token sequence reproduces the file text exactly. Multi-line
/// tokens (block comments, text blocks) carry their starting line.
struct Token {
    TokenKind kind;
    std::string lexeme;
    int line = 1;  // 1-based
};

const char* token_kind_name(TokenKind kind);

class AnalysisError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class UnsupportedLanguageError : public AnalysisError {
  public:
    explicit UnsupportedLanguageError(const std::string& language)
        : AnalysisError("unsupported language: " + language) {}
};

/// Unterminated string/char/comment. Lexing aborts at the offending line.
class MalformedTextError : public AnalysisError {
  public:
    MalformedTextError(const std::string& what, int line)
        : AnalysisError(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

class UnbalancedBracesError : public AnalysisError {
  public:
    explicit UnbalancedBracesError(int line)
        : AnalysisError("unbalanced braces (line " + std::to_string(line) + ")"), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

}  // namespace maintlab
