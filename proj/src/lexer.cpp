#include "maintlab/lexer.hpp"

#include <array>
#include <cctype>
#include <unordered_set>

namespace maintlab {

const char* token_kind_name(TokenKind kind) {
    switch (kind) {
        case TokenKind::Operator: return "operator";
        case TokenKind::Operand: return "operand";
        case TokenKind::Keyword: return "keyword";
        case TokenKind::Literal: return "literal";
        case TokenKind::Comment: return "comment";
        case TokenKind::Whitespace: return "whitespace";
        case TokenKind::Punctuation: return "punctuation";
    }
    return "?";
}

namespace {

const std::unordered_set<std::string_view> kJavaKeywords = {
    "abstract", "assert", "boolean", "break", "byte", "case", "catch", "char",
    "class", "const", "continue", "default", "do", "double", "else", "enum",
    "extends", "final", "finally", "float", "for", "goto", "if", "implements",
    "import", "instanceof", "int", "interface", "long", "native", "new",
    "package", "private", "protected", "public", "return", "short", "static",
    "strictfp", "super", "switch", "synchronized", "this", "throw", "throws",
    "transient", "try", "void", "volatile", "while",
};

// Longest-match first.
constexpr std::array<std::string_view, 36> kOperators = {
    ">>>=", ">>>", ">>=", "<<=", "->", "::", "==", "!=", "<=", ">=", "&&",
    "||",  "++",  "--",  "+=",  "-=", "*=", "/=", "%=", "&=", "|=", "^=",
    "<<",  ">>",  "=",   "+",   "-",  "*",  "/",  "%",  "!",  "~",  "^",
    "&",   "|",   "@",
};

bool is_ident_start(unsigned char c) {
    return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80;
}
bool is_ident_part(unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '$' || c >= 0x80;
}
bool is_space(unsigned char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}

class Lexer {
  public:
    Lexer(std::string_view text, bool lenient) : text_(text), lenient_(lenient) {}

    LexOutput run() {
        while (pos_ < text_.size()) {
            scan_one();
        }
        return std::move(out_);
    }

  private:
    void scan_one() {
        const std::size_t start = pos_;
        const int line = line_;
        const char c = text_[pos_];

        if (is_space(static_cast<unsigned char>(c))) {
            while (pos_ < text_.size() && is_space(static_cast<unsigned char>(text_[pos_]))) {
                advance();
            }
            emit(TokenKind::Whitespace, start, line);
            return;
        }
        if (c == '/' && peek(1) == '/') {
            while (pos_ < text_.size() && text_[pos_] != '\n') {
                advance();
            }
            emit(TokenKind::Comment, start, line);
            return;
        }
        if (c == '/' && peek(1) == '*') {
            advance();
            advance();
            while (pos_ < text_.size() && !(text_[pos_] == '*' && peek(1) == '/')) {
                advance();
            }
            if (pos_ >= text_.size()) {
                recover_unterminated("unterminated block comment", start, line);
                return;
            }
            advance();
            advance();
            emit(TokenKind::Comment, start, line);
            return;
        }
        if (c == '"' && peek(1) == '"' && peek(2) == '"') {
            advance();
            advance();
            advance();
            while (pos_ < text_.size() &&
                   !(text_[pos_] == '"' && peek(1) == '"' && peek(2) == '"')) {
                if (text_[pos_] == '\\') advance();
                advance();
            }
            if (pos_ >= text_.size()) {
                recover_unterminated("unterminated text block", start, line);
                return;
            }
            advance();
            advance();
            advance();
            emit(TokenKind::Literal, start, line);
            return;
        }
        if (c == '"' || c == '\'') {
            advance();
            while (pos_ < text_.size() && text_[pos_] != c && text_[pos_] != '\n') {
                if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) advance();
                advance();
            }
            if (pos_ >= text_.size() || text_[pos_] != c) {
                recover_unterminated(
                    c == '"' ? "unterminated string literal" : "unterminated character literal",
                    start, line);
                return;
            }
            advance();
            emit(TokenKind::Literal, start, line);
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
            scan_number();
            emit(TokenKind::Literal, start, line);
            return;
        }
        if (is_ident_start(static_cast<unsigned char>(c))) {
            while (pos_ < text_.size() && is_ident_part(static_cast<unsigned char>(text_[pos_]))) {
                advance();
            }
            const std::string_view word = text_.substr(start, pos_ - start);
            TokenKind kind = TokenKind::Operand;
            if (word == "true" || word == "false" || word == "null") {
                kind = TokenKind::Literal;
            } else if (kJavaKeywords.count(word) != 0) {
                kind = TokenKind::Keyword;
            }
            emit(kind, start, line);
            return;
        }
        if (c == ';' || c == ',' || c == '(' || c == ')' || c == '{' || c == '}' ||
            c == '[' || c == ']') {
            advance();
            emit(TokenKind::Punctuation, start, line);
            return;
        }
        for (const std::string_view op : kOperators) {
            if (text_.substr(pos_).substr(0, op.size()) == op) {
                pos_ += op.size();
                emit(TokenKind::Operator, start, line);
                return;
            }
        }
        // <, >, ?, :, . and anything unrecognized fall through here; single-char
        // operators keep coverage total.
        advance();
        emit(TokenKind::Operator, start, line);
    }

    void scan_number() {
        if (text_[pos_] == '0' && (peek(1) == 'x' || peek(1) == 'X' || peek(1) == 'b' ||
                                   peek(1) == 'B')) {
            advance();
            advance();
            while (pos_ < text_.size() &&
                   (std::isxdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                advance();
            }
        } else {
            auto digits = [&] {
                while (pos_ < text_.size() &&
                       (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                        text_[pos_] == '_')) {
                    advance();
                }
            };
            digits();
            if (pos_ < text_.size() && text_[pos_] == '.' &&
                (std::isdigit(static_cast<unsigned char>(peek(1))) ||
                 (pos_ > 0 && std::isdigit(static_cast<unsigned char>(text_[pos_ - 1]))))) {
                advance();  // fraction, or a trailing dot as in "1."
                digits();
            }
            if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
                std::size_t mark = pos_;
                advance();
                if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) advance();
                if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                    digits();
                } else {
                    pos_ = mark;  // not an exponent
                }
            }
        }
        if (pos_ < text_.size()) {
            const char s = text_[pos_];
            if (s == 'l' || s == 'L' || s == 'f' || s == 'F' || s == 'd' || s == 'D') advance();
        }
    }

    void recover_unterminated(const char* what, std::size_t start, int line) {
        if (!lenient_) throw MalformedTextError(what, line);
        // Remainder counts as code so every line still gets classified.
        pos_ = text_.size();
        emit(TokenKind::Operand, start, line);
        out_.diagnostics.push_back(std::string(what) + " (line " + std::to_string(line) +
                                   "); remainder treated as code");
    }

    char peek(std::size_t ahead) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }
    void advance() {
        if (text_[pos_] == '\n') ++line_;
        ++pos_;
    }
    void emit(TokenKind kind, std::size_t start, int line) {
        out_.tokens.push_back({kind, std::string(text_.substr(start, pos_ - start)), line});
    }

    std::string_view text_;
    bool lenient_;
    std::size_t pos_ = 0;
    int line_ = 1;
    LexOutput out_;
};

}  // namespace

std::vector<Token> tokenize_java(std::string_view text) {
    return Lexer(text, /*lenient=*/false).run().tokens;
}

LexOutput lex_java_lenient(std::string_view text) {
    return Lexer(text, /*lenient=*/true).run();
}

bool is_java_keyword(std::string_view word) {
    return kJavaKeywords.count(word) != 0;
}

}  // namespace maintlab
