#include "maintlab/language.hpp"

#include <algorithm>

namespace maintlab {

namespace {

class JavaAdapter final : public LanguageAdapter {
  public:
    std::string_view id() const override { return "java"; }
    std::vector<Token> tokenize(std::string_view text) const override {
        return tokenize_java(text);
    }
    LexOutput lex_lenient(std::string_view text) const override {
        return lex_java_lenient(text);
    }
    StructuralModel parse(std::span<const Token> tokens) const override {
        return parse_structure(tokens);
    }
};

const JavaAdapter kJavaAdapter;

}  // namespace

const LanguageAdapter* find_adapter(std::string_view language) {
    if (language == "java") return &kJavaAdapter;
    return nullptr;
}

std::string language_for_path(std::string_view path) {
    const std::size_t dot = path.rfind('.');
    if (dot == std::string_view::npos) return {};
    std::string ext(path.substr(dot + 1));
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (ext == "java") return "java";
    return {};
}

std::vector<Token> tokenize(const SourceUnit& unit) {
    const LanguageAdapter* adapter = find_adapter(unit.language);
    if (adapter == nullptr) throw UnsupportedLanguageError(unit.language);
    return adapter->tokenize(unit.text);
}

}  // namespace maintlab
