#include "maintlab/structure.hpp"

#include <algorithm>
#include <unordered_set>

namespace maintlab {

namespace {

const std::unordered_set<std::string_view> kModifiers = {
    "public",    "protected", "private",      "abstract", "static",
    "final",     "transient", "volatile",     "synchronized", "native",
    "strictfp",  "default",
};

const std::unordered_set<std::string_view> kDecisionKeywords = {
    "if", "for", "while", "do", "case", "catch",
};

bool is_type_keyword(const Token& t) {
    return t.kind == TokenKind::Keyword &&
           (t.lexeme == "class" || t.lexeme == "interface" || t.lexeme == "enum");
}

// Angle-bracket depth delta of an operator lexeme ("<", ">>", ">=", ...).
// Comparison operators look like generics here; field/parameter heads contain
// no comparisons, which is where this is used.
int angle_delta(const Token& t) {
    if (t.kind != TokenKind::Operator) return 0;
    if (t.lexeme == "<=" || t.lexeme == ">=") return 0;
    int d = 0;
    for (char c : t.lexeme) {
        if (c == '<') ++d;
        if (c == '>') --d;
    }
    return d;
}

class StructureParser {
  public:
    explicit StructureParser(std::span<const Token> tokens) {
        toks_.reserve(tokens.size());
        for (const Token& t : tokens) {
            if (t.kind != TokenKind::Whitespace && t.kind != TokenKind::Comment) {
                toks_.push_back(&t);
            }
        }
    }

    StructuralModel parse() {
        check_braces();
        while (pos_ < toks_.size()) {
            if (is_type_keyword(*toks_[pos_])) {
                parse_type();
            } else {
                ++pos_;
            }
        }
        return std::move(model_);
    }

  private:
    void check_braces() {
        int depth = 0;
        for (const Token* t : toks_) {
            if (t->kind != TokenKind::Punctuation) continue;
            if (t->lexeme == "{") ++depth;
            if (t->lexeme == "}") {
                if (--depth < 0) throw UnbalancedBracesError(t->line);
            }
        }
        if (depth != 0) {
            throw UnbalancedBracesError(toks_.empty() ? 1 : toks_.back()->line);
        }
    }

    bool at(std::size_t i, const char* lexeme) const {
        return i < toks_.size() && toks_[i]->lexeme == lexeme;
    }

    std::size_t matching_brace(std::size_t open) const {
        int depth = 0;
        for (std::size_t i = open; i < toks_.size(); ++i) {
            if (toks_[i]->kind != TokenKind::Punctuation) continue;
            if (toks_[i]->lexeme == "{") ++depth;
            if (toks_[i]->lexeme == "}" && --depth == 0) return i;
        }
        return toks_.size();  // unreachable after check_braces
    }

    // pos_ sits on class/interface/enum.
    void parse_type() {
        const Token& kw = *toks_[pos_];
        std::string name;
        if (pos_ + 1 < toks_.size() && toks_[pos_ + 1]->kind == TokenKind::Operand) {
            name = toks_[pos_ + 1]->lexeme;
        }
        std::size_t open = pos_ + 1;
        while (open < toks_.size() && !at(open, "{")) ++open;
        if (open >= toks_.size()) {  // declaration without body; give up on it
            pos_ = toks_.size();
            return;
        }
        const std::size_t close = matching_brace(open);

        const std::size_t type_index = model_.types.size();
        TypeDecl decl;
        decl.name = std::move(name);
        decl.kind = kw.lexeme;
        decl.span = {kw.line, toks_[close]->line};
        model_.types.push_back(std::move(decl));

        pos_ = open + 1;
        while (pos_ < close) {
            parse_member(type_index, close);
        }
        pos_ = close + 1;
    }

    void parse_member(std::size_t type_index, std::size_t body_close) {
        std::vector<std::size_t> head;
        int head_parens = 0;
        while (pos_ < body_close) {
            const Token& t = *toks_[pos_];
            if (t.kind == TokenKind::Punctuation) {
                if (t.lexeme == "(") ++head_parens;
                if (t.lexeme == ")") --head_parens;
            }
            if (t.lexeme == ";" && t.kind == TokenKind::Punctuation) {
                if (!head.empty()) classify_field_or_skip(type_index, head, pos_);
                ++pos_;
                return;
            }
            if (t.lexeme == "{" && t.kind == TokenKind::Punctuation) {
                if (head_parens > 0 || head_has_toplevel_assign(head)) {
                    // brace expression inside annotation arguments or an
                    // initializer: part of the declaration, not a body
                    pos_ = matching_brace(pos_) + 1;
                    continue;
                }
                const auto inner_kw = std::find_if(head.begin(), head.end(), [&](std::size_t i) {
                    return is_type_keyword(*toks_[i]);
                });
                if (inner_kw != head.end()) {
                    pos_ = *inner_kw;
                    parse_type();
                    return;
                }
                std::vector<std::size_t> sig = strip_annotations(head);
                if (method_signature(sig) != nullptr) {
                    parse_method_body(type_index, sig, pos_);
                    return;
                }
                pos_ = matching_brace(pos_) + 1;  // static/instance initializer block
                return;
            }
            head.push_back(pos_);
            ++pos_;
        }
    }

    bool head_has_toplevel_assign(const std::vector<std::size_t>& head) const {
        int paren = 0;
        int bracket = 0;
        for (std::size_t i : head) {
            const Token& t = *toks_[i];
            if (t.kind == TokenKind::Punctuation) {
                if (t.lexeme == "(") ++paren;
                if (t.lexeme == ")") --paren;
                if (t.lexeme == "[") ++bracket;
                if (t.lexeme == "]") --bracket;
            }
            if (paren == 0 && bracket == 0 && t.kind == TokenKind::Operator && t.lexeme == "=") {
                return true;
            }
        }
        return false;
    }

    std::vector<std::size_t> strip_annotations(const std::vector<std::size_t>& head) const {
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < head.size(); ++k) {
            if (toks_[head[k]]->lexeme != "@") {
                out.push_back(head[k]);
                continue;
            }
            ++k;  // annotation name, possibly dotted
            while (k + 1 < head.size() && toks_[head[k + 1]]->lexeme == ".") k += 2;
            if (k + 1 < head.size() && toks_[head[k + 1]]->lexeme == "(") {
                int depth = 0;
                ++k;
                while (k < head.size()) {
                    if (toks_[head[k]]->lexeme == "(") ++depth;
                    if (toks_[head[k]]->lexeme == ")" && --depth == 0) break;
                    ++k;
                }
            }
        }
        return out;
    }

    // Returns the name token when `sig` ends in `name ( params ) [throws ...]`.
    // A top-level `=` anywhere disqualifies the head: signatures carry no
    // assignments, while field initializers often carry calls.
    const Token* method_signature(const std::vector<std::size_t>& sig) const {
        // locate last top-level parenthesis group
        int depth = 0;
        std::ptrdiff_t open = -1;
        std::ptrdiff_t close = -1;
        for (std::size_t k = 0; k < sig.size(); ++k) {
            const Token& t = *toks_[sig[k]];
            if (depth == 0 && t.kind == TokenKind::Operator && t.lexeme == "=") return nullptr;
            if (t.kind != TokenKind::Punctuation) continue;
            if (t.lexeme == "(") {
                if (depth == 0) open = static_cast<std::ptrdiff_t>(k);
                ++depth;
            }
            if (t.lexeme == ")") {
                if (--depth == 0) close = static_cast<std::ptrdiff_t>(k);
            }
        }
        if (open <= 0 || close < open) return nullptr;
        const Token* name = toks_[sig[static_cast<std::size_t>(open - 1)]];
        if (name->kind != TokenKind::Operand) return nullptr;
        // everything after ) must be a throws clause
        for (std::size_t k = static_cast<std::size_t>(close) + 1; k < sig.size(); ++k) {
            const Token& t = *toks_[sig[k]];
            const bool throws_part = (t.kind == TokenKind::Keyword && t.lexeme == "throws") ||
                                     t.kind == TokenKind::Operand || t.lexeme == "," ||
                                     t.lexeme == "." || angle_delta(t) != 0;
            if (!throws_part) return nullptr;
        }
        return name;
    }

    void parse_method_body(std::size_t type_index, const std::vector<std::size_t>& sig,
                           std::size_t body_open) {
        MethodDecl method;
        const Token* name = method_signature(sig);
        method.name = name->lexeme;
        method.is_constructor = method.name == model_.types[type_index].name;
        method.modifier_order = leading_modifiers(sig);
        method.parameter_count = count_parameters(sig);

        const std::size_t body_close = matching_brace(body_open);
        method.span = {toks_[sig.front()]->line, toks_[body_close]->line};
        method.body_is_empty = body_close == body_open + 1;

        int depth = 1;  // body braces
        int max_rel = 0;
        int decisions = 0;
        for (std::size_t i = body_open + 1; i < body_close; ++i) {
            const Token& t = *toks_[i];
            if (t.kind == TokenKind::Punctuation) {
                if (t.lexeme == "{") {
                    ++depth;
                    max_rel = std::max(max_rel, depth - 1);
                }
                if (t.lexeme == "}") --depth;
                continue;
            }
            if (t.kind == TokenKind::Keyword && kDecisionKeywords.count(t.lexeme) != 0) {
                ++decisions;
            } else if (t.kind == TokenKind::Operator) {
                if (t.lexeme == "&&" || t.lexeme == "||") {
                    ++decisions;
                } else if (t.lexeme == "?" && i > 0 && is_ternary_condition_end(*toks_[i - 1])) {
                    ++decisions;
                }
            }
        }
        method.decision_point_count = decisions;
        method.max_nesting_depth = max_rel;

        ++model_.types[type_index].method_count;
        model_.methods.push_back(std::move(method));
        pos_ = body_close + 1;
    }

    static bool is_ternary_condition_end(const Token& prev) {
        // distinguishes `cond ? a : b` from the generics wildcard `<?>`
        return prev.kind == TokenKind::Operand || prev.kind == TokenKind::Literal ||
               prev.lexeme == ")" || prev.lexeme == "]";
    }

    std::vector<std::string> leading_modifiers(const std::vector<std::size_t>& sig) const {
        std::vector<std::string> mods;
        for (std::size_t i : sig) {
            const Token& t = *toks_[i];
            if (t.kind == TokenKind::Keyword && kModifiers.count(t.lexeme) != 0) {
                mods.push_back(t.lexeme);
            } else {
                break;
            }
        }
        return mods;
    }

    int count_parameters(const std::vector<std::size_t>& sig) const {
        int depth = 0;
        int angle = 0;
        int bracket = 0;
        std::size_t open = sig.size();  // last top-level '(' = the parameter list
        for (std::size_t k = 0; k < sig.size(); ++k) {
            const Token& t = *toks_[sig[k]];
            if (t.lexeme == "(") {
                if (depth == 0) open = k;
                ++depth;
            }
            if (t.lexeme == ")") --depth;
        }
        if (open >= sig.size()) return 0;
        int commas = 0;
        bool any = false;
        depth = 0;
        for (std::size_t k = open; k < sig.size(); ++k) {
            const Token& t = *toks_[sig[k]];
            if (t.lexeme == "(") {
                ++depth;
                continue;
            }
            if (t.lexeme == ")") {
                if (--depth == 0) break;
                continue;
            }
            if (t.lexeme == "[") ++bracket;
            if (t.lexeme == "]") --bracket;
            angle += angle_delta(t);
            if (t.kind != TokenKind::Whitespace) any = true;
            if (t.lexeme == "," && depth == 1 && angle == 0 && bracket == 0) ++commas;
        }
        return any ? commas + 1 : 0;
    }

    void classify_field_or_skip(std::size_t type_index, const std::vector<std::size_t>& raw_head,
                                std::size_t semicolon) {
        std::vector<std::size_t> head = strip_annotations(raw_head);
        if (head.empty()) return;
        if (method_signature(head) != nullptr) return;          // abstract/native method
        if (contains_toplevel_paren_before_assign(head)) return;  // enum constants etc.

        std::vector<std::string> mods;
        std::size_t i = 0;
        while (i < head.size() && toks_[head[i]]->kind == TokenKind::Keyword &&
               kModifiers.count(toks_[head[i]]->lexeme) != 0) {
            mods.push_back(toks_[head[i]]->lexeme);
            ++i;
        }

        // split the remainder on top-level commas into declarator segments
        std::vector<std::vector<std::size_t>> segments(1);
        int paren = 0;
        int bracket = 0;
        int angle = 0;
        for (; i < head.size(); ++i) {
            const Token& t = *toks_[head[i]];
            if (t.lexeme == "(") ++paren;
            if (t.lexeme == ")") --paren;
            if (t.lexeme == "[") ++bracket;
            if (t.lexeme == "]") --bracket;
            angle += angle_delta(t);
            if (t.lexeme == "," && paren == 0 && bracket == 0 && angle <= 0) {
                segments.emplace_back();
                continue;
            }
            segments.back().push_back(head[i]);
        }

        const Span span{toks_[head.front()]->line, toks_[semicolon]->line};
        bool first = true;
        for (const auto& segment : segments) {
            std::vector<std::size_t> prefix;
            bool initialized = false;
            int p = 0;
            int b = 0;
            for (std::size_t idx : segment) {
                const Token& t = *toks_[idx];
                if (t.lexeme == "(") ++p;
                if (t.lexeme == ")") --p;
                if (t.lexeme == "[") ++b;
                if (t.lexeme == "]") --b;
                if (p == 0 && b == 0 && t.kind == TokenKind::Operator && t.lexeme == "=") {
                    initialized = true;
                    break;
                }
                prefix.push_back(idx);
            }
            const Token* name = nullptr;
            for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
                if (toks_[*it]->kind == TokenKind::Operand) {
                    name = toks_[*it];
                    break;
                }
            }
            if (name == nullptr) return;
            if (first && prefix.size() < 2) return;  // no type before the name
            first = false;

            FieldDecl field;
            field.name = name->lexeme;
            field.span = span;
            field.modifier_order = mods;
            field.is_public = std::find(mods.begin(), mods.end(), "public") != mods.end();
            field.is_final = std::find(mods.begin(), mods.end(), "final") != mods.end();
            field.is_static = std::find(mods.begin(), mods.end(), "static") != mods.end();
            field.has_initializer = initialized;
            model_.types[type_index].fields.push_back(std::move(field));
        }
    }

    bool contains_toplevel_paren_before_assign(const std::vector<std::size_t>& head) const {
        int paren = 0;
        for (std::size_t i : head) {
            const Token& t = *toks_[i];
            if (paren == 0 && t.kind == TokenKind::Operator && t.lexeme == "=") return false;
            if (t.lexeme == "(" && paren++ == 0) return true;
            if (t.lexeme == ")") --paren;
        }
        return false;
    }

    std::vector<const Token*> toks_;
    std::size_t pos_ = 0;
    StructuralModel model_;
};

}  // namespace

StructuralModel parse_structure(std::span<const Token> tokens) {
    return StructureParser(tokens).parse();
}

}  // namespace maintlab
