#pragma once

#include <span>
#include <string>
#include <vector>

#include "maintlab/token.hpp"

namespace maintlab {

struct Span {
    int first_line = 0;
    int last_line = 0;
    int lines() const { return last_line - first_line + 1; }
};

struct FieldDecl {
    std::string name;
    Span span;
    bool is_public = false;
    bool is_final = false;
    bool is_static = false;
    std::vector<std::string> modifier_order;  // modifiers as written, in order
    bool has_initializer = false;
};

struct MethodDecl {
    std::string name;
    Span span;
    int parameter_count = 0;
    // Occurrences of if/for/while/do/case/catch/?:/&&/|| in the body; a
    // do-while loop contributes both its `do` and its `while`.
    int decision_point_count = 0;
    int max_nesting_depth = 0;     // brace depth relative to the method body
    bool body_is_empty = false;    // no tokens between the body braces
    bool is_constructor = false;
    std::vector<std::string> modifier_order;
};

struct TypeDecl {
    std::string name;
    std::string kind;  // class | interface | enum
    Span span;
    int method_count = 0;  // methods declared directly in this type
    std::vector<FieldDecl> fields;
};

/// Brace-matching structural view of one file. Nested type declarations get
/// their own TypeDecl entries; `methods` lists every method body in file
/// order. Abstract and interface methods without bodies are not listed.
struct StructuralModel {
    std::vector<TypeDecl> types;
    std::vector<MethodDecl> methods;
};

/// Parse the token stream of one file (whitespace/comments are skipped
/// internally). Throws UnbalancedBracesError when braces do not match;
/// callers must then treat the file as structurally unanalyzable.
StructuralModel parse_structure(std::span<const Token> tokens);

}  // namespace maintlab
