#pragma once

#include <span>
#include <vector>

#include "maintlab/structure.hpp"
#include "maintlab/token.hpp"

namespace maintlab {

/// One pair of duplicated regions. Token index ranges are half-open over the
/// file's significant (non-comment, non-whitespace) token stream; the first
/// range always starts before the second and the two never overlap.
struct DuplicatePair {
    int first_begin = 0;
    int first_end = 0;
    int second_begin = 0;
    int second_end = 0;
    Span first_lines;
    Span second_lines;

    int token_length() const { return first_end - first_begin; }
};

/// Token-based clone detection. Two regions match when their normalized
/// token sequences are identical: identifiers collapse to one placeholder
/// (so consistent renames still match), everything else compares by lexeme.
/// Reports maximal matches of at least `window` tokens; `window` must be
/// >= 10. Comments and whitespace never participate.
std::vector<DuplicatePair> detect_duplication(std::span<const Token> tokens, int window);

}  // namespace maintlab
