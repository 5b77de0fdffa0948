#pragma once

#include <string>
#include <vector>

#include "maintlab/token.hpp"

namespace maintlab {

/// Physical line counts. A line containing both code and a comment counts
/// once, as code. code_lines is the LoC figure used everywhere downstream
/// (the index formula, the LoC baseline, the debt-ratio denominator).
struct LocCounts {
    int total_lines = 0;
    int code_lines = 0;
    int comment_lines = 0;  // comment-only lines
    int blank_lines = 0;
};

/// Never fails: malformed comments/strings degrade to counting the remainder
/// as code, with a note appended to `diagnostics` when provided.
LocCounts count_loc(const SourceUnit& unit, std::vector<std::string>* diagnostics = nullptr);

}  // namespace maintlab
