#include "maintlab/duplication.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <unordered_map>

namespace maintlab {

namespace {

constexpr std::uint64_t kHashBase = 1099511628211ull;

struct NormalizedStream {
    std::vector<int> symbols;  // interned normalized lexemes
    std::vector<int> lines;
};

NormalizedStream normalize(std::span<const Token> tokens) {
    NormalizedStream stream;
    std::unordered_map<std::string_view, int> intern;
    intern["\x01identifier"] = 0;
    for (const Token& t : tokens) {
        if (t.kind == TokenKind::Whitespace || t.kind == TokenKind::Comment) continue;
        int symbol;
        if (t.kind == TokenKind::Operand) {
            symbol = 0;
        } else {
            const auto [it, inserted] =
                intern.emplace(t.lexeme, static_cast<int>(intern.size()));
            symbol = it->second;
        }
        stream.symbols.push_back(symbol);
        stream.lines.push_back(t.line);
    }
    return stream;
}

}  // namespace

std::vector<DuplicatePair> detect_duplication(std::span<const Token> tokens, int window) {
    if (window < 10) {
        throw std::invalid_argument("duplication window must be at least 10 tokens");
    }
    const NormalizedStream stream = normalize(tokens);
    const auto& sym = stream.symbols;
    const int n = static_cast<int>(sym.size());
    if (n < 2 * window) return {};

    // rolling hash of every window-length run
    std::uint64_t pow_w = 1;
    for (int i = 0; i < window; ++i) pow_w *= kHashBase;
    std::vector<std::uint64_t> prefix(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) {
        prefix[i + 1] = prefix[i] * kHashBase + static_cast<std::uint64_t>(sym[i] + 1);
    }
    auto window_hash = [&](int start) {
        return prefix[start + window] - prefix[start] * pow_w;
    };

    std::unordered_map<std::uint64_t, std::vector<int>> buckets;
    for (int start = 0; start + window <= n; ++start) {
        buckets[window_hash(start)].push_back(start);
    }

    std::vector<DuplicatePair> pairs;
    for (const auto& [_, starts] : buckets) {
        if (starts.size() < 2) continue;
        for (std::size_t a = 0; a < starts.size(); ++a) {
            for (std::size_t b = a + 1; b < starts.size(); ++b) {
                const int i = starts[a];
                const int j = starts[b];
                if (j - i < window) continue;  // spans would overlap
                if (!std::equal(sym.begin() + i, sym.begin() + i + window, sym.begin() + j)) {
                    continue;  // hash collision
                }
                if (i > 0 && sym[i - 1] == sym[j - 1]) continue;  // sub-match of a longer pair
                int len = window;
                const int max_len = std::min(j - i, n - j);
                while (len < max_len && sym[i + len] == sym[j + len]) ++len;
                DuplicatePair pair;
                pair.first_begin = i;
                pair.first_end = i + len;
                pair.second_begin = j;
                pair.second_end = j + len;
                pair.first_lines = {stream.lines[i], stream.lines[i + len - 1]};
                pair.second_lines = {stream.lines[j], stream.lines[j + len - 1]};
                pairs.push_back(pair);
            }
        }
    }
    std::sort(pairs.begin(), pairs.end(), [](const DuplicatePair& x, const DuplicatePair& y) {
        if (x.first_begin != y.first_begin) return x.first_begin < y.first_begin;
        return x.second_begin < y.second_begin;
    });
    return pairs;
}

}  // namespace maintlab
