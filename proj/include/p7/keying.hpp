// keying.hpp - Alternative squares from keywords or explicit layouts
//
// A keyword mixes the alphabet the classical way: its letters, deduplicated
// in first-occurrence order, fill the grid row-major, followed by the unused
// tokens in canonical order. Symbols and case in the keyword are ignored, so
// keys stay typeable and the Upper cell moves only through the tail fill.

#pragma once

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "p7/alphabet.hpp"
#include "p7/text.hpp"
#include "p7/token.hpp"

namespace p7 {

inline Square square_from_keyword(std::string_view keyword) {
    std::vector<Token> layout;
    layout.reserve(kTokenCount);
    std::array<bool, kTokenCount> used{};
    for (Token t : normalize(keyword, NormalizationPolicy::skip())) {
        if (!is_letter(t)) continue;
        if (used[static_cast<std::size_t>(token_index(t))]) continue;
        used[static_cast<std::size_t>(token_index(t))] = true;
        layout.push_back(t);
    }
    for (Token t : canonical_order()) {
        if (!used[static_cast<std::size_t>(token_index(t))]) layout.push_back(t);
    }
    return Square::from_row_major(layout);
}

// Explicit layout: exactly 49 tokens, each exactly once, row-major.
// Throws WrongLength, DuplicateToken or MissingToken naming the first offender.
inline Square square_from_permutation(std::span<const Token> tokens) {
    return Square::from_row_major(tokens);
}

}  // namespace p7
