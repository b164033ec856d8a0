// token.hpp - The 49-element alphabet of the 7x7 square
//
// 31 lowercase Romanian letters plus 18 symbols/actions. Enumerators are
// declared in canonical row-major order, so the underlying value of a token
// is also its cell index in the canonical square.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace p7 {

inline constexpr int kGridSide = 7;
inline constexpr int kTokenCount = 49;
inline constexpr int kLetterCount = 31;

enum class Token : std::uint8_t {
    // letters, rows 1..4 and the first three cells of row 5
    A, B, C, D, E, F, G,
    H, I, J, K, L, M, N,
    O, P, Q, R, S, T, U,
    V, W, X, Y, Z, ABreve, ICirc,
    ACirc, SComma, TComma,
    // symbols / actions
    Upper,      // the following lowercase letter becomes uppercase
    Space,
    Newline,
    Comma,
    Hyphen,     // intra-word hyphen (cratima)
    Question,
    Exclam,
    QuoteOpen,
    QuoteClose,
    Semicolon,
    Dash,       // pause/dialogue dash (linia de pauza)
    Period,
    Colon,
    Apostrophe,
    ParenOpen,
    ParenClose,
    Ampersand,
    At,
};

constexpr int token_index(Token t) { return static_cast<int>(t); }

constexpr Token token_from_index(int k) { return static_cast<Token>(k); }

// A token is a letter iff it may legally follow Upper in a token stream.
constexpr bool is_letter(Token t) { return token_index(t) < kLetterCount; }

// All 49 tokens in canonical order: a..z, ă î â ș ț, then the 18 symbols.
constexpr std::array<Token, kTokenCount> canonical_order() {
    std::array<Token, kTokenCount> all{};
    for (int k = 0; k < kTokenCount; ++k) all[static_cast<std::size_t>(k)] = token_from_index(k);
    return all;
}

// Names as used by the square file format: letters appear as their literal
// lowercase character, symbols as uppercase words.
inline std::string_view token_name(Token t) {
    static constexpr std::string_view names[kTokenCount] = {
        "a", "b", "c", "d", "e", "f", "g",
        "h", "i", "j", "k", "l", "m", "n",
        "o", "p", "q", "r", "s", "t", "u",
        "v", "w", "x", "y", "z", "ă", "î",
        "â", "ș", "ț",
        "UPPER", "SPACE", "NEWLINE", "COMMA", "HYPHEN", "QUESTION", "EXCLAM",
        "QUOTE_OPEN", "QUOTE_CLOSE", "SEMICOLON", "DASH", "PERIOD", "COLON",
        "APOSTROPHE", "PAREN_OPEN", "PAREN_CLOSE", "AMPERSAND", "AT",
    };
    return names[static_cast<std::size_t>(t)];
}

inline std::optional<Token> token_from_name(std::string_view name) {
    for (int k = 0; k < kTokenCount; ++k) {
        if (token_name(token_from_index(k)) == name) return token_from_index(k);
    }
    return std::nullopt;
}

}  // namespace p7
