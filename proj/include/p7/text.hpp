// text.hpp - The boundary between Unicode text and token streams
//
// normalize() maps arbitrary UTF-8 onto the 49-token alphabet: uppercase
// letters expand to [Upper, letter], cedilla diacritics fold to comma-below,
// decomposed base+mark pairs compose, CRLF counts as one line break, straight
// double quotes toggle between the open/close tokens. render() is its
// inverse and always emits the canonical codepoint for each token.
//
// TextNormalizer and TokenRenderer are the incremental forms used for
// streaming; the free functions wrap them for whole strings. Between-call
// state is a few bytes (partial UTF-8 sequence, pending combining-mark unit,
// quote parity, one pending Upper), so arbitrarily long inputs stream in
// bounded memory.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "p7/errors.hpp"
#include "p7/token.hpp"

namespace p7 {

// What to do with characters outside the alphabet.
class NormalizationPolicy {
  public:
    enum class Kind { Error, Skip, Replace };

    static NormalizationPolicy error() { return NormalizationPolicy(Kind::Error, Token::A); }
    static NormalizationPolicy skip() { return NormalizationPolicy(Kind::Skip, Token::A); }

    // Replacement must not be Upper, which never stands on its own.
    static NormalizationPolicy replace(Token t) {
        if (t == Token::Upper) {
            throw std::invalid_argument("replacement token must not be UPPER");
        }
        return NormalizationPolicy(Kind::Replace, t);
    }

    Kind kind() const { return kind_; }
    Token replacement() const { return replacement_; }

  private:
    NormalizationPolicy(Kind k, Token r) : kind_(k), replacement_(r) {}
    Kind kind_;
    Token replacement_;
};

namespace detail {

inline void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
}

struct CpMapping {
    enum class Kind { Letter, UpperLetter, Symbol, QuoteToggle, Unknown };
    Kind kind;
    Token token;  // meaningful except for QuoteToggle/Unknown
};

inline CpMapping map_codepoint(char32_t cp) {
    using K = CpMapping::Kind;
    if (cp >= U'a' && cp <= U'z') return {K::Letter, token_from_index(static_cast<int>(cp - U'a'))};
    if (cp >= U'A' && cp <= U'Z')
        return {K::UpperLetter, token_from_index(static_cast<int>(cp - U'A'))};
    switch (cp) {
        case 0x0103: return {K::Letter, Token::ABreve};       // ă
        case 0x0102: return {K::UpperLetter, Token::ABreve};  // Ă
        case 0x00EE: return {K::Letter, Token::ICirc};        // î
        case 0x00CE: return {K::UpperLetter, Token::ICirc};   // Î
        case 0x00E2: return {K::Letter, Token::ACirc};        // â
        case 0x00C2: return {K::UpperLetter, Token::ACirc};   // Â
        case 0x0219: return {K::Letter, Token::SComma};       // ș
        case 0x0218: return {K::UpperLetter, Token::SComma};  // Ș
        case 0x021B: return {K::Letter, Token::TComma};       // ț
        case 0x021A: return {K::UpperLetter, Token::TComma};  // Ț
        case 0x015F: return {K::Letter, Token::SComma};       // ş, cedilla fold
        case 0x015E: return {K::UpperLetter, Token::SComma};  // Ş
        case 0x0163: return {K::Letter, Token::TComma};       // ţ
        case 0x0162: return {K::UpperLetter, Token::TComma};  // Ţ
        case U' ':
        case U'\t': return {K::Symbol, Token::Space};
        case U'\n':
        case U'/': return {K::Symbol, Token::Newline};
        case U',': return {K::Symbol, Token::Comma};
        case U'-': return {K::Symbol, Token::Hyphen};
        case U'?': return {K::Symbol, Token::Question};
        case U'!': return {K::Symbol, Token::Exclam};
        case 0x201E:                                        // „
        case 0x201C: return {K::Symbol, Token::QuoteOpen};  // “
        case 0x201D: return {K::Symbol, Token::QuoteClose};
        case U'"': return {K::QuoteToggle, Token::QuoteOpen};
        case U';': return {K::Symbol, Token::Semicolon};
        case 0x2013:                                   // –
        case 0x2014: return {K::Symbol, Token::Dash};  // —
        case U'.': return {K::Symbol, Token::Period};
        case U':': return {K::Symbol, Token::Colon};
        case U'\'':
        case 0x2019: return {K::Symbol, Token::Apostrophe};
        case U'(': return {K::Symbol, Token::ParenOpen};
        case U')': return {K::Symbol, Token::ParenClose};
        case U'&': return {K::Symbol, Token::Ampersand};
        case U'@': return {K::Symbol, Token::At};
        default: return {K::Unknown, Token::A};
    }
}

constexpr bool is_combining_mark(char32_t cp) { return cp >= 0x0300 && cp <= 0x036F; }

// Canonical composition for the pairs that can yield an alphabet letter.
// Returns 0 when the pair has no composition we care about.
inline char32_t compose(char32_t base, char32_t mark) {
    switch (mark) {
        case 0x0306:  // combining breve
            if (base == U'a') return 0x0103;
            if (base == U'A') return 0x0102;
            return 0;
        case 0x0302:  // combining circumflex
            if (base == U'a') return 0x00E2;
            if (base == U'A') return 0x00C2;
            if (base == U'i') return 0x00EE;
            if (base == U'I') return 0x00CE;
            return 0;
        case 0x0326:  // combining comma below
            if (base == U's') return 0x0219;
            if (base == U'S') return 0x0218;
            if (base == U't') return 0x021B;
            if (base == U'T') return 0x021A;
            return 0;
        case 0x0327:  // combining cedilla
            if (base == U's') return 0x015F;
            if (base == U'S') return 0x015E;
            if (base == U't') return 0x0163;
            if (base == U'T') return 0x0162;
            return 0;
        default: return 0;
    }
}

}  // namespace detail

// Incremental normalizer. feed() may be called any number of times with
// consecutive chunks of one logical text; finish() flushes pending state.
// Quote parity is tracked across the whole stream.
class TextNormalizer {
  public:
    explicit TextNormalizer(NormalizationPolicy policy = NormalizationPolicy::error())
        : policy_(policy) {}

    void feed(std::string_view chunk, std::vector<Token>& out) {
        for (char c : chunk) push_byte(static_cast<std::uint8_t>(c), out);
    }

    void finish(std::vector<Token>& out) {
        if (utf8_need_ > 0) {
            // truncated sequence at end of input
            std::string bad = std::move(utf8_raw_);
            utf8_need_ = 0;
            utf8_raw_.clear();
            handle_unknown(bad, cp_index_++, out);
        }
        if (pending_cr_) {
            pending_cr_ = false;
            handle_unknown("\r", cr_index_, out);
        }
        flush_base(out);
    }

    std::size_t skipped_count() const { return skipped_; }
    std::size_t replaced_count() const { return replaced_; }

  private:
    void push_byte(std::uint8_t b, std::vector<Token>& out) {
        if (utf8_need_ == 0) {
            if (b < 0x80) {
                process_cp(b, out);
            } else if (b >= 0xC2 && b <= 0xDF) {
                start_sequence(b, static_cast<char32_t>(b & 0x1F), 1, 0x80, 0xBF);
            } else if (b >= 0xE0 && b <= 0xEF) {
                std::uint8_t lo = b == 0xE0 ? 0xA0 : 0x80;
                std::uint8_t hi = b == 0xED ? 0x9F : 0xBF;
                start_sequence(b, static_cast<char32_t>(b & 0x0F), 2, lo, hi);
            } else if (b >= 0xF0 && b <= 0xF4) {
                std::uint8_t lo = b == 0xF0 ? 0x90 : 0x80;
                std::uint8_t hi = b == 0xF4 ? 0x8F : 0xBF;
                start_sequence(b, static_cast<char32_t>(b & 0x07), 3, lo, hi);
            } else {
                // stray continuation byte or invalid lead
                handle_unknown(std::string(1, static_cast<char>(b)), cp_index_++, out);
            }
            return;
        }
        if (b >= utf8_lo_ && b <= utf8_hi_) {
            utf8_cp_ = (utf8_cp_ << 6) | static_cast<char32_t>(b & 0x3F);
            utf8_raw_ += static_cast<char>(b);
            utf8_lo_ = 0x80;
            utf8_hi_ = 0xBF;
            if (--utf8_need_ == 0) {
                utf8_raw_.clear();
                process_cp(utf8_cp_, out);
            }
            return;
        }
        // broken sequence: the prefix is one bad unit, the byte restarts fresh
        std::string bad = std::move(utf8_raw_);
        utf8_need_ = 0;
        utf8_raw_.clear();
        handle_unknown(bad, cp_index_++, out);
        push_byte(b, out);
    }

    void start_sequence(std::uint8_t lead, char32_t acc, int need, std::uint8_t lo,
                        std::uint8_t hi) {
        utf8_cp_ = acc;
        utf8_need_ = need;
        utf8_lo_ = lo;
        utf8_hi_ = hi;
        utf8_raw_.assign(1, static_cast<char>(lead));
    }

    void process_cp(char32_t cp, std::vector<Token>& out) {
        if (pending_cr_) {
            pending_cr_ = false;
            if (cp == U'\n') {
                emit(detail::CpMapping{detail::CpMapping::Kind::Symbol, Token::Newline}, cr_index_,
                     "\r\n", out);
                ++cp_index_;
                return;
            }
            handle_unknown("\r", cr_index_, out);
        }
        if (detail::is_combining_mark(cp)) {
            if (have_base_) {
                if (mark_count_ < kMaxRecordedMarks) marks_[mark_count_] = cp;
                ++mark_count_;
            } else {
                std::string unit;
                detail::append_utf8(unit, cp);
                handle_unknown(unit, cp_index_, out);
            }
            ++cp_index_;
            return;
        }
        flush_base(out);
        if (cp == U'\r') {
            pending_cr_ = true;
            cr_index_ = cp_index_++;
            return;
        }
        auto m = detail::map_codepoint(cp);
        if (m.kind == detail::CpMapping::Kind::Letter ||
            m.kind == detail::CpMapping::Kind::UpperLetter) {
            // letters may still grow combining marks; hold until the next starter
            have_base_ = true;
            base_cp_ = cp;
            base_index_ = cp_index_++;
            mark_count_ = 0;
            return;
        }
        std::string unit;
        detail::append_utf8(unit, cp);
        emit(m, cp_index_++, unit, out);
    }

    void flush_base(std::vector<Token>& out) {
        if (!have_base_) return;
        have_base_ = false;
        char32_t cp = base_cp_;
        if (mark_count_ == 1) {
            char32_t composed = detail::compose(cp, marks_[0]);
            if (composed != 0) {
                std::string unit;
                detail::append_utf8(unit, composed);
                emit(detail::map_codepoint(composed), base_index_, unit, out);
                return;
            }
        }
        if (mark_count_ > 0) {
            std::string unit;
            detail::append_utf8(unit, cp);
            for (std::size_t k = 0; k < mark_count_ && k < kMaxRecordedMarks; ++k) {
                detail::append_utf8(unit, marks_[k]);
            }
            handle_unknown(unit, base_index_, out);
            return;
        }
        std::string unit;
        detail::append_utf8(unit, cp);
        emit(detail::map_codepoint(cp), base_index_, unit, out);
    }

    void emit(detail::CpMapping m, std::size_t index, const std::string& unit,
              std::vector<Token>& out) {
        using K = detail::CpMapping::Kind;
        switch (m.kind) {
            case K::Letter: out.push_back(m.token); break;
            case K::UpperLetter:
                out.push_back(Token::Upper);
                out.push_back(m.token);
                break;
            case K::Symbol:
                if (m.token == Token::QuoteOpen) quote_open_ = true;
                if (m.token == Token::QuoteClose) quote_open_ = false;
                out.push_back(m.token);
                break;
            case K::QuoteToggle:
                out.push_back(quote_open_ ? Token::QuoteClose : Token::QuoteOpen);
                quote_open_ = !quote_open_;
                break;
            case K::Unknown: handle_unknown(unit, index, out); break;
        }
    }

    void handle_unknown(const std::string& unit, std::size_t index, std::vector<Token>& out) {
        switch (policy_.kind()) {
            case NormalizationPolicy::Kind::Error: throw UnknownCharacter(unit, index);
            case NormalizationPolicy::Kind::Skip: ++skipped_; break;
            case NormalizationPolicy::Kind::Replace:
                ++replaced_;
                out.push_back(policy_.replacement());
                break;
        }
    }

    static constexpr std::size_t kMaxRecordedMarks = 8;

    NormalizationPolicy policy_;
    // utf8 decoder state
    int utf8_need_ = 0;
    char32_t utf8_cp_ = 0;
    std::uint8_t utf8_lo_ = 0x80;
    std::uint8_t utf8_hi_ = 0xBF;
    std::string utf8_raw_;
    // pending combining-mark unit
    bool have_base_ = false;
    char32_t base_cp_ = 0;
    std::size_t base_index_ = 0;
    std::size_t mark_count_ = 0;
    std::array<char32_t, kMaxRecordedMarks> marks_{};
    // line-break and quote state
    bool pending_cr_ = false;
    std::size_t cr_index_ = 0;
    bool quote_open_ = false;
    std::size_t cp_index_ = 0;
    std::size_t skipped_ = 0;
    std::size_t replaced_ = 0;
};

inline std::vector<Token> normalize(std::string_view text,
                                    NormalizationPolicy policy = NormalizationPolicy::error()) {
    TextNormalizer n(policy);
    std::vector<Token> out;
    out.reserve(text.size());
    n.feed(text, out);
    n.finish(out);
    return out;
}

namespace detail {

inline std::string_view letter_lower(Token t) {
    static constexpr std::string_view forms[kLetterCount] = {
        "a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l", "m", "n", "o", "p",
        "q", "r", "s", "t", "u", "v", "w", "x", "y", "z", "ă", "î", "â", "ș", "ț",
    };
    return forms[static_cast<std::size_t>(token_index(t))];
}

inline std::string_view letter_upper(Token t) {
    static constexpr std::string_view forms[kLetterCount] = {
        "A", "B", "C", "D", "E", "F", "G", "H", "I", "J", "K", "L", "M", "N", "O", "P",
        "Q", "R", "S", "T", "U", "V", "W", "X", "Y", "Z", "Ă", "Î", "Â", "Ș", "Ț",
    };
    return forms[static_cast<std::size_t>(token_index(t))];
}

inline std::string_view symbol_form(Token t) {
    // indexed from Upper onwards; Upper itself never renders alone
    static constexpr std::string_view forms[kTokenCount - kLetterCount] = {
        "", " ", "\n", ",", "-", "?", "!", "„", "”", ";", "–", ".", ":", "’", "(", ")", "&", "@",
    };
    return forms[static_cast<std::size_t>(token_index(t) - kLetterCount)];
}

}  // namespace detail

// Incremental renderer; enforces the Upper pairing rule as tokens arrive.
class TokenRenderer {
  public:
    void push(Token t, std::string& out) {
        if (pending_upper_) {
            if (!is_letter(t)) throw InvalidTokenStream(index_);
            out += detail::letter_upper(t);
            pending_upper_ = false;
            ++index_;
            return;
        }
        if (t == Token::Upper) {
            pending_upper_ = true;
            upper_index_ = index_++;
            return;
        }
        out += is_letter(t) ? detail::letter_lower(t) : detail::symbol_form(t);
        ++index_;
    }

    void finish() {
        if (pending_upper_) throw InvalidTokenStream(upper_index_);
    }

  private:
    bool pending_upper_ = false;
    std::size_t upper_index_ = 0;
    std::size_t index_ = 0;
};

inline std::string render(std::span<const Token> tokens) {
    TokenRenderer r;
    std::string out;
    out.reserve(tokens.size());
    for (Token t : tokens) r.push(t, out);
    r.finish();
    return out;
}

}  // namespace p7
