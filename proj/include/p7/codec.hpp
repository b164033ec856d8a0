// codec.hpp - Encoding, decoding and admissibility of cipher sequences
//
// Encoding substitutes every token by the two-digit number of its cell;
// decoding applies the inverse substitution. A sequence is admissible when
// every code has digits in 1..7, it does not end in the Upper code, and every
// code right after the Upper code selects a letter cell. The letter test is
// by token kind, so keyed squares validate just as well as the canonical one.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "p7/alphabet.hpp"
#include "p7/errors.hpp"
#include "p7/token.hpp"

namespace p7 {

using CipherSequence = std::vector<Code>;

// A normalized token stream: Upper only appears immediately before a letter.
using Word = std::vector<Token>;

enum class ViolationRule { BadDigits, TrailingUpper, BadUpperTarget };

inline std::string_view violation_rule_name(ViolationRule r) {
    switch (r) {
        case ViolationRule::BadDigits: return "BAD_DIGITS";
        case ViolationRule::TrailingUpper: return "TRAILING_UPPER";
        case ViolationRule::BadUpperTarget: return "BAD_UPPER_TARGET";
    }
    return "?";
}

struct Violation {
    std::size_t index;  // 0-based position in the sequence
    ViolationRule rule;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

// Decode called on a sequence that failed validation.
class NotAdmissible : public Error {
  public:
    explicit NotAdmissible(ValidationReport report)
        : Error(describe(report)), report_(std::move(report)) {}
    const ValidationReport& report() const { return report_; }

  private:
    static std::string describe(const ValidationReport& r) {
        std::string msg = "sequence is not admissible (" +
                          std::to_string(r.violations.size()) + " violation";
        if (r.violations.size() != 1) msg += 's';
        msg += ')';
        if (!r.violations.empty()) {
            msg += ": index " + std::to_string(r.violations.front().index) + ": " +
                   r.violations.front().detail;
        }
        return msg;
    }
    ValidationReport report_;
};

inline Code encode_token(const Square& square, Token t) { return square.code_of(t); }

inline CipherSequence encode(const Square& square, std::span<const Token> word) {
    CipherSequence out;
    out.reserve(word.size());
    for (Token t : word) out.push_back(encode_token(square, t));
    return out;
}

// Incremental admissibility checker; validate() drives it over a whole
// sequence, the CLI drives it code by code. push/finish append violations.
class SequenceChecker {
  public:
    explicit SequenceChecker(const Square& square)
        : upper_code_(square.upper_code()), square_(&square) {}

    void push(Code c, std::vector<Violation>& out) {
        bool digits_ok = c.digits_in_range();
        if (!digits_ok) {
            out.push_back({index_, ViolationRule::BadDigits,
                           "code " + format_code(c) + " has digits outside 1..7"});
        }
        if (prev_upper_) {
            bool letter = digits_ok && is_letter(square_->token_at(c.position()));
            if (!letter) {
                out.push_back({index_, ViolationRule::BadUpperTarget,
                               "code " + format_code(c) +
                                   " after the UPPER code does not select a letter"});
            }
        }
        prev_upper_ = digits_ok && c == upper_code_;
        ++index_;
    }

    void finish(std::vector<Violation>& out) {
        if (prev_upper_) {
            out.push_back({index_ - 1, ViolationRule::TrailingUpper,
                           "sequence ends in the UPPER code " + format_code(upper_code_)});
        }
        prev_upper_ = false;
    }

    std::size_t codes_seen() const { return index_; }

  private:
    static std::string format_code(Code c) {
        std::string s(2, '0');
        s[0] = static_cast<char>('0' + c.row_digit());
        s[1] = static_cast<char>('0' + c.col_digit());
        return s;
    }

    Code upper_code_;
    const Square* square_;
    bool prev_upper_ = false;
    std::size_t index_ = 0;
};

inline ValidationReport validate(const Square& square, std::span<const Code> codes) {
    ValidationReport report;
    SequenceChecker checker(square);
    for (Code c : codes) checker.push(c, report.violations);
    checker.finish(report.violations);
    return report;
}

// Strict decode: throws NotAdmissible carrying the full report.
inline Word decode(const Square& square, std::span<const Code> codes) {
    ValidationReport report = validate(square, codes);
    if (!report.ok()) throw NotAdmissible(std::move(report));
    Word out;
    out.reserve(codes.size());
    for (Code c : codes) out.push_back(square.token_at(c.position()));
    return out;
}

// Incremental lexer for the cipher wire format: two-digit numbers separated
// by whitespace runs. Digit-range checking is left to validate so that a
// malformed-but-parseable sequence can still be diagnosed.
class CipherTextScanner {
  public:
    void feed(std::string_view chunk, std::vector<Code>& out) {
        for (char ch : chunk) {
            if (is_space(ch)) {
                end_lexeme(out);
            } else {
                lexeme_ += ch;
            }
        }
    }

    void finish(std::vector<Code>& out) { end_lexeme(out); }

  private:
    static bool is_space(char ch) {
        return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == '\v' || ch == '\f';
    }

    void end_lexeme(std::vector<Code>& out) {
        if (lexeme_.empty()) return;
        if (lexeme_.size() == 2 && lexeme_[0] >= '0' && lexeme_[0] <= '9' && lexeme_[1] >= '0' &&
            lexeme_[1] <= '9') {
            out.push_back(Code((lexeme_[0] - '0') * 10 + (lexeme_[1] - '0')));
            lexeme_.clear();
            ++index_;
            return;
        }
        std::string bad = std::move(lexeme_);
        lexeme_.clear();
        throw MalformedNumber(std::move(bad), index_);
    }

    std::string lexeme_;
    std::size_t index_ = 0;
};

inline CipherSequence parse_cipher_text(std::string_view text) {
    CipherTextScanner scanner;
    CipherSequence out;
    scanner.feed(text, out);
    scanner.finish(out);
    return out;
}

// Two-digit numbers joined by single spaces; a line break after every `wrap`
// numbers when wrap > 0. No trailing separator.
inline std::string format_cipher_text(std::span<const Code> codes, unsigned wrap = 0) {
    std::string out;
    out.reserve(codes.size() * 3);
    for (std::size_t k = 0; k < codes.size(); ++k) {
        if (k > 0) out += (wrap > 0 && k % wrap == 0) ? '\n' : ' ';
        out += static_cast<char>('0' + codes[k].row_digit());
        out += static_cast<char>('0' + codes[k].col_digit());
    }
    return out;
}

}  // namespace p7
