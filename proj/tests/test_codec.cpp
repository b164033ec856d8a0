#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>
#include <vector>

#include "golden.hpp"
#include "p7/codec.hpp"
#include "p7/keying.hpp"
#include "p7/text.hpp"

using namespace p7;

namespace {

std::size_t count_chars(const std::string& utf8) {
    std::size_t n = 0;
    for (unsigned char c : utf8) {
        if ((c & 0xC0) != 0x80) ++n;
    }
    return n;
}

std::size_t count_upper(const Word& w) {
    std::size_t q = 0;
    for (Token t : w) {
        if (t == Token::Upper) ++q;
    }
    return q;
}

}  // namespace

TEST_CASE("encode_token canonical correspondences") {
    const Square& sq = canonical_square();
    CHECK(encode_token(sq, *token_from_name("n")).value() == 27);
    CHECK(encode_token(sq, Token::SComma).value() == 52);
    CHECK(encode_token(sq, *token_from_name("a")).value() == 11);
    CHECK(encode_token(sq, *token_from_name("w")).value() == 42);
    CHECK(encode_token(sq, Token::Upper).value() == 54);
    CHECK(encode_token(sq, Token::Space).value() == 55);
}

TEST_CASE("capital letters encode as 54 plus the lowercase code") {
    const Square& sq = canonical_square();
    CHECK(encode(sq, normalize("C")) == golden::seq({54, 13}));
    CHECK(encode(sq, normalize("U")) == golden::seq({54, 37}));
    CHECK(encode(sq, normalize("Ț")) == golden::seq({54, 53}));
}

TEST_CASE("encode golden vectors") {
    const Square& sq = canonical_square();
    SECTION("Romania") {
        CHECK(encode(sq, normalize(golden::kRomaniaText)) == golden::kRomaniaSeq);
    }
    SECTION("Pitagora: 20 characters, 21 codes") {
        CHECK(count_chars(golden::kPitagoraText) == 20);
        auto seq = encode(sq, normalize(golden::kPitagoraText));
        CHECK(seq.size() == 21);
        CHECK(seq == golden::kPitagoraSeq);
    }
    SECTION("Thales: 39 characters, 41 codes") {
        CHECK(count_chars(golden::kThalesText) == 39);
        auto seq = encode(sq, normalize(golden::kThalesText));
        CHECK(seq.size() == 41);
        CHECK(seq == golden::kThalesSeq);
    }
    SECTION("Barbilian quotation: 92 characters, 93 codes") {
        CHECK(count_chars(golden::kBarbilianText) == 92);
        auto seq = encode(sq, normalize(golden::kBarbilianText));
        CHECK(seq.size() == 93);
        CHECK(seq == golden::kBarbilianSeq);
    }
    SECTION("empty word") {
        CHECK(encode(sq, Word{}).empty());
    }
    SECTION("abbreviations: 6 characters, 9 codes") {
        CHECK(encode(sq, normalize("U.V.T.")).size() == 9);
    }
    SECTION("12 characters with two capitals give 14 codes") {
        CHECK(encode(sq, normalize("Diana și Ana")).size() == 14);
    }
}

TEST_CASE("validate flags the documented violations") {
    const Square& sq = canonical_square();
    SECTION("code after UPPER must select a letter") {
        auto report = validate(sq, golden::seq({11, 54, 62, 27, 11}));
        CHECK_FALSE(report.ok());
        REQUIRE(report.violations.size() == 1);
        CHECK(report.violations[0].index == 2);
        CHECK(report.violations[0].rule == ViolationRule::BadUpperTarget);
    }
    SECTION("admissible sequence of length 7") {
        CHECK(validate(sq, golden::kEuclidSeq).ok());
    }
    SECTION("sequence may not end in the UPPER code") {
        auto report = validate(sq, golden::seq({11, 54}));
        REQUIRE(report.violations.size() == 1);
        CHECK(report.violations[0].index == 1);
        CHECK(report.violations[0].rule == ViolationRule::TrailingUpper);
    }
    SECTION("digits outside 1..7") {
        auto report = validate(sq, golden::seq({11, 8}));
        REQUIRE(report.violations.size() == 1);
        CHECK(report.violations[0].index == 1);
        CHECK(report.violations[0].rule == ViolationRule::BadDigits);
    }
    SECTION("UPPER after UPPER is a bad target") {
        auto report = validate(sq, golden::seq({54, 54, 11}));
        REQUIRE(report.violations.size() == 1);
        CHECK(report.violations[0].index == 1);
        CHECK(report.violations[0].rule == ViolationRule::BadUpperTarget);
    }
    SECTION("all violations are collected in one pass") {
        auto report = validate(sq, golden::seq({54, 54}));
        REQUIRE(report.violations.size() == 2);
        CHECK(report.violations[0].index == 1);
        CHECK(report.violations[0].rule == ViolationRule::BadUpperTarget);
        CHECK(report.violations[1].index == 1);
        CHECK(report.violations[1].rule == ViolationRule::TrailingUpper);
    }
    SECTION("bad digits after UPPER violate both rules") {
        auto report = validate(sq, golden::seq({54, 8}));
        REQUIRE(report.violations.size() == 2);
        CHECK(report.violations[0].rule == ViolationRule::BadDigits);
        CHECK(report.violations[1].rule == ViolationRule::BadUpperTarget);
        CHECK(report.violations[1].index == 1);
    }
    SECTION("empty sequence is admissible") {
        CHECK(validate(sq, CipherSequence{}).ok());
    }
}

TEST_CASE("decode golden vectors") {
    const Square& sq = canonical_square();
    SECTION("e-mail address with @ . -") {
        CHECK(render(decode(sq, golden::kEmailSeq)) == golden::kEmailText);
    }
    SECTION("19 codes decode to 18 characters") {
        auto word = decode(sq, golden::kNewtonSeq);
        std::string text = render(word);
        CHECK(text == golden::kNewtonText);
        CHECK(count_chars(text) == 18);
    }
    SECTION("admissible 7-code sequence decodes to 6 characters") {
        CHECK(render(decode(sq, golden::kEuclidSeq)) == golden::kEuclidText);
    }
    SECTION("empty sequence decodes to the empty word") {
        CHECK(decode(sq, CipherSequence{}).empty());
    }
    SECTION("Arghezi quotation, 52 codes as circulated") {
        // The sequence is self-consistent but omits the second "bun " of the
        // full quotation; see golden.hpp.
        auto word = decode(sq, golden::kArghezi52Seq);
        CHECK(render(word) == golden::kArghezi52Text);
        CHECK(encode(sq, word) == golden::kArghezi52Seq);
        // canonical encoding of the full quotation, for the record
        CHECK(encode(sq, normalize(golden::kArghezFullText)) == golden::kArghezFullSeq);
        CHECK(golden::kArghezFullSeq.size() == 55);
    }
    SECTION("Barbu strophe: line breaks, quotes, hyphens") {
        auto word = decode(sq, golden::kBarbuSeq);
        std::string text = render(word);
        CHECK(text == golden::kBarbuText);
        CHECK(encode(sq, normalize(text)) == golden::kBarbuSeq);
    }
}

TEST_CASE("decode rejects inadmissible sequences with the full report") {
    const Square& sq = canonical_square();
    try {
        decode(sq, golden::seq({11, 54, 62, 27, 11}));
        FAIL("expected NotAdmissible");
    } catch (const NotAdmissible& e) {
        REQUIRE(e.report().violations.size() == 1);
        CHECK(e.report().violations[0].index == 2);
        CHECK(e.report().violations[0].rule == ViolationRule::BadUpperTarget);
    }
}

TEST_CASE("parse_cipher_text") {
    SECTION("space separated") {
        CHECK(parse_cipher_text("54 34 31 26 51 27 22 11") == golden::kRomaniaSeq);
    }
    SECTION("any whitespace separates") {
        CHECK(parse_cipher_text("11\n  22\t33") == golden::seq({11, 22, 33}));
        CHECK(parse_cipher_text("  11 22  ") == golden::seq({11, 22}));
        CHECK(parse_cipher_text("").empty());
        CHECK(parse_cipher_text(" \n\t ").empty());
    }
    SECTION("lexemes that are not two digits are malformed") {
        try {
            parse_cipher_text("115");
            FAIL("expected MalformedNumber");
        } catch (const MalformedNumber& e) {
            CHECK(e.lexeme() == "115");
            CHECK(e.index() == 0);
        }
        try {
            parse_cipher_text("11 2 33");
            FAIL("expected MalformedNumber");
        } catch (const MalformedNumber& e) {
            CHECK(e.lexeme() == "2");
            CHECK(e.index() == 1);
        }
        CHECK_THROWS_AS(parse_cipher_text("1a"), MalformedNumber);
        CHECK_THROWS_AS(parse_cipher_text("xx"), MalformedNumber);
    }
    SECTION("out-of-range digits parse and are left to validate") {
        auto seq = parse_cipher_text("08 90");
        REQUIRE(seq.size() == 2);
        CHECK(seq[0].value() == 8);
        CHECK(seq[1].value() == 90);
        CHECK_FALSE(validate(canonical_square(), seq).ok());
    }
}

TEST_CASE("format_cipher_text") {
    CHECK(format_cipher_text(golden::kRomaniaSeq, 0) == "54 34 31 26 51 27 22 11");
    CHECK(format_cipher_text(CipherSequence{}, 0).empty());
    CHECK(format_cipher_text(golden::seq({11, 12, 13}), 2) == "11 12\n13");
    CHECK(format_cipher_text(golden::seq({11, 12}), 2) == "11 12");
    CHECK(format_cipher_text(golden::seq({11, 12, 13, 14}), 2) == "11 12\n13 14");
    CHECK(format_cipher_text(golden::seq({8}), 0) == "08");
}

namespace {

Word random_word(std::mt19937_64& rng, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
    std::uniform_int_distribution<int> tok_dist(0, kTokenCount - 1);
    std::uniform_int_distribution<int> letter_dist(0, kLetterCount - 1);
    Word out;
    std::size_t n = len_dist(rng);
    while (out.size() < n) {
        Token t = token_from_index(tok_dist(rng));
        if (t == Token::Upper) {
            out.push_back(Token::Upper);
            out.push_back(token_from_index(letter_dist(rng)));
        } else {
            out.push_back(t);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("cipher-side round trip on random admissible sequences") {
    std::mt19937_64 rng(11);
    const Square& sq = canonical_square();
    for (int i = 0; i < 2000; ++i) {
        Word w = random_word(rng, 64);
        CipherSequence s = encode(sq, w);
        REQUIRE(validate(sq, s).ok());
        CHECK(decode(sq, s) == w);
        CHECK(encode(sq, decode(sq, s)) == s);
    }
}

TEST_CASE("length law: codes = characters + capitals") {
    std::mt19937_64 rng(12);
    const Square& sq = canonical_square();
    for (int i = 0; i < 2000; ++i) {
        Word w = random_word(rng, 64);
        auto s = encode(sq, w);
        std::string text = render(w);
        CHECK(s.size() == count_chars(text) + count_upper(w));
    }
}

TEST_CASE("message round trip through keyed squares") {
    std::mt19937_64 rng(13);
    Square keyed = square_from_keyword("parolă");
    for (int i = 0; i < 500; ++i) {
        Word w = random_word(rng, 48);
        std::string text = render(w);
        for (const Square* sq : {&canonical_square(), &keyed}) {
            auto decoded = decode(*sq, encode(*sq, normalize(text)));
            CHECK(render(decoded) == text);
        }
    }
}

TEST_CASE("parse is the inverse of format for every wrap") {
    std::mt19937_64 rng(14);
    std::uniform_int_distribution<int> value_dist(0, 99);
    std::uniform_int_distribution<std::size_t> len_dist(0, 80);
    std::uniform_int_distribution<unsigned> wrap_dist(0, 7);
    for (int i = 0; i < 2000; ++i) {
        CipherSequence s;
        std::size_t n = len_dist(rng);
        for (std::size_t k = 0; k < n; ++k) s.push_back(Code(value_dist(rng)));
        unsigned wrap = wrap_dist(rng);
        CHECK(parse_cipher_text(format_cipher_text(s, wrap)) == s);
    }
}

TEST_CASE("mutating one code flips validation at exactly that index") {
    std::mt19937_64 rng(15);
    const Square& sq = canonical_square();
    Code upper = sq.upper_code();
    // non-letter cells other than the UPPER cell
    std::vector<Code> symbol_codes;
    for (Token t : canonical_order()) {
        if (!is_letter(t) && t != Token::Upper) symbol_codes.push_back(sq.code_of(t));
    }
    std::uniform_int_distribution<std::size_t> sym_dist(0, symbol_codes.size() - 1);
    int tail_cases = 0, target_cases = 0;
    for (int i = 0; i < 2000 || tail_cases < 100 || target_cases < 100; ++i) {
        REQUIRE(i < 100000);
        Word w = random_word(rng, 48);
        CipherSequence s = encode(sq, w);
        if (s.empty()) continue;
        // tail mutation: set the last code to UPPER
        if (s.back() != upper) {
            CipherSequence m = s;
            m.back() = upper;
            auto report = validate(sq, m);
            CHECK_FALSE(report.ok());
            for (const auto& v : report.violations) CHECK(v.index == m.size() - 1);
            ++tail_cases;
        }
        // successor mutation: make some UPPER point at a symbol cell
        for (std::size_t k = 0; k + 1 < s.size(); ++k) {
            if (s[k] == upper) {
                CipherSequence m = s;
                m[k + 1] = symbol_codes[sym_dist(rng)];
                auto report = validate(sq, m);
                CHECK_FALSE(report.ok());
                REQUIRE(report.violations.size() == 1);
                CHECK(report.violations[0].index == k + 1);
                CHECK(report.violations[0].rule == ViolationRule::BadUpperTarget);
                ++target_cases;
                break;
            }
        }
    }
}
