// alphabet.hpp - Positions, two-digit codes and the 7x7 square
//
// A Square is a bijection between the 49 tokens and the 49 grid cells. The
// canonical layout fills the grid row-major in canonical token order, which
// makes token k sit at cell k. Keyed layouts go through from_row_major, which
// checks the bijection on construction.

#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <string>

#include "p7/errors.hpp"
#include "p7/token.hpp"

namespace p7 {

// Grid coordinates, 1-based as written in cipher digits. Construction outside
// 1..7 is rejected, so a Position is valid by existence.
class Position {
  public:
    Position(int row, int col) : row_(row), col_(col) {
        if (row < 1 || row > kGridSide || col < 1 || col > kGridSide) {
            throw std::out_of_range("position (" + std::to_string(row) + "," +
                                    std::to_string(col) + ") outside the 7x7 grid");
        }
    }

    static Position from_index(int k) { return Position(k / kGridSide + 1, k % kGridSide + 1); }

    int row() const { return row_; }
    int col() const { return col_; }
    int index() const { return (row_ - 1) * kGridSide + (col_ - 1); }

    friend bool operator==(Position a, Position b) { return a.row_ == b.row_ && a.col_ == b.col_; }
    friend bool operator!=(Position a, Position b) { return !(a == b); }

  private:
    int row_;
    int col_;
};

// A two-digit cipher number. Any value 0..99 is representable so that parsed
// sequences can carry digit-range violations into validate; codes produced by
// encoding always have both digits in 1..7.
class Code {
  public:
    explicit Code(int value) : value_(value) {
        if (value < 0 || value > 99) {
            throw std::out_of_range("code " + std::to_string(value) + " is not two decimal digits");
        }
    }

    static Code of(Position p) { return Code(p.row() * 10 + p.col()); }

    int value() const { return value_; }
    int row_digit() const { return value_ / 10; }
    int col_digit() const { return value_ % 10; }

    bool digits_in_range() const {
        return row_digit() >= 1 && row_digit() <= kGridSide && col_digit() >= 1 &&
               col_digit() <= kGridSide;
    }

    // Valid only when digits_in_range().
    Position position() const { return Position(row_digit(), col_digit()); }

    friend bool operator==(Code a, Code b) { return a.value_ == b.value_; }
    friend bool operator!=(Code a, Code b) { return !(a == b); }

  private:
    int value_;
};

class Square {
  public:
    // Builds a square from 49 row-major cells. Throws WrongLength,
    // DuplicateToken or MissingToken naming the first offender.
    static Square from_row_major(std::span<const Token> cells) {
        if (cells.size() != kTokenCount) throw WrongLength(cells.size());
        Square s;
        std::array<bool, kTokenCount> seen{};
        for (int k = 0; k < kTokenCount; ++k) {
            Token t = cells[static_cast<std::size_t>(k)];
            if (seen[static_cast<std::size_t>(token_index(t))]) throw DuplicateToken(t);
            seen[static_cast<std::size_t>(token_index(t))] = true;
            s.cells_[static_cast<std::size_t>(k)] = t;
            s.cell_of_[static_cast<std::size_t>(token_index(t))] = static_cast<std::uint8_t>(k);
        }
        for (int k = 0; k < kTokenCount; ++k) {
            if (!seen[static_cast<std::size_t>(k)]) throw MissingToken(token_from_index(k));
        }
        return s;
    }

    static const Square& canonical() {
        static const Square s = [] {
            auto order = canonical_order();
            return from_row_major(order);
        }();
        return s;
    }

    Position position_of(Token t) const {
        return Position::from_index(cell_of_[static_cast<std::size_t>(token_index(t))]);
    }

    Token token_at(Position p) const { return cells_[static_cast<std::size_t>(p.index())]; }

    Code code_of(Token t) const { return Code::of(position_of(t)); }

    // The code that marks the following letter as uppercase (54 canonically).
    Code upper_code() const { return code_of(Token::Upper); }

    std::span<const Token, kTokenCount> row_major() const { return cells_; }

    friend bool operator==(const Square& a, const Square& b) { return a.cells_ == b.cells_; }
    friend bool operator!=(const Square& a, const Square& b) { return !(a == b); }

  private:
    Square() = default;
    std::array<Token, kTokenCount> cells_{};
    std::array<std::uint8_t, kTokenCount> cell_of_{};
};

inline const Square& canonical_square() { return Square::canonical(); }

inline Position position_of(const Square& s, Token t) { return s.position_of(t); }

inline Token token_at(const Square& s, Position p) { return s.token_at(p); }

}  // namespace p7
