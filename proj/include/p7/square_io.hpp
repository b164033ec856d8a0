// square_io.hpp - Square file format and grid display
//
// File format: UTF-8, exactly 49 non-empty lines, line k naming the token at
// cell k (row-major). Letters are written as their literal lowercase
// character, symbols by their canonical names (UPPER, SPACE, ...). Lines
// starting with '#' and blank lines are comments.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "p7/alphabet.hpp"
#include "p7/errors.hpp"
#include "p7/token.hpp"

namespace p7 {

class SquareFileError : public Error {
  public:
    SquareFileError(std::size_t line, const std::string& message)
        : Error("square file line " + std::to_string(line) + ": " + message), line_(line) {}
    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

inline Square parse_square_file(std::string_view content) {
    std::array<Token, kTokenCount> cells{};
    std::array<std::size_t, kTokenCount> line_of{};  // 1-based, 0 = unseen
    std::size_t count = 0;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= content.size()) {
        std::size_t eol = content.find('\n', pos);
        std::string_view line = content.substr(pos, eol == std::string_view::npos
                                                         ? std::string_view::npos
                                                         : eol - pos);
        pos = eol == std::string_view::npos ? content.size() + 1 : eol + 1;
        ++line_no;
        // trim surrounding blanks and a trailing CR
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.remove_suffix(1);
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
            line.remove_prefix(1);
        if (line.empty() || line.front() == '#') continue;
        auto t = token_from_name(line);
        if (!t) {
            throw SquareFileError(line_no, "unknown token name '" + std::string(line) + "'");
        }
        std::size_t ti = static_cast<std::size_t>(token_index(*t));
        if (line_of[ti] != 0) {
            throw SquareFileError(line_no, "duplicate token '" + std::string(line) +
                                               "' (first seen on line " +
                                               std::to_string(line_of[ti]) + ")");
        }
        if (count == kTokenCount) {
            throw SquareFileError(line_no, "more than 49 tokens");
        }
        line_of[ti] = line_no;
        cells[count++] = *t;
    }
    if (count != kTokenCount) {
        for (Token t : canonical_order()) {
            if (line_of[static_cast<std::size_t>(token_index(t))] == 0) {
                throw SquareFileError(line_no, "end of file after " + std::to_string(count) +
                                                   " tokens, expected 49; missing '" +
                                                   std::string(token_name(t)) + "'");
            }
        }
    }
    return Square::from_row_major(cells);
}

inline std::string format_square_file(const Square& square) {
    std::string out;
    for (Token t : square.row_major()) {
        out += token_name(t);
        out += '\n';
    }
    return out;
}

// Human-readable 7x7 grid with row/column labels, cells column-aligned.
inline std::string format_square_grid(const Square& square) {
    auto cells = square.row_major();
    auto cell = [&](int row, int col) {
        return cells[static_cast<std::size_t>(row * kGridSide + col)];
    };
    // letters occupy one display column regardless of UTF-8 byte count
    auto shown_width = [](Token t) {
        return is_letter(t) ? std::size_t{1} : token_name(t).size();
    };
    std::array<std::size_t, kGridSide> width{};
    for (int col = 0; col < kGridSide; ++col) {
        std::size_t w = 2;  // at least as wide as the "C1".."C7" header
        for (int row = 0; row < kGridSide; ++row) {
            w = std::max(w, shown_width(cell(row, col)));
        }
        width[static_cast<std::size_t>(col)] = w;
    }
    std::string out = "    ";
    for (int col = 0; col < kGridSide; ++col) {
        if (col > 0) out.append(2, ' ');
        out += 'C';
        out += static_cast<char>('1' + col);
        out.append(width[static_cast<std::size_t>(col)] - 2, ' ');
    }
    while (out.back() == ' ') out.pop_back();
    out += '\n';
    for (int row = 0; row < kGridSide; ++row) {
        out += 'L';
        out += static_cast<char>('1' + row);
        out.append(2, ' ');
        for (int col = 0; col < kGridSide; ++col) {
            if (col > 0) out.append(2, ' ');
            Token t = cell(row, col);
            out += token_name(t);
            out.append(width[static_cast<std::size_t>(col)] - shown_width(t), ' ');
        }
        while (out.back() == ' ') out.pop_back();
        out += '\n';
    }
    return out;
}

}  // namespace p7
