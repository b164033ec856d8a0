// errors.hpp - Exception types shared across the library

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "p7/token.hpp"

namespace p7 {

// Base class for all data-level errors raised by the library. Usage-level
// mistakes (bad arguments to policy constructors etc.) throw std:: exceptions.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A character (or combining sequence) that maps to no token, raised by
// normalize under the ERROR policy. `character` holds the offending unit as
// UTF-8; `index` is its 0-based codepoint position in the input.
class UnknownCharacter : public Error {
  public:
    UnknownCharacter(std::string character, std::size_t index);
    const std::string& character() const { return character_; }
    std::size_t index() const { return index_; }

  private:
    std::string character_;
    std::size_t index_;
};

// Token stream handed to render violates the Upper pairing rule.
class InvalidTokenStream : public Error {
  public:
    explicit InvalidTokenStream(std::size_t index);
    std::size_t index() const { return index_; }

  private:
    std::size_t index_;
};

// A whitespace-separated lexeme in cipher text that is not exactly two
// decimal digits. `index` counts lexemes, not characters.
class MalformedNumber : public Error {
  public:
    MalformedNumber(std::string lexeme, std::size_t index);
    const std::string& lexeme() const { return lexeme_; }
    std::size_t index() const { return index_; }

  private:
    std::string lexeme_;
    std::size_t index_;
};

// Square layout errors: a 49-cell layout must hold every token exactly once.
class WrongLength : public Error {
  public:
    explicit WrongLength(std::size_t actual);
    std::size_t actual() const { return actual_; }

  private:
    std::size_t actual_;
};

class DuplicateToken : public Error {
  public:
    explicit DuplicateToken(Token token);
    Token token() const { return token_; }

  private:
    Token token_;
};

class MissingToken : public Error {
  public:
    explicit MissingToken(Token token);
    Token token() const { return token_; }

  private:
    Token token_;
};

// ---------------------------------------------------------------------------

inline UnknownCharacter::UnknownCharacter(std::string character, std::size_t index)
    : Error("unknown character '" + character + "' at index " + std::to_string(index)),
      character_(std::move(character)),
      index_(index) {}

inline InvalidTokenStream::InvalidTokenStream(std::size_t index)
    : Error("invalid token stream at index " + std::to_string(index) +
            ": UPPER must be followed by a letter"),
      index_(index) {}

inline MalformedNumber::MalformedNumber(std::string lexeme, std::size_t index)
    : Error("malformed number '" + lexeme + "' at token " + std::to_string(index) +
            " (expected exactly two decimal digits)"),
      lexeme_(std::move(lexeme)),
      index_(index) {}

inline WrongLength::WrongLength(std::size_t actual)
    : Error("square layout has " + std::to_string(actual) + " tokens, expected 49"),
      actual_(actual) {}

inline DuplicateToken::DuplicateToken(Token token)
    : Error("duplicate token '" + std::string(token_name(token)) + "' in square layout"),
      token_(token) {}

inline MissingToken::MissingToken(Token token)
    : Error("missing token '" + std::string(token_name(token)) + "' in square layout"),
      token_(token) {}

}  // namespace p7
