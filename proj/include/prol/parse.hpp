#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "prol/poly.hpp"

namespace prol {

/// Malformed polynomial text; `offset` is the byte position of the problem.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// An identifier that is not a variable of the ring.
class UnknownIdentifierError : public ParseError {
 public:
  UnknownIdentifierError(std::string token, std::size_t offset)
      : ParseError("unknown identifier '" + token + "'", offset), token_(std::move(token)) {}
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

/// expr := sign? term (('+'|'-') term)*; term := factor ('*' factor)*;
/// factor := base ('^' uint)?; base := rational | identifier | '(' expr ')'.
Poly parse_poly(std::string_view text, const RingPtr& ring);

}  // namespace prol
