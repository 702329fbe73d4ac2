#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ftop/space.hpp"

namespace ftop {

/// Syntax error or ill-formed expression, with the byte offset it refers to.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar (whitespace is insignificant):
//
//   map   := space "-->" space
//   space := "{" [ chain ("," chain)* ] "}"
//   chain := node ( ("->" | "<-" | "<->") node )*
//   node  := name ("=" name)*
//   name  := [A-Za-z0-9_']+
//
// "x->y" puts y in the closure of x. The Unicode arrows U+2192, U+2190,
// U+2194 and U+27F6 are accepted for "->", "<-", "<->" and "-->".
//
// In a standalone space an "=" class is one point named by its first name,
// the other names being aliases. In the codomain of a map an "=" class is the
// image of every domain point named in it.

Space parse_space(std::string_view text);
CMap parse_map(std::string_view text);

/// Canonical ASCII text with parse_space(render(s)) == s. Only covering
/// arrows are emitted.
std::string render(const Space& s);

/// Canonical ASCII text with parse_map(render(f)) == f. Requires every domain
/// point whose name is also a codomain name to map onto that very point;
/// throws std::domain_error otherwise (see relabel_for_render).
std::string render(const CMap& f);

/// True iff render(f) is defined.
bool renderable(const CMap& f);

/// Renames clashing domain points by appending primes, so the result is
/// renderable. Returns f itself when it already is.
CMap relabel_for_render(const CMap& f);

}  // namespace ftop
