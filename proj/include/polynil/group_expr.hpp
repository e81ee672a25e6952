#pragma once

#include "polynil/abelian.hpp"
#include "polynil/errors.hpp"

#include <cstddef>
#include <string>

namespace polynil {

// Group expressions:
//   expr := term ('+' term)*
//   term := 'Z' ('^' exp)? | 'Z' ('/' | '_') uint ('^' exp)? | '0'
//   exp  := uint | '(' uint ')'
// uint is a decimal integer >= 1 (the modulus of 'Z/1' is allowed and denotes
// the trivial summand). Whitespace is insignificant. 'Z_n' is an alias for
// 'Z/n'; 'Z/n^k' abbreviates k copies of Z/n.
//
// The result is canonical; non-canonical input like "Z/6 + Z/4" comes back as
// invariant factors [12, 2]. Throws GroupParseError with the byte offset on
// malformed input.
FgAbelianGroup parse_group(const std::string& text);

struct GroupRenderOptions {
  // Torsion prints factor by factor ("Z/2 + Z/2") up to this many terms;
  // beyond it runs collapse to "Z/2^(count)".
  std::size_t max_expanded_terms = 100;
};

// Canonical text form, re-parsable by parse_group. The trivial group is "0".
std::string render_group(const FgAbelianGroup& group, const GroupRenderOptions& options = {});

}  // namespace polynil
