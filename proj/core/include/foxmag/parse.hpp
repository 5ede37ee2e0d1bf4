#pragma once

#include "foxmag/braid.hpp"
#include "foxmag/free_word.hpp"
#include "foxmag/gen_word.hpp"

#include <string>

namespace foxmag {

/// Free-word grammar: whitespace-separated tokens `x<k>` or `x<k>^-1`;
/// the empty string is the identity. Throws ParseError.
FreeWord parse_free_word(const std::string& text, int rank);

/// Largest generator index mentioned in a free-word string, 0 when empty.
int max_free_word_index(const std::string& text);

/// Generator-word grammar: whitespace-separated tokens `s<i>`, `a[<r>,<s>]`,
/// `e[<i>,<j>]`, `e[<i>,<j>,<k>]`, each optionally suffixed `^-1`.
/// Indices are validated against n. Throws ParseError.
GenWord parse_gen_word(const std::string& text, int n);

/// Braid-word grammar: the generator grammar restricted to `s<i>` tokens.
BraidWord parse_braid_word(const std::string& text, int strands);

} // namespace foxmag
