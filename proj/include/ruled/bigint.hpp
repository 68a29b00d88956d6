#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace ruled {

using Int = mpz_class;
using Rat = mpq_class;

// Exact decimal integer, optional sign.  Anything else (floats, exponents,
// stray characters) throws ParseError.
Int parse_int(std::string_view text);

// "3", "-7/2", "+4/6" (canonicalised).  Floats are rejected.
Rat parse_rat(std::string_view text);

std::vector<Int> parse_int_list(std::string_view csv);
std::vector<Rat> parse_rat_list(std::string_view csv);

std::string to_string(const Int& value);
std::string to_string(const Rat& value);

inline bool is_integer(const Rat& value) { return value.get_den() == 1; }

} // namespace ruled
