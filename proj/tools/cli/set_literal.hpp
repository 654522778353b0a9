#pragma once

#include <string_view>

#include "sumprod/zp_set.hpp"

namespace sumprod::cli {

/// Parses `{ item (, item)* }` where item is INT or INT..INT (inclusive).
/// Values are reduced mod p and duplicates collapse.  Whitespace is allowed
/// between tokens.  Throws Error(SyntaxError) on malformed text and
/// Error(EmptySet) for "{}".
ZpSet parse_set_literal(std::string_view text, PrimeModulus p);

}  // namespace sumprod::cli
