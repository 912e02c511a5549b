#pragma once

#include <string>
#include <string_view>

#include "hb/symbol.hpp"

namespace hb {

// Text form used on the command line:
//
//   A ; (B, zeta, d) ; (B, zeta, d) ...
//
// Complex numbers are written re+imi, e.g. "-1", "0.5-2i", "i", "1e-3+4i".
// Whitespace is ignored. Poles off the unit circle are rejected.
cd parse_complex(std::string_view text);
SmirnovSymbol parse_symbol(std::string_view text);

// Inverse of parse_symbol, using shortest round-trip decimals.
std::string format_complex(cd z);
std::string format_symbol(const SmirnovSymbol& phi);

}  // namespace hb
