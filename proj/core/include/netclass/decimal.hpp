#pragma once

#include <string>
#include <vector>

#include "netclass/types.hpp"

namespace netclass {

// Decimal tokens parsed exactly onto a shared power-of-ten scale:
// values[i] / scale equals the i-th token as a rational number.
struct ScaledDecimals {
  std::vector<Cost> values;
  long long scale = 1;
};

// Accepts an optional sign, digits, and an optional fractional part, at most
// 18 significant digits. No exponents, no leading '.', no lone sign.
ScaledDecimals parse_decimals(const std::vector<std::string>& tokens);

long long parse_integer_token(const std::string& token);

// Exact decimal rendering of value / scale with the full fractional width
// of the scale, e.g. (150, 100) -> "1.50". scale must be a power of ten.
std::string decimal_to_string(Cost value, long long scale);

}  // namespace netclass
