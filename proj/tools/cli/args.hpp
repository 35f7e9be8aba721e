#pragma once

#include <string>
#include <vector>

namespace critpoly::cli {

/// "3,5,8", "2..12" or a mix such as "2..4,10". Throws InputError.
std::vector<long long> parse_int_list(const std::string& text);

/// A real number or "inf".
double parse_exponent(const std::string& text);

}  // namespace critpoly::cli
