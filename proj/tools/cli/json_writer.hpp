#pragma once

#include <ostream>

#include <json.hpp>

namespace critpoly::cli {

using Json = nlohmann::ordered_json;

/// JSON number for finite values; "inf", "-inf" or "nan" strings otherwise.
Json number(double v);

/// Pretty-prints with two-space indentation, every float at 17 significant
/// digits, LF line endings and a trailing newline.
void write_json(std::ostream& os, const Json& j);

}  // namespace critpoly::cli
