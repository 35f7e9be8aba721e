#include "args.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <string_view>

#include "critpoly/errors.hpp"

namespace critpoly::cli {

namespace {

long long parse_int(std::string_view s, const std::string& whole) {
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        throw InputError("invalid integer list '" + whole + "'");
    }
    return v;
}

}  // namespace

std::vector<long long> parse_int_list(const std::string& text) {
    std::vector<long long> out;
    std::string_view rest = text;
    while (true) {
        const std::size_t comma = rest.find(',');
        const std::string_view item = rest.substr(0, comma);
        const std::size_t dots = item.find("..");
        if (dots == std::string_view::npos) {
            out.push_back(parse_int(item, text));
        } else {
            const long long lo = parse_int(item.substr(0, dots), text);
            const long long hi = parse_int(item.substr(dots + 2), text);
            if (hi < lo) throw InputError("empty range in '" + text + "'");
            if (hi - lo > 10'000'000) throw InputError("range too long in '" + text + "'");
            for (long long v = lo; v <= hi; ++v) out.push_back(v);
        }
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return out;
}

double parse_exponent(const std::string& text) {
    if (text == "inf" || text == "infinity") return std::numeric_limits<double>::infinity();
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw InputError("invalid exponent '" + text + "' (expected a number or 'inf')");
    }
    if (std::isnan(v) || v < 1.0) throw InputError("exponent p must be >= 1 (got '" + text + "')");
    return v;
}

}  // namespace critpoly::cli
