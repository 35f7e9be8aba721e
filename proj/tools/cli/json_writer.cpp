#include "json_writer.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace critpoly::cli {

Json number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

namespace {

void format_double(std::ostream& os, double v) {
    if (!std::isfinite(v)) {
        os << (std::isnan(v) ? "\"nan\"" : v > 0 ? "\"inf\"" : "\"-inf\"");
        return;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    std::string s(buf);
    // Keep the value recognisably floating point when it is integral.
    if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
    os << s;
}

void write(std::ostream& os, const Json& j, int depth) {
    const std::string pad(2 * static_cast<std::size_t>(depth + 1), ' ');
    const std::string close(2 * static_cast<std::size_t>(depth), ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                os << "{}";
                return;
            }
            os << "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) os << ",\n";
                first = false;
                os << pad << Json(it.key()).dump() << ": ";
                write(os, it.value(), depth + 1);
            }
            os << '\n' << close << '}';
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                os << "[]";
                return;
            }
            // Short numeric arrays ([re, im] pairs, history entries) stay on one line.
            bool flat = j.size() <= 2;
            for (const auto& e : j) flat = flat && e.is_primitive();
            if (flat) {
                os << '[';
                for (std::size_t i = 0; i < j.size(); ++i) {
                    if (i) os << ", ";
                    write(os, j[i], depth + 1);
                }
                os << ']';
                return;
            }
            os << "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) os << ",\n";
                os << pad;
                write(os, j[i], depth + 1);
            }
            os << '\n' << close << ']';
            return;
        }
        case Json::value_t::number_float:
            format_double(os, j.get<double>());
            return;
        default:
            os << j.dump();
    }
}

}  // namespace

void write_json(std::ostream& os, const Json& j) {
    write(os, j, 0);
    os << '\n';
}

}  // namespace critpoly::cli
