#include "fdo/distance.hpp"

#include <charconv>
#include <cmath>

namespace fdo {

std::string format_number(double value) {
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

std::optional<double> parse_number(std::string_view text) {
    if (text == "inf") return std::numeric_limits<double>::infinity();
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
    return value;
}

std::string Distance::to_string() const { return format_number(value_); }

std::optional<Distance> Distance::parse(std::string_view text) {
    auto v = parse_number(text);
    if (!v || std::isnan(*v) || *v < 0) return std::nullopt;
    return Distance(*v);
}

}  // namespace fdo
