#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

namespace fdo {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using Weight = double;

/// Non-negative path length with an explicit infinity.
///
/// Backed by a double: integer-valued lengths (every unweighted graph, and
/// weighted graphs with integral weights) are represented exactly up to 2^53.
/// Addition saturates at infinity and ordering is total with infinity maximal.
class Distance {
public:
    constexpr Distance() = default;
    constexpr explicit Distance(double value) : value_(value) {}

    static constexpr Distance infinity() { return Distance(std::numeric_limits<double>::infinity()); }
    static constexpr Distance zero() { return Distance(0.0); }

    constexpr bool is_infinite() const { return value_ == std::numeric_limits<double>::infinity(); }
    constexpr bool is_finite() const { return !is_infinite(); }
    constexpr double value() const { return value_; }

    constexpr Distance operator+(Distance other) const { return Distance(value_ + other.value_); }
    constexpr Distance operator+(double w) const { return Distance(value_ + w); }
    constexpr Distance& operator+=(Distance other) {
        value_ += other.value_;
        return *this;
    }

    constexpr auto operator<=>(const Distance&) const = default;

    /// Text form used by every file format: "inf" or the shortest decimal that
    /// round-trips to the same double.
    std::string to_string() const;
    static std::optional<Distance> parse(std::string_view text);

private:
    double value_ = 0.0;
};

inline constexpr Distance max(Distance a, Distance b) { return a < b ? b : a; }
inline constexpr Distance min(Distance a, Distance b) { return b < a ? b : a; }

/// Absolute tolerance used to compare lengths on graphs with non-integral weights.
inline constexpr double kWeightTolerance = 1e-9;

inline bool nearly_equal(Distance a, Distance b, double tol = kWeightTolerance) {
    if (a.is_infinite() || b.is_infinite()) return a == b;
    double d = a.value() - b.value();
    return d <= tol && -d <= tol;
}

/// Shortest round-trip text for a double ("3", "0.25", "inf").
std::string format_number(double value);
std::optional<double> parse_number(std::string_view text);

}  // namespace fdo
