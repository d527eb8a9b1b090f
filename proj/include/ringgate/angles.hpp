#pragma once

#include <string_view>

namespace ringgate {

/// Maps an angle into (-pi, pi].
double wrap_angle(double a);

/// Smallest |a - b| modulo 2pi, in [0, pi].
double angular_distance(double a, double b);

/// Parses radians, accepting a trailing "pi" multiplier: "1.5", "pi", "0.5pi", "-2pi".
/// Throws InvalidArgument on malformed input.
double parse_angle(std::string_view text);

}  // namespace ringgate
