#include "ringgate/angles.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "ringgate/types.hpp"

namespace ringgate {

double wrap_angle(double a) {
  double r = std::remainder(a, two_pi);  // [-pi, pi]
  if (r <= -pi) r += two_pi;
  return r;
}

double angular_distance(double a, double b) { return std::abs(std::remainder(a - b, two_pi)); }

double parse_angle(std::string_view text) {
  std::string_view body = text;
  bool has_pi = false;
  if (body.size() >= 2 && body.substr(body.size() - 2) == "pi") {
    has_pi = true;
    body.remove_suffix(2);
  }
  double value = 1.0;
  if (!(has_pi && (body.empty() || body == "+" || body == "-"))) {
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
    if (ec != std::errc{} || ptr != body.data() + body.size() || body.empty())
      throw InvalidArgument("malformed angle: '" + std::string(text) + "'");
  } else if (body == "-") {
    value = -1.0;
  }
  if (!std::isfinite(value)) throw InvalidArgument("non-finite angle: '" + std::string(text) + "'");
  return has_pi ? value * pi : value;
}

void validate(const RingConfig& cfg) {
  if (!std::isfinite(cfg.ka) || !(cfg.ka > 0.0))
    throw InvalidArgument("ka must be finite and > 0, got " + std::to_string(cfg.ka));
  if (!std::isfinite(cfg.x) || cfg.x < 0.0)
    throw InvalidArgument("x must be finite and >= 0, got " + std::to_string(cfg.x));
  if (!std::isfinite(cfg.gamma) || !(cfg.gamma > 0.0) || !(cfg.gamma < two_pi))
    throw InvalidArgument("gamma must lie strictly inside (0, 2pi), got " +
                          std::to_string(cfg.gamma));
}

}  // namespace ringgate
