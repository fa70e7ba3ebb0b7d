#include "zeemanopt/half_integer.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace zeemanopt {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_int(std::string_view s, int& out) {
  const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc{} && res.ptr == s.data() + s.size();
}

}  // namespace

HalfInteger HalfInteger::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const std::string bad =
      "cannot parse '" + std::string(text) + "' as an integer or half-integer";
  if (s.empty()) throw std::invalid_argument(bad);

  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    int num = 0;
    if (trim(s.substr(slash + 1)) != "2" || !parse_int(trim(s.substr(0, slash)), num))
      throw std::invalid_argument(bad);
    return HalfInteger::from_twice(num);
  }

  int whole = 0;
  if (parse_int(s, whole)) return HalfInteger::from_int(whole);

  char* end = nullptr;
  const std::string buf(s);
  const double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size()) throw std::invalid_argument(bad);
  const double doubled = 2.0 * v;
  if (std::abs(doubled - std::round(doubled)) > 1e-9)
    throw std::invalid_argument(bad);
  return HalfInteger::from_twice(static_cast<int>(std::lround(doubled)));
}

std::string HalfInteger::str() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

void require_valid_pair(HalfInteger j, HalfInteger m) {
  if (!valid_projection(j, m))
    throw std::domain_error("invalid angular-momentum pair (j=" + j.str() +
                            ", m=" + m.str() + ")");
}

void require_in_range(HalfInteger j) {
  if (!valid_magnitude(j) || j > kMaxAngularMomentum)
    throw std::domain_error("angular momentum j=" + j.str() +
                            " outside the supported range [0, " +
                            kMaxAngularMomentum.str() + "]");
}

}  // namespace zeemanopt
