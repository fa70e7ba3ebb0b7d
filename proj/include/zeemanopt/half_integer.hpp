#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace zeemanopt {

// Angular momentum stored as 2j, so half-integer values are exact and all
// validity checks reduce to integer arithmetic.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;

  static constexpr HalfInteger from_twice(int twice) { return HalfInteger(twice); }
  static constexpr HalfInteger from_int(int value) { return HalfInteger(2 * value); }

  // Accepts "2", "-1", "3/2", "-1/2" and decimal forms "0.5", "1.5".
  static HalfInteger parse(std::string_view text);

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr double value() const { return 0.5 * twice_; }
  std::string str() const;  // "2", "-1/2", ...

  friend constexpr bool operator==(HalfInteger, HalfInteger) = default;
  friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

  friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) {
    return HalfInteger(a.twice_ + b.twice_);
  }
  friend constexpr HalfInteger operator-(HalfInteger a, HalfInteger b) {
    return HalfInteger(a.twice_ - b.twice_);
  }
  constexpr HalfInteger operator-() const { return HalfInteger(-twice_); }

 private:
  constexpr explicit HalfInteger(int twice) : twice_(twice) {}
  int twice_ = 0;
};

// Factorial growth bounds all angular-algebra routines; j beyond this cap is
// rejected with a domain error.
inline constexpr HalfInteger kMaxAngularMomentum = HalfInteger::from_int(10);

constexpr int multiplicity(HalfInteger j) { return j.twice() + 1; }

constexpr bool valid_magnitude(HalfInteger j) { return j.twice() >= 0; }

// A projection m belongs to magnitude j when |m| <= j and j - m is an integer.
constexpr bool valid_projection(HalfInteger j, HalfInteger m) {
  const int abs_m = m.twice() < 0 ? -m.twice() : m.twice();
  return valid_magnitude(j) && abs_m <= j.twice() && (j.twice() - m.twice()) % 2 == 0;
}

// Throw std::domain_error on an invalid (j, m) pair or a magnitude beyond the cap.
void require_valid_pair(HalfInteger j, HalfInteger m);
void require_in_range(HalfInteger j);

}  // namespace zeemanopt
