#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "mptheta/errors.hpp"

namespace mptheta {

/// Exact element of (1/2)Z. Stores twice the value.
class HalfInt {
 public:
  using Int = boost::multiprecision::cpp_int;

  HalfInt() = default;
  HalfInt(long long v) : twice_(Int(v) * 2) {}  // NOLINT(implicit)

  static HalfInt from_twice(Int t) {
    HalfInt h;
    h.twice_ = std::move(t);
    return h;
  }
  /// num/den with den in {1, 2}.
  static HalfInt frac(long long num, long long den) {
    require(den == 1 || den == 2, "half-integer denominator must be 1 or 2");
    return from_twice(Int(num) * (2 / den));
  }
  static HalfInt half() { return from_twice(1); }

  const Int& twice() const { return twice_; }
  bool is_integer() const { return (twice_ & 1) == 0; }
  bool is_zero() const { return twice_ == 0; }
  int sign() const { return twice_ > 0 ? 1 : (twice_ < 0 ? -1 : 0); }

  long long to_ll() const {
    if (!is_integer()) throw ValidationError("expected an integer, got " + str());
    Int v = twice_ / 2;
    require(v >= Int(INT64_MIN / 4) && v <= Int(INT64_MAX / 4), "integer out of range");
    return static_cast<long long>(v);
  }
  long long twice_ll() const {
    require(twice_ >= Int(INT64_MIN / 4) && twice_ <= Int(INT64_MAX / 4), "value out of range");
    return static_cast<long long>(twice_);
  }

  /// Exact half of this value; the result must again lie in (1/2)Z.
  HalfInt halved() const {
    if (!is_integer()) throw ValidationError("cannot halve " + str() + " inside (1/2)Z");
    return from_twice(twice_ / 2);
  }

  HalfInt operator-() const { return from_twice(-twice_); }
  HalfInt& operator+=(const HalfInt& o) { twice_ += o.twice_; return *this; }
  HalfInt& operator-=(const HalfInt& o) { twice_ -= o.twice_; return *this; }
  friend HalfInt operator+(HalfInt l, const HalfInt& r) { return l += r; }
  friend HalfInt operator-(HalfInt l, const HalfInt& r) { return l -= r; }
  friend HalfInt operator*(const HalfInt& l, long long k) { return from_twice(l.twice_ * k); }
  friend HalfInt operator*(long long k, const HalfInt& r) { return r * k; }

  friend bool operator==(const HalfInt& l, const HalfInt& r) { return l.twice_ == r.twice_; }
  friend std::strong_ordering operator<=>(const HalfInt& l, const HalfInt& r) {
    if (l.twice_ < r.twice_) return std::strong_ordering::less;
    if (l.twice_ > r.twice_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "3/2", "-1/2", "2".
  std::string str() const {
    if (is_integer()) return Int(twice_ / 2).str();
    return twice_.str() + "/2";
  }
  /// Always "p/2" (serialization form).
  std::string twice_str() const { return twice_.str() + "/2"; }

 private:
  Int twice_ = 0;
};

inline HalfInt midpoint(const HalfInt& a, const HalfInt& b) { return (a + b).halved(); }

}  // namespace mptheta
