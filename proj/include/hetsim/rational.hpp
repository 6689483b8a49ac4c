// Copyright 2026 The hetsim authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace hetsim {

/// Exact rational number over int64. All simulated times, rates and shares use
/// this type so that event ordering and makespans never depend on
/// floating-point rounding. Intermediate products run through __int128 and the
/// reduced value must fit int64, otherwise Errc::numeric_overflow is raised.
class Ratio {
 public:
  constexpr Ratio() = default;
  constexpr Ratio(long long value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  constexpr Ratio(int value) : num_(value), den_(1) {}        // NOLINT

  static Ratio of(long long num, long long den);
  /// Accepts "42", "-7", "3.25", "0.4" and exact fraction form "8576/625".
  static Ratio parse(std::string_view text);

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  /// Canonical text: "n" when integral, "n/d" otherwise.
  std::string str() const;
  double to_double() const;

  friend Ratio operator+(const Ratio& a, const Ratio& b);
  friend Ratio operator-(const Ratio& a, const Ratio& b);
  friend Ratio operator*(const Ratio& a, const Ratio& b);
  friend Ratio operator/(const Ratio& a, const Ratio& b);
  Ratio operator-() const;
  Ratio& operator+=(const Ratio& o) { return *this = *this + o; }
  Ratio& operator-=(const Ratio& o) { return *this = *this - o; }
  Ratio& operator*=(const Ratio& o) { return *this = *this * o; }
  Ratio& operator/=(const Ratio& o) { return *this = *this / o; }

  friend bool operator==(const Ratio& a, const Ratio& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b);

 private:
  static Ratio reduced(__int128 num, __int128 den);
  long long num_ = 0;
  long long den_ = 1;
};

inline Ratio rmin(const Ratio& a, const Ratio& b) { return a < b ? a : b; }
inline Ratio rmax(const Ratio& a, const Ratio& b) { return a < b ? b : a; }

}  // namespace hetsim
