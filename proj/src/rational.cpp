// Copyright 2026 The hetsim authors
// SPDX-License-Identifier: Apache-2.0

#include "hetsim/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>

#include "hetsim/errors.hpp"

namespace hetsim {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr __int128 kMax64 = std::numeric_limits<long long>::max();

}  // namespace

Ratio Ratio::reduced(__int128 num, __int128 den) {
  if (den == 0) fail(Errc::division_by_zero, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num > kMax64 || -num > kMax64 || den > kMax64) {
    fail(Errc::numeric_overflow, "rational exceeds 64-bit range");
  }
  Ratio r;
  r.num_ = static_cast<long long>(num);
  r.den_ = static_cast<long long>(den);
  return r;
}

Ratio Ratio::of(long long num, long long den) {
  return reduced(static_cast<__int128>(num), static_cast<__int128>(den));
}

Ratio operator+(const Ratio& a, const Ratio& b) {
  return Ratio::reduced(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                        static_cast<__int128>(a.den_) * b.den_);
}

Ratio operator-(const Ratio& a, const Ratio& b) {
  return Ratio::reduced(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                        static_cast<__int128>(a.den_) * b.den_);
}

Ratio operator*(const Ratio& a, const Ratio& b) {
  return Ratio::reduced(static_cast<__int128>(a.num_) * b.num_,
                        static_cast<__int128>(a.den_) * b.den_);
}

Ratio operator/(const Ratio& a, const Ratio& b) {
  if (b.num_ == 0) fail(Errc::division_by_zero, "rational division by zero");
  return Ratio::reduced(static_cast<__int128>(a.num_) * b.den_,
                        static_cast<__int128>(a.den_) * b.num_);
}

Ratio Ratio::operator-() const { return reduced(-static_cast<__int128>(num_), den_); }

std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Ratio::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

double Ratio::to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

Ratio Ratio::parse(std::string_view text) {
  size_t i = 0;
  auto bad = [&]() -> Ratio {
    fail(Errc::malformed_spec, "invalid rational literal '" + std::string(text) + "'");
  };
  if (text.empty()) return bad();
  bool neg = false;
  if (text[i] == '-' || text[i] == '+') {
    neg = text[i] == '-';
    ++i;
  }
  if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) return bad();
  __int128 intpart = 0;
  int digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    intpart = intpart * 10 + (text[i] - '0');
    if (++digits > 18) fail(Errc::numeric_overflow, "rational literal too long");
    ++i;
  }
  __int128 num = intpart;
  __int128 den = 1;
  if (i < text.size() && text[i] == '.') {
    ++i;
    int frac_digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      num = num * 10 + (text[i] - '0');
      den *= 10;
      if (++frac_digits > 18) fail(Errc::numeric_overflow, "rational literal too long");
      ++i;
    }
    if (frac_digits == 0) return bad();
  } else if (i < text.size() && text[i] == '/') {
    ++i;
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) return bad();
    __int128 d = 0;
    int ddigits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      d = d * 10 + (text[i] - '0');
      if (++ddigits > 18) fail(Errc::numeric_overflow, "rational literal too long");
      ++i;
    }
    den = d;
  }
  if (i != text.size()) return bad();
  if (neg) num = -num;
  return reduced(num, den);
}

}  // namespace hetsim
