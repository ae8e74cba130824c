#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "rigx/error.hpp"

namespace rigx {

/// Exact non-negative rational used for ε and δ parameters.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Rational() = default;
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    require(d > 0, ErrorKind::InvalidArgument, "rational with non-positive denominator");
    const auto g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  /// Accepts "a/b", an integer, or a finite decimal such as "0.25".
  static Rational parse(std::string_view text);

  double to_double() const noexcept { return double(num) / double(den); }
  std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }

  /// ⌈(this)·x⌉ for a non-negative integer x.
  std::int64_t ceil_times(std::int64_t x) const { return (num * x + den - 1) / den; }
  /// ⌊(this)·x⌋ for an integer x (floor toward −∞).
  std::int64_t floor_times(std::int64_t x) const {
    const std::int64_t a = num * x;
    return a >= 0 ? a / den : -((-a + den - 1) / den);
  }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) { return a.num * b.den < b.num * a.den; }
};

inline Rational Rational::parse(std::string_view text) {
  auto bad = [&] { fail(ErrorKind::InvalidArgument, "cannot parse rational '" + std::string(text) + "'"); };
  auto parse_int = [&](std::string_view s) -> std::int64_t {
    if (s.empty() || s.size() > 15) bad();
    std::int64_t v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') bad();
      v = v * 10 + (c - '0');
    }
    return v;
  };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto d = parse_int(text.substr(slash + 1));
    if (d == 0) bad();
    return {parse_int(text.substr(0, slash)), d};
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    return {(whole.empty() ? 0 : parse_int(whole)) * den + (frac.empty() ? 0 : parse_int(frac)), den};
  }
  return {parse_int(text), 1};
}

}  // namespace rigx
