// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace fuzzproc {

/// Exact rational number with a canonical representation: the denominator is
/// always positive and the fraction is fully reduced. All membership grades,
/// distribution weights and centroid coordinates are carried as Rational so
/// that results are exact until they are rendered; doubles appear only in the
/// scalar uncertainty measures and in reports.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design
  Rational(std::int64_t numerator, std::int64_t denominator);

  /// Accepts "3", "-3", "3/4", "0.25", "-1.5". Decimal strings are converted
  /// exactly ("0.062" -> 31/500).
  static Rational parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }

  /// Nearest double; exact whenever numerator and denominator fit in 53 bits,
  /// which holds for everything this library produces.
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// "n" for integers, "n/d" otherwise.
  std::string str() const;

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);
  Rational operator-() const;

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  static Rational reduced(__int128 numerator, __int128 denominator);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace fuzzproc
