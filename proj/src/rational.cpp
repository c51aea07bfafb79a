// Apache License, Version 2.0, refer to LICENSE.txt
#include "fuzzproc/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace fuzzproc {
namespace {

using Wide = __int128;
using UWide = unsigned __int128;

UWide uabs(Wide v) { return v < 0 ? static_cast<UWide>(-v) : static_cast<UWide>(v); }

UWide gcd(UWide a, UWide b) {
  while (b != 0) {
    UWide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t narrow(Wide v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("rational arithmetic overflow");
  return static_cast<std::int64_t>(v);
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t out = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument("invalid rational literal: '" + std::string(text) + "'");
  return out;
}

}  // namespace

Rational Rational::reduced(Wide numerator, Wide denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  UWide g = gcd(uabs(numerator), static_cast<UWide>(denominator));
  if (g > 1) {
    numerator = numerator < 0 ? -static_cast<Wide>(uabs(numerator) / g)
                              : static_cast<Wide>(static_cast<UWide>(numerator) / g);
    denominator = static_cast<Wide>(static_cast<UWide>(denominator) / g);
  }
  Rational r;
  r.num_ = narrow(numerator);
  r.den_ = narrow(denominator);
  return r;
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  *this = reduced(numerator, denominator);
}

Rational Rational::parse(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t n = parse_int(text.substr(0, slash));
    std::int64_t d = parse_int(text.substr(slash + 1));
    if (d == 0) throw std::domain_error("rational with zero denominator");
    return Rational(n, d);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view head = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty()) throw std::invalid_argument("invalid rational literal: '" + std::string(text) + "'");
    bool negative = !head.empty() && head.front() == '-';
    std::string digits(head);
    if (digits == "-" || digits.empty()) digits = "0";
    std::int64_t whole = parse_int(digits);
    std::int64_t fraction = parse_int(frac);
    if (fraction < 0) throw std::invalid_argument("invalid rational literal: '" + std::string(text) + "'");
    Wide den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) {
      den *= 10;
      if (den > Wide(1000000000000000000LL)) throw std::overflow_error("decimal literal too long");
    }
    Wide num = uabs(whole) * den + fraction;
    if (negative || whole < 0) num = -num;
    return reduced(num, den);
  }
  return Rational(parse_int(text));
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational& Rational::operator+=(const Rational& other) {
  *this = reduced(Wide(num_) * other.den_ + Wide(other.num_) * den_, Wide(den_) * other.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  *this = reduced(Wide(num_) * other.den_ - Wide(other.num_) * den_, Wide(den_) * other.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  *this = reduced(Wide(num_) * other.num_, Wide(den_) * other.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.num_ == 0) throw std::domain_error("rational division by zero");
  *this = reduced(Wide(num_) * other.den_, Wide(den_) * other.num_);
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = narrow(-Wide(num_));
  r.den_ = den_;
  return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  Wide lhs = Wide(a.num_) * b.den_;
  Wide rhs = Wide(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace fuzzproc
