#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace granrough {

/// Exact fraction with a positive denominator, always stored in lowest terms.
///
/// Every inclusion degree and every precision threshold in the engine is a
/// Rational, so comparisons such as `kappa >= 1 - alpha` never depend on
/// floating-point rounding.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT(implicit)
  Rational(std::int64_t num, std::int64_t den);

  /// Parses "3/10", "0.3", "1", "-2/4". Throws ParameterError on malformed text.
  static Rational parse(std::string_view text);

  /// Best rational approximation with denominator <= max_den.
  /// Used for JSON numbers, so that 0.3 becomes exactly 3/10.
  static Rational from_double(double value, std::int64_t max_den = 1'000'000);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  Rational operator-() const { return Rational(-num_, den_); }
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

  /// Smallest integer >= value.
  std::int64_t ceil() const;
  /// Largest integer <= value.
  std::int64_t floor() const;
  bool is_integer() const { return den_ == 1; }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace granrough
