#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace groupwave {

/// Exact rational with 64-bit numerator and positive denominator, always in
/// lowest terms. Character values are kept exact so that kernel membership
/// is an integer test; floats appear only downstream in trig evaluation.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator);
  static Rational from_int(std::int64_t n);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  std::string to_string() const;
  /// Accepts "p" or "p/q" with q > 0 after sign normalization.
  static Rational parse(std::string_view text);

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator*(std::int64_t k, const Rational& r);
  Rational& operator+=(const Rational& o);

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace groupwave
