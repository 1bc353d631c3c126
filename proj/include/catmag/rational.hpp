#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace catmag {

using Integer = mpz_class;

/// Exact rational number in canonical form: positive denominator,
/// gcd(|num|, den) = 1, zero stored as 0/1.
///
/// Text format is "p/q" or "p" with an ASCII minus; integers print without
/// the "/1" suffix.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  explicit Rational(const Integer& value);
  explicit Rational(mpq_class value);

  /// Throws ArithmeticError when den == 0.
  static Rational make(const Integer& num, const Integer& den);
  static Rational make(std::int64_t num, std::int64_t den);

  /// Parses `-?[0-9]+(/[1-9][0-9]*)?` after trimming ASCII whitespace.
  /// Throws ParseError carrying the offending character offset.
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  const mpq_class& raw() const noexcept { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  std::string to_string() const;
  /// Decimal approximation with `digits` fractional digits, rounded half
  /// away from zero. Advisory output only.
  std::string to_decimal(unsigned digits) const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational reciprocal() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  /// this += a * b, without a temporary Rational.
  void add_product(const Rational& a, const Rational& b);
  /// this -= a * b.
  void sub_product(const Rational& a, const Rational& b);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// True iff the stored value is canonical (den > 0, gcd = 1).
bool is_canonical(const Rational& r);

namespace literals {
/// "1/4"_q
inline Rational operator""_q(const char* text, std::size_t len) {
  return Rational::parse(std::string_view(text, len));
}
}  // namespace literals

}  // namespace catmag
