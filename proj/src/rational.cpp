#include "catmag/rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

#include "catmag/errors.hpp"

namespace catmag {

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(const Integer& value) : value_(value) {}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::make(const Integer& num, const Integer& den) {
  if (den == 0) throw ArithmeticError("rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::make(std::int64_t num, std::int64_t den) {
  return make(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

Rational Rational::parse(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;

  auto fail = [&](std::size_t pos, const std::string& why) -> ParseError {
    return ParseError("invalid rational \"" + std::string(text) + "\" at offset " +
                          std::to_string(pos) + ": " + why,
                      pos);
  };

  std::size_t pos = begin;
  if (pos == end) throw fail(pos, "empty");
  if (text[pos] == '-') ++pos;
  const std::size_t num_begin = pos;
  while (pos < end && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == num_begin) throw fail(pos, "expected digit");
  const std::string num(text.substr(begin, pos - begin));

  std::string den = "1";
  if (pos < end) {
    if (text[pos] != '/') throw fail(pos, "unexpected character");
    ++pos;
    const std::size_t den_begin = pos;
    if (pos == end) throw fail(pos, "expected denominator");
    if (text[pos] == '0') throw fail(pos, "zero or zero-padded denominator");
    while (pos < end && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == den_begin) throw fail(pos, "expected digit");
    if (pos != end) throw fail(pos, "unexpected character");
    den = std::string(text.substr(den_begin, pos - den_begin));
  }
  return make(Integer(num, 10), Integer(den, 10));
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str(10);
  return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

std::string Rational::to_decimal(unsigned digits) const {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  const Integer num = abs(value_.get_num());
  const Integer& den = value_.get_den();
  // round(num * scale / den), halves away from zero
  const Integer scaled = (2 * num * scale + den) / (2 * den);
  std::string body = scaled.get_str(10);
  if (digits > 0) {
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
  }
  const bool negative = sign() < 0 && scaled != 0;
  return negative ? "-" + body : body;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw ArithmeticError("reciprocal of zero");
  mpq_class q;
  mpq_inv(q.get_mpq_t(), value_.get_mpq_t());
  return Rational(std::move(q));
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw ArithmeticError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

void Rational::add_product(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return;
  mpq_class t;
  mpq_mul(t.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
  mpq_add(value_.get_mpq_t(), value_.get_mpq_t(), t.get_mpq_t());
}

void Rational::sub_product(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return;
  mpq_class t;
  mpq_mul(t.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
  mpq_sub(value_.get_mpq_t(), value_.get_mpq_t(), t.get_mpq_t());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

bool is_canonical(const Rational& r) {
  const Integer num = r.numerator();
  const Integer den = r.denominator();
  if (den <= 0) return false;
  if (num == 0) return den == 1;
  Integer g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return g == 1;
}

}  // namespace catmag
