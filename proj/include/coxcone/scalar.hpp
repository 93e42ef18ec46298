#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace coxcone {

using Rational = mpq_class;

// An exact element of Q(√5), stored as a + b√5 with a, b rational.
//
// When b = 0 the value is a plain rational; is_rational() reports that case
// and the text form switches to "p/q". All comparisons are exact: the sign of
// a + b√5 is decided by comparing a² with 5b², never by rounding.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : a_(value) {}  // NOLINT: integers convert implicitly
  Scalar(int value) : a_(value) {}   // NOLINT
  Scalar(Rational a) : a_(std::move(a)) { a_.canonicalize(); }  // NOLINT
  Scalar(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
  }

  static Scalar fraction(long num, long den);
  // (1 + √5) / 2
  static Scalar golden();

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt5_part() const { return b_; }

  bool is_rational() const { return sgn(b_) == 0; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_integer() const;

  // -1, 0 or +1.
  int sign() const;

  Scalar inverse() const;  // throws DivisionByZero
  Scalar abs() const { return sign() < 0 ? -*this : *this; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y);

  // Text form: "p/q" (q omitted when 1) or "(p+qr5)/s" (s omitted when 1).
  std::string to_string() const;
  static Scalar parse(std::string_view text);  // throws ParseError

  // Display only; never used in a decision.
  double to_decimal() const;

  std::size_t hash() const;

 private:
  Rational a_;
  Rational b_;
};

enum class ArithOp { kAdd, kSub, kMul, kDiv };

// Checked arithmetic; returns nullopt for division by zero instead of
// throwing.
std::optional<Scalar> arith(const Scalar& x, const Scalar& y, ArithOp op);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

struct ScalarHash {
  std::size_t operator()(const Scalar& s) const { return s.hash(); }
};

}  // namespace coxcone
