#include "coxcone/scalar.hpp"

#include <cctype>
#include <cmath>

#include "coxcone/error.hpp"

namespace coxcone {

namespace {

std::size_t hash_mpz(mpz_srcptr z) {
  std::size_t h = static_cast<std::size_t>(mpz_sgn(z)) + 0x9e3779b97f4a7c15ULL;
  const std::size_t n = mpz_size(z);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= static_cast<std::size_t>(mpz_getlimbn(z, i)) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
  }
  return h;
}

std::size_t hash_mpq(const Rational& q) {
  std::size_t h = hash_mpz(q.get_num_mpz_t());
  return h * 31 + hash_mpz(q.get_den_mpz_t());
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool done() {
    skip_ws();
    return pos_ == text_.size();
  }
  // Optional sign followed by decimal digits.
  mpz_class integer() {
    skip_ws();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
      skip_ws();
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail("expected digits");
    mpz_class value(std::string(text_.substr(start, pos_ - start)), 10);
    return negative ? mpz_class(-value) : value;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse scalar \"" + std::string(text_) +
                     "\": " + what + " at offset " + std::to_string(pos_));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::fraction(long num, long den) {
  if (den == 0) throw DivisionByZero();
  return Scalar(Rational(num, den));
}

Scalar Scalar::golden() { return Scalar(Rational(1, 2), Rational(1, 2)); }

bool Scalar::is_integer() const {
  return is_rational() && a_.get_den() == 1;
}

int Scalar::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: whichever of a² and 5b² is larger wins.
  const Rational a2 = a_ * a_;
  const Rational b2 = 5 * b_ * b_;
  return cmp(a2, b2) > 0 ? sa : sb;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return Scalar(Rational(1 / a_));
  const Rational norm = a_ * a_ - 5 * b_ * b_;
  return Scalar(Rational(a_ / norm), Rational(-b_ / norm));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  a_ += o.a_;
  if (sgn(o.b_) != 0) b_ += o.b_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  a_ -= o.a_;
  if (sgn(o.b_) != 0) b_ -= o.b_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(b_) == 0 && sgn(o.b_) == 0) {
    a_ *= o.a_;
    return *this;
  }
  Rational a = a_ * o.a_ + 5 * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_.swap(a);
  b_.swap(b);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_rational()) {
    if (sgn(o.a_) == 0) throw DivisionByZero();
    a_ /= o.a_;
    if (sgn(b_) != 0) b_ /= o.a_;
    return *this;
  }
  return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar r;
  r.a_ = -a_;
  r.b_ = -b_;
  return r;
}

std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) {
  const int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Scalar::to_string() const {
  if (is_rational()) return a_.get_str();
  mpz_class s;
  mpz_lcm(s.get_mpz_t(), a_.get_den_mpz_t(), b_.get_den_mpz_t());
  const mpz_class p = a_.get_num() * (s / a_.get_den());
  const mpz_class q = b_.get_num() * (s / b_.get_den());
  std::string out = "(" + p.get_str();
  out += sgn(q) < 0 ? "-" : "+";
  out += mpz_class(::abs(q)).get_str() + "r5)";
  if (s != 1) out += "/" + s.get_str();
  return out;
}

Scalar Scalar::parse(std::string_view text) {
  Cursor cur(text);
  if (cur.eat('(')) {
    const mpz_class p = cur.integer();
    cur.skip_ws();
    bool negative = false;
    if (cur.eat('-')) {
      negative = true;
    } else if (!cur.eat('+')) {
      cur.fail("expected '+' or '-' before the r5 term");
    }
    mpz_class q = cur.integer();
    if (negative) q = -q;
    if (!cur.eat('r') || !cur.eat('5')) cur.fail("expected 'r5'");
    if (!cur.eat(')')) cur.fail("expected ')'");
    mpz_class s = 1;
    if (cur.eat('/')) s = cur.integer();
    if (!cur.done()) cur.fail("trailing characters");
    if (s == 0) cur.fail("zero denominator");
    return Scalar(Rational(p, s), Rational(q, s));
  }
  const mpz_class p = cur.integer();
  mpz_class s = 1;
  if (cur.eat('/')) s = cur.integer();
  if (!cur.done()) cur.fail("trailing characters");
  if (s == 0) cur.fail("zero denominator");
  return Scalar(Rational(p, s));
}

double Scalar::to_decimal() const {
  return a_.get_d() + b_.get_d() * std::sqrt(5.0);
}

std::size_t Scalar::hash() const {
  return hash_mpq(a_) * 1000003ULL ^ hash_mpq(b_);
}

std::optional<Scalar> arith(const Scalar& x, const Scalar& y, ArithOp op) {
  switch (op) {
    case ArithOp::kAdd:
      return x + y;
    case ArithOp::kSub:
      return x - y;
    case ArithOp::kMul:
      return x * y;
    case ArithOp::kDiv:
      if (y.is_zero()) return std::nullopt;
      return x / y;
  }
  return std::nullopt;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

}  // namespace coxcone
