#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace orbifold {

// Exact rational arithmetic on 64-bit words with 128-bit intermediates.
// Always stored reduced with a positive denominator. Overflow of the reduced
// result throws; desk-scale orbifold invariants stay far below the limit.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(long long num, long long den);

  long long num() const { return num_; }
  long long den() const { return den_; }

  Rational operator-() const { return Rational(-num_, den_); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }
  bool is_integer() const { return den_ == 1; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  // "a/b", or just "a" when the denominator is 1.
  std::string str() const;
  // Accepts the same two shapes str() emits.
  static Rational parse(const std::string& text);

 private:
  static Rational from_i128(__int128 num, __int128 den);

  long long num_;
  long long den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace orbifold
