#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cubicstats {

// Exact rational arithmetic with int64 numerator/denominator. All values in
// this project are tiny (character values, inner products, multinomial
// weights), so no overflow handling beyond the normalizing gcd is needed.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  long long as_integer() const {
    if (den_ != 1) throw std::runtime_error("Rational: not an integer: " + str());
    return num_;
  }
  bool is_zero() const { return num_ == 0; }

  Rational operator-() const { return Rational(-num_, den_); }
  Rational operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Rational operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  Rational operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
  }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::runtime_error("Rational: division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  void normalize() {
    if (den_ == 0) throw std::runtime_error("Rational: zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
    if (num_ == 0) den_ = 1;
  }

  long long num_;
  long long den_;
};

}  // namespace cubicstats
