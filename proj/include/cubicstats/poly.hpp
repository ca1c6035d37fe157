#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubicstats/bigint.hpp"
#include "cubicstats/rational.hpp"

namespace cubicstats {

// Dense univariate polynomial over an exact coefficient ring (int64 or
// Rational). The indeterminate is q throughout.
template <typename T>
class Poly {
 public:
  Poly() = default;
  Poly(T constant) : c_{constant} { trim(); }
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly monomial(int deg, T coeff = T(1)) {
    std::vector<T> c(deg + 1, T(0));
    c[deg] = coeff;
    return Poly(std::move(c));
  }
  static Poly var() { return monomial(1); }

  int degree() const { return (int)c_.size() - 1; }  // -1 for the zero poly
  bool is_zero() const { return c_.empty(); }
  T coeff(int i) const { return i >= 0 && i < (int)c_.size() ? c_[i] : T(0); }
  const std::vector<T>& coeffs() const { return c_; }
  T leading() const {
    if (c_.empty()) throw std::runtime_error("Poly: zero polynomial has no leading coeff");
    return c_.back();
  }

  Poly operator+(const Poly& o) const {
    std::vector<T> r(std::max(c_.size(), o.c_.size()), T(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = r[i] + c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
    return Poly(std::move(r));
  }
  Poly operator-(const Poly& o) const {
    std::vector<T> r(std::max(c_.size(), o.c_.size()), T(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = r[i] + c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] - o.c_[i];
    return Poly(std::move(r));
  }
  Poly operator-() const {
    std::vector<T> r(c_);
    for (auto& x : r) x = T(0) - x;
    return Poly(std::move(r));
  }
  Poly operator*(const Poly& o) const {
    if (c_.empty() || o.c_.empty()) return Poly();
    std::vector<T> r(c_.size() + o.c_.size() - 1, T(0));
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    return Poly(std::move(r));
  }
  Poly operator*(T s) const {
    std::vector<T> r(c_);
    for (auto& x : r) x = x * s;
    return Poly(std::move(r));
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return c_ != o.c_; }
  // lexicographic by degree then coefficients, for use as a map key
  bool operator<(const Poly& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    for (size_t i = c_.size(); i-- > 0;)
      if (!(c_[i] == o.c_[i])) return c_[i] < o.c_[i];
    return false;
  }

  // Exact division; throws when the remainder is nonzero.
  Poly div_exact(const Poly& d) const {
    if (d.is_zero()) throw std::runtime_error("Poly: division by zero polynomial");
    std::vector<T> rem(c_);
    if ((int)rem.size() - 1 < d.degree()) {
      if (is_zero()) return Poly();
      throw std::runtime_error("Poly: inexact division (degree)");
    }
    std::vector<T> quot(rem.size() - d.c_.size() + 1, T(0));
    for (int i = (int)quot.size() - 1; i >= 0; --i) {
      T q = divide_coeff(rem[i + d.degree()], d.leading());
      quot[i] = q;
      for (int j = 0; j <= d.degree(); ++j) rem[i + j] = rem[i + j] - q * d.c_[j];
    }
    for (const T& x : rem)
      if (!(x == T(0))) throw std::runtime_error("Poly: inexact division (remainder)");
    return Poly(std::move(quot));
  }

  Poly pow(int e) const {
    Poly r{T(1)};
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  T eval(T x) const {
    T v = T(0);
    for (size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
    return v;
  }

  std::string str(const std::string& var = "q") const {
    if (c_.empty()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      T c = c_[i];
      if (c == T(0)) continue;
      std::string cs = coeff_str(c);
      bool negative = !cs.empty() && cs[0] == '-';
      if (!s.empty()) {
        s += negative ? " - " : " + ";
        if (negative) cs = cs.substr(1);
      }
      if (i == 0) { s += cs; continue; }
      if (cs == "1") cs.clear();
      s += cs + var;
      if (i > 1) s += "^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
  }

 private:
  static long long divide_coeff(long long a, long long b) {
    if (b == 0 || a % b != 0) throw std::runtime_error("Poly: inexact coefficient division");
    return a / b;
  }
  static Rational divide_coeff(const Rational& a, const Rational& b) { return a / b; }
  static std::string coeff_str(long long c) { return std::to_string(c); }
  static std::string coeff_str(const Rational& c) { return c.str(); }

  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }

  std::vector<T> c_;
};

using QPoly = Poly<long long>;
using RPoly = Poly<Rational>;

inline RPoly to_rational(const QPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (long long x : p.coeffs()) c.emplace_back(x);
  return RPoly(std::move(c));
}

// Throws when any coefficient is non-integral.
inline QPoly to_integer(const RPoly& p) {
  std::vector<long long> c;
  c.reserve(p.coeffs().size());
  for (const Rational& x : p.coeffs()) c.push_back(x.as_integer());
  return QPoly(std::move(c));
}

inline BigInt eval_big(const QPoly& p, long long q) {
  BigInt v(0);
  for (size_t i = p.coeffs().size(); i-- > 0;) v = v * q + BigInt(p.coeffs()[i]);
  return v;
}

}  // namespace cubicstats
