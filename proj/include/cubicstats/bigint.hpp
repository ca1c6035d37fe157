#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubicstats {

// Minimal signed big integer: base-1e9 limbs, little-endian. Covers the few
// places where counts outgrow int64 (group-order prefactors at large q).
class BigInt {
 public:
  BigInt() : neg_(false) {}
  BigInt(long long v) : neg_(v < 0) {
    unsigned long long m = neg_ ? -(unsigned long long)v : (unsigned long long)v;
    while (m) { limbs_.push_back(uint32_t(m % kBase)); m /= kBase; }
  }

  bool is_zero() const { return limbs_.empty(); }
  bool is_negative() const { return neg_; }

  BigInt operator+(const BigInt& o) const {
    if (neg_ == o.neg_) { BigInt r = add_mag(*this, o); r.neg_ = neg_; r.fix(); return r; }
    int c = cmp_mag(*this, o);
    if (c == 0) return BigInt();
    BigInt r = c > 0 ? sub_mag(*this, o) : sub_mag(o, *this);
    r.neg_ = c > 0 ? neg_ : o.neg_;
    r.fix();
    return r;
  }
  BigInt operator-(const BigInt& o) const {
    BigInt t = o;
    t.neg_ = !t.neg_;
    return *this + t;
  }

  BigInt operator*(long long s) const {
    if (s == 0 || is_zero()) return BigInt();
    unsigned long long m = s < 0 ? -(unsigned long long)s : (unsigned long long)s;
    // m = hi*kBase + lo, each factor small enough for 64-bit partial products
    BigInt r = mul_small_mag(*this, uint32_t(m % kBase));
    if (m / kBase) r = add_mag(r, shl_limbs(mul_small_mag(*this, uint32_t(m / kBase)), 1));
    r.neg_ = neg_ != (s < 0);
    r.fix();
    return r;
  }

  // Exact division by a positive int64 < 1e18; throws when a remainder is left.
  BigInt div_exact(long long d) const {
    if (d <= 0) throw std::runtime_error("BigInt: divisor must be positive");
    BigInt r;
    r.neg_ = neg_;
    r.limbs_.assign(limbs_.size(), 0);
    unsigned long long rem = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
      unsigned long long cur = rem * kBase + limbs_[i];
      r.limbs_[i] = uint32_t(cur / (unsigned long long)d);
      rem = cur % (unsigned long long)d;
    }
    if (rem != 0) throw std::runtime_error("BigInt: inexact division");
    r.fix();
    return r;
  }

  bool operator==(const BigInt& o) const { return neg_ == o.neg_ && limbs_ == o.limbs_; }
  bool operator!=(const BigInt& o) const { return !(*this == o); }
  bool operator<(const BigInt& o) const {
    if (neg_ != o.neg_) return neg_;
    int c = cmp_mag(*this, o);
    return neg_ ? c > 0 : c < 0;
  }

  long long to_ll() const {
    long long v = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
      if (v > ((1LL << 62) / (long long)kBase)) throw std::runtime_error("BigInt: does not fit in int64");
      v = v * (long long)kBase + limbs_[i];
    }
    return neg_ ? -v : v;
  }

  std::string str() const {
    if (limbs_.empty()) return "0";
    std::string s = neg_ ? "-" : "";
    s += std::to_string(limbs_.back());
    for (size_t i = limbs_.size() - 1; i-- > 0;) {
      std::string part = std::to_string(limbs_[i]);
      s += std::string(9 - part.size(), '0') + part;
    }
    return s;
  }

 private:
  static constexpr unsigned long long kBase = 1000000000ULL;

  static int cmp_mag(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size())
      return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (size_t i = a.limbs_.size(); i-- > 0;)
      if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    return 0;
  }
  static BigInt add_mag(const BigInt& a, const BigInt& b) {
    BigInt r;
    uint64_t carry = 0;
    size_t n = std::max(a.limbs_.size(), b.limbs_.size());
    r.limbs_.reserve(n + 1);
    for (size_t i = 0; i < n || carry; ++i) {
      uint64_t s = carry;
      if (i < a.limbs_.size()) s += a.limbs_[i];
      if (i < b.limbs_.size()) s += b.limbs_[i];
      r.limbs_.push_back(uint32_t(s % kBase));
      carry = s / kBase;
    }
    return r;
  }
  // requires |a| >= |b|
  static BigInt sub_mag(const BigInt& a, const BigInt& b) {
    BigInt r;
    long long borrow = 0;
    r.limbs_.reserve(a.limbs_.size());
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
      long long s = (long long)a.limbs_[i] - borrow - (i < b.limbs_.size() ? (long long)b.limbs_[i] : 0);
      if (s < 0) { s += (long long)kBase; borrow = 1; } else borrow = 0;
      r.limbs_.push_back(uint32_t(s));
    }
    return r;
  }
  static BigInt mul_small_mag(const BigInt& a, uint32_t s) {
    BigInt r;
    if (s == 0) return r;
    uint64_t carry = 0;
    r.limbs_.reserve(a.limbs_.size() + 1);
    for (uint32_t limb : a.limbs_) {
      uint64_t p = (uint64_t)limb * s + carry;
      r.limbs_.push_back(uint32_t(p % kBase));
      carry = p / kBase;
    }
    while (carry) { r.limbs_.push_back(uint32_t(carry % kBase)); carry /= kBase; }
    return r;
  }
  static BigInt shl_limbs(const BigInt& a, size_t k) {
    if (a.limbs_.empty()) return a;
    BigInt r;
    r.limbs_.assign(k, 0);
    r.limbs_.insert(r.limbs_.end(), a.limbs_.begin(), a.limbs_.end());
    return r;
  }
  void fix() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) neg_ = false;
  }

  bool neg_;
  std::vector<uint32_t> limbs_;
};

}  // namespace cubicstats
