#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace perisplit {

/// Arbitrary precision rational, always kept in lowest terms.
class Rat {
 public:
  Rat() = default;
  Rat(int v) : q_(v) {}
  Rat(long v) : q_(v) {}
  Rat(long num, long den) {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  explicit Rat(const mpz_class& z) : q_(z) {}
  explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  static Rat parse(std::string_view s) {
    std::string t(s);
    mpq_class q;
    if (t.empty() || q.set_str(t, 10) != 0) throw std::invalid_argument("Rat: cannot parse '" + t + "'");
    if (q.get_den() == 0) throw std::domain_error("Rat: zero denominator");
    q.canonicalize();
    return Rat(q);
  }

  const mpq_class& raw() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  std::string to_string() const { return q_.get_str(); }

  Rat inverse() const {
    if (is_zero()) throw std::domain_error("Rat: inverse of zero");
    return Rat(mpq_class(1) / q_);
  }

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  Rat operator-() const { return Rat(mpq_class(-q_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

 private:
  mpq_class q_;
};

inline Rat pow(Rat base, unsigned e) {
  Rat out(1);
  while (e) {
    if (e & 1u) out *= base;
    base *= base;
    e >>= 1u;
  }
  return out;
}

/// value + slope*eps with eps^2 = 0.
class DualRat {
 public:
  DualRat() = default;
  DualRat(int v) : value_(v) {}
  DualRat(long v) : value_(v) {}
  DualRat(Rat v) : value_(std::move(v)) {}
  DualRat(Rat v, Rat s) : value_(std::move(v)), slope_(std::move(s)) {}

  static DualRat eps() { return DualRat(Rat(0), Rat(1)); }

  const Rat& value() const { return value_; }
  const Rat& slope() const { return slope_; }
  bool is_zero() const { return value_.is_zero() && slope_.is_zero(); }
  bool is_invertible() const { return !value_.is_zero(); }

  DualRat inverse() const {
    if (value_.is_zero()) throw std::domain_error("DualRat: inverse needs a nonzero value part");
    Rat iv = value_.inverse();
    return DualRat(iv, -slope_ * iv * iv);
  }

  DualRat& operator+=(const DualRat& o) { value_ += o.value_; slope_ += o.slope_; return *this; }
  DualRat& operator-=(const DualRat& o) { value_ -= o.value_; slope_ -= o.slope_; return *this; }
  DualRat& operator*=(const DualRat& o) {
    slope_ = value_ * o.slope_ + slope_ * o.value_;
    value_ *= o.value_;
    return *this;
  }
  DualRat& operator/=(const DualRat& o) { return *this *= o.inverse(); }

  friend DualRat operator+(DualRat a, const DualRat& b) { return a += b; }
  friend DualRat operator-(DualRat a, const DualRat& b) { return a -= b; }
  friend DualRat operator*(DualRat a, const DualRat& b) { return a *= b; }
  friend DualRat operator/(DualRat a, const DualRat& b) { return a /= b; }
  DualRat operator-() const { return DualRat(-value_, -slope_); }

  friend bool operator==(const DualRat& a, const DualRat& b) {
    return a.value_ == b.value_ && a.slope_ == b.slope_;
  }
  friend bool operator!=(const DualRat& a, const DualRat& b) { return !(a == b); }

  std::string to_string() const {
    if (slope_.is_zero()) return value_.to_string();
    std::string s = value_.is_zero() ? "" : value_.to_string();
    if (slope_.sign() < 0) {
      s += s.empty() ? "-" : " - ";
    } else if (!s.empty()) {
      s += " + ";
    }
    Rat a = slope_.sign() < 0 ? -slope_ : slope_;
    if (!a.is_one()) s += a.to_string() + "*";
    return s + "eps";
  }

  friend std::ostream& operator<<(std::ostream& os, const DualRat& d) { return os << d.to_string(); }

 private:
  Rat value_;
  Rat slope_;
};

}  // namespace perisplit

template <>
struct std::hash<perisplit::Rat> {
  std::size_t operator()(const perisplit::Rat& r) const {
    return std::hash<std::string>()(r.to_string());
  }
};
