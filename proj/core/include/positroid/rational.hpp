#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>

#include "positroid/errors.hpp"

namespace positroid {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Exact rational number. Invariant: always reduced, denominator > 0
// (maintained by the backing normalized-rational type).
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}               // NOLINT: implicit by design
  Rational(std::int64_t n) : v_(n) {}      // NOLINT
  Rational(const BigInt& n) : v_(n) {}     // NOLINT
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error("Rational: zero denominator");
    v_ = BigRat(num, den);
  }
  explicit Rational(const BigRat& v) : v_(v) {}

  static Rational from_string(const std::string& s);

  BigInt num() const { return boost::multiprecision::numerator(v_); }
  BigInt den() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_ == 0; }
  int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

  Rational operator-() const { return Rational(BigRat(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const { return v_ < 0 ? -*this : *this; }
  Rational inverse() const {
    if (is_zero()) throw Error("Rational: inverse of zero");
    return Rational(BigRat(1) / v_);
  }

  double to_double() const { return v_.convert_to<double>(); }
  template <typename Real>
  Real to() const {
    return static_cast<Real>(num().convert_to<Real>() / den().convert_to<Real>());
  }

  // "p" for integers, "p/q" otherwise; the form parsed by from_string.
  std::string to_string() const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  BigRat v_;
};

inline std::string Rational::to_string() const {
  std::string s = num().str();
  if (den() != 1) s += "/" + den().str();
  return s;
}

inline Rational Rational::from_string(const std::string& s) {
  auto bad = [&] { throw Error("Rational: cannot parse '" + s + "'"); };
  if (s.empty()) bad();
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) bad();
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    bad();
  }
  return Rational();  // unreachable
}

}  // namespace positroid

template <>
struct std::hash<positroid::Rational> {
  std::size_t operator()(const positroid::Rational& r) const {
    return std::hash<std::string>()(r.to_string());
  }
};
