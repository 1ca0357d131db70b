#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include "powmat/errors.hpp"

namespace powmat {

/// Arbitrary-precision signed integer. Every integer value in the library
/// (set elements, exponents applied to them, matrix entries) lives here;
/// nothing is ever evaluated in machine precision.
using Int = boost::multiprecision::cpp_int;

inline Int ipow(const Int& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline std::string to_string(const Int& v) { return v.str(); }

/// Parses a decimal integer, throwing ParseError on anything else.
Int parse_int(std::string_view text);

/// Exact rational number, eagerly reduced to lowest terms with a positive
/// denominator. Doubles as the Eigen scalar for all dense matrices here.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : v_(v) {}                  // NOLINT: implicit by design
  Rational(long long v) : v_(v) {}            // NOLINT
  Rational(const Int& v) : v_(v) {}           // NOLINT
  Rational(const Int& num, const Int& den) {
    if (den.is_zero()) throw DivisionByZeroError();
    v_ = num;
    v_ /= boost::multiprecision::cpp_rational(den);
  }

  Int numerator() const { return boost::multiprecision::numerator(v_); }
  Int denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_integer() const { return boost::multiprecision::denominator(v_) == 1; }
  bool is_zero() const { return v_.is_zero(); }
  int sign() const { return v_.sign(); }

  /// The value as an Int; only valid when is_integer().
  Int to_integer() const {
    if (!is_integer()) throw Error("rational " + str() + " is not an integer");
    return numerator();
  }

  /// "p" when integral, "p/q" otherwise.
  std::string str() const {
    Int d = denominator();
    if (d == 1) return numerator().str();
    return numerator().str() + "/" + d.str();
  }

  /// Parses "p" or "p/q" decimal forms.
  static Rational parse(std::string_view text);

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.v_ + b.v_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.v_ - b.v_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.v_ * b.v_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.v_.is_zero()) throw DivisionByZeroError();
    return Rational(a.v_ / b.v_);
  }
  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.v_.is_zero()) throw DivisionByZeroError();
    v_ /= o.v_;
    return *this;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend Rational abs(const Rational& r) {
    return r.v_.sign() < 0 ? Rational(-r.v_) : r;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
  boost::multiprecision::cpp_rational v_;
};

inline std::string to_string(const Rational& v) { return v.str(); }

}  // namespace powmat

namespace Eigen {

template <>
struct NumTraits<powmat::Rational> : GenericNumTraits<powmat::Rational> {
  using Real = powmat::Rational;
  using NonInteger = powmat::Rational;
  using Nested = powmat::Rational;
  using Literal = long long;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60,
  };
  static inline Real epsilon() { return powmat::Rational(0); }
  static inline Real dummy_precision() { return powmat::Rational(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace powmat {

using Index = Eigen::Index;

/// Dense square matrix over exact rationals; the only matrix type the
/// library traffics in.
using ExactMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

}  // namespace powmat
