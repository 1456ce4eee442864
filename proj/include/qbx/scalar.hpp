#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "qbx/errors.hpp"

namespace qbx {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Ground field of a session: the exact rationals (default) or GF(p).
class Field {
 public:
  Field() = default;
  static Field rationals() { return Field(); }
  static Field prime(std::uint64_t p);

  bool is_prime() const { return p_ != 0; }
  std::uint64_t modulus() const { return p_; }
  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

  // "q" or "gf:<p>"; parse() accepts the same forms.
  std::string name() const;
  static Field parse(const std::string& text);

 private:
  std::uint64_t p_ = 0;  // 0 = rationals
};

// Exact field element.  Rational values are kept in lowest terms with a
// positive denominator (cpp_rational maintains that); prime-field values are
// reduced to [0, p).
class Scalar {
 public:
  Scalar() = default;  // rational 0

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar of(const Field& f, long long n);
  static Scalar rational(BigRat r);
  static Scalar mod_p(std::uint64_t v, std::uint64_t p);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_negative() const;  // rationals only; false over GF(p)

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // "num", "num/den", or "k mod p".
  std::string text() const;
  static Scalar parse(const std::string& text, const Field& f);

  const BigRat& rat() const { return rat_; }
  std::uint64_t residue() const { return val_; }

 private:
  Field field_;
  BigRat rat_;          // rationals
  std::uint64_t val_ = 0;  // GF(p)

  void check_same_field(const Scalar& o) const;
};

}  // namespace qbx
