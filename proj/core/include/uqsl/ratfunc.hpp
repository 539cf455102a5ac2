#pragma once

#include <string>

#include "uqsl/laurent.hpp"
#include "uqsl/poly.hpp"

namespace uqsl {

/// Rational function in q over Z, kept in the canonical reduced form:
/// gcd(num, den) = 1 over Z[q] (including integer content) and den has a
/// positive leading coefficient. Equality is therefore structural.
class RatFuncQ {
 public:
  RatFuncQ() = default;  // zero
  RatFuncQ(long c) : num_(c), den_(1) {}
  RatFuncQ(IntPoly num, IntPoly den);
  explicit RatFuncQ(const LaurentInt& p);

  static RatFuncQ q_power(long e);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == IntPoly(1) && den_ == IntPoly(1); }
  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }

  RatFuncQ operator-() const;
  RatFuncQ operator+(const RatFuncQ& o) const;
  RatFuncQ operator-(const RatFuncQ& o) const;
  RatFuncQ operator*(const RatFuncQ& o) const;
  RatFuncQ& operator+=(const RatFuncQ& o) { return *this = *this + o; }
  RatFuncQ& operator-=(const RatFuncQ& o) { return *this = *this - o; }
  RatFuncQ& operator*=(const RatFuncQ& o) { return *this = *this * o; }
  bool operator==(const RatFuncQ& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RatFuncQ& o) const { return !(*this == o); }

  RatFuncQ inv() const;
  RatFuncQ operator/(const RatFuncQ& o) const { return *this * o.inv(); }
  RatFuncQ pow(long k) const;

  /// Substitution q -> q^{-1}.
  RatFuncQ mirror() const;

  /// True iff the value is an integer Laurent polynomial.
  bool is_laurent() const;
  /// Conversion to LaurentInt; throws scalar_error if not Laurent.
  LaurentInt to_laurent() const;

  std::string str() const;

 private:
  IntPoly num_;        // zero polynomial for the value 0
  IntPoly den_ = IntPoly(1);
  void reduce();
};

}  // namespace uqsl
