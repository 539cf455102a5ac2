#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "uqsl/laurent.hpp"

namespace uqsl {

/// Dense univariate polynomial over Z, ascending coefficients, no trailing
/// zeros. Workhorse behind RatFuncQ and the cyclotomic backend.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(long c) { if (c != 0) c_.push_back(c); }
  explicit IntPoly(const mpz_class& c) { if (c != 0) c_.push_back(c); }
  explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPoly x_power(size_t e);

  bool is_zero() const { return c_.empty(); }
  long degree() const { return (long)c_.size() - 1; }  // -1 for zero
  const std::vector<mpz_class>& coeffs() const { return c_; }
  mpz_class coeff(size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }
  const mpz_class& leading() const;

  IntPoly operator-() const;
  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return !(*this == o); }

  /// Exact division; throws scalar_error if not divisible over Z.
  IntPoly divide_exact(const IntPoly& d) const;

  /// gcd over Z[x], normalized primitive with positive leading coefficient.
  static IntPoly gcd(IntPoly a, IntPoly b);

  mpz_class content() const;   // gcd of coefficients (>= 0)
  IntPoly primitive() const;   // *this / content, zero stays zero

  std::string str(const std::string& var = "q") const;

 private:
  std::vector<mpz_class> c_;
  void trim();
};

}  // namespace uqsl
