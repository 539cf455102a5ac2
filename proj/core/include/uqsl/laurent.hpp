#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace uqsl {

/// Error for any violation of the exact-arithmetic contracts (overflowing
/// exponents, division failures, malformed input strings, ...).
struct scalar_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Integer Laurent polynomial in q with arbitrary-precision coefficients.
///
/// Terms are kept sorted by exponent with no stored zero coefficients, so
/// equality is structural. Exponents are machine integers; overflow during
/// multiplication is a hard error.
class LaurentInt {
 public:
  using Term = std::pair<long, mpz_class>;  // (exponent, coefficient)

  LaurentInt() = default;
  LaurentInt(long c) { if (c != 0) terms_.push_back({0, mpz_class(c)}); }
  explicit LaurentInt(const mpz_class& c) {
    if (c != 0) terms_.push_back({0, c});
  }

  static LaurentInt monomial(const mpz_class& c, long e) {
    LaurentInt p;
    if (c != 0) p.terms_.push_back({e, c});
    return p;
  }
  static LaurentInt q_power(long e) { return monomial(1, e); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
  }

  /// Terms in ascending exponent order.
  const std::vector<Term>& terms() const { return terms_; }

  mpz_class coeff(long e) const;
  long min_exp() const;  // requires nonzero
  long max_exp() const;  // requires nonzero

  LaurentInt operator-() const;
  LaurentInt operator+(const LaurentInt& o) const;
  LaurentInt operator-(const LaurentInt& o) const;
  LaurentInt operator*(const LaurentInt& o) const;
  LaurentInt& operator+=(const LaurentInt& o) { return *this = *this + o; }
  LaurentInt& operator-=(const LaurentInt& o) { return *this = *this - o; }
  LaurentInt& operator*=(const LaurentInt& o) { return *this = *this * o; }
  bool operator==(const LaurentInt& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentInt& o) const { return !(*this == o); }

  LaurentInt pow(unsigned long k) const;

  /// Substitution q -> q^{-1}.
  LaurentInt mirror() const;

  /// Exact division; throws scalar_error if the quotient is not an integer
  /// Laurent polynomial.
  LaurentInt divide_exact(const LaurentInt& d) const;

  /// Renders e.g. "2*q^2+4*q+3-1*q^-1" (descending exponents, explicit
  /// coefficients). Zero renders as "0".
  std::string str() const;
  static LaurentInt parse(const std::string& s);

 private:
  std::vector<Term> terms_;
  void normalize();
  friend class RatFuncQ;
};

inline LaurentInt operator*(const mpz_class& c, const LaurentInt& p) {
  return LaurentInt::monomial(c, 0) * p;
}

}  // namespace uqsl
