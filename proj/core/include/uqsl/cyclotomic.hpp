#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "uqsl/poly.hpp"

namespace uqsl {

/// Element of the cyclotomic field Q(zeta_N), N even > 2, with q the class
/// of x in Q[x]/Phi_N(x) a fixed primitive N-th root of unity. Coordinates
/// are rationals on the power basis q^0 .. q^{phi(N)-1}; q^N = 1 and
/// q^{N/2} = -1 hold exactly.
///
/// Order 0 encodes a plain rational constant that coerces to any order on
/// first contact, so generic matrix code can use S(0)/S(1).
class CycloScalar {
 public:
  CycloScalar() : order_(0) {}
  CycloScalar(long c) : order_(0) { if (c != 0) c_.assign(1, mpq_class(c)); }
  explicit CycloScalar(const mpq_class& c) : order_(0) {
    if (c != 0) c_.assign(1, c);
  }
  CycloScalar(long order, long c);
  static CycloScalar from_coords(long order, std::vector<mpq_class> coords);
  static CycloScalar q_power(long order, long e);

  long order() const { return order_; }
  /// Coordinates on the power basis (length phi(N)); requires order > 0.
  std::vector<mpq_class> coords() const;

  bool is_zero() const;
  bool is_one() const;

  CycloScalar operator-() const;
  CycloScalar operator+(const CycloScalar& o) const;
  CycloScalar operator-(const CycloScalar& o) const;
  CycloScalar operator*(const CycloScalar& o) const;
  CycloScalar& operator+=(const CycloScalar& o) { return *this = *this + o; }
  CycloScalar& operator-=(const CycloScalar& o) { return *this = *this - o; }
  CycloScalar& operator*=(const CycloScalar& o) { return *this = *this * o; }
  bool operator==(const CycloScalar& o) const;
  bool operator!=(const CycloScalar& o) const { return !(*this == o); }

  CycloScalar inv() const;
  CycloScalar operator/(const CycloScalar& o) const { return *this * o.inv(); }

  std::string str() const;

  /// The N-th cyclotomic polynomial (cached across threads).
  static const IntPoly& cyclotomic_poly(long N);
  static long phi_degree(long N);

 private:
  long order_;                // 0: rational constant (c_ empty or size 1)
  std::vector<mpq_class> c_;
  CycloScalar promoted(long N) const;
};

}  // namespace uqsl
