#pragma once

#include "uqsl/cyclotomic.hpp"
#include "uqsl/qcomb.hpp"
#include "uqsl/ratfunc.hpp"

namespace uqsl {

// Rank-2 scalar backends. Both expose the same interface: an exact scalar
// field, a weight type for the Lambda-grading, kappa eigenvalues, the
// gamma-pairing q^{<i, U j>} for the exponent matrix U = [[n,1],[0,n]] of
// u_q(sl_{2,I}), and the sign of the pivotal grouplike nu = k1^n k2^n.

/// Weight coordinate of the form e*n + c with generic even n.
struct SymWeight {
  long e1 = 0, c1 = 0, e2 = 0, c2 = 0;
  bool operator==(const SymWeight&) const = default;
  bool operator<(const SymWeight& o) const {
    return std::tie(e1, c1, e2, c2) < std::tie(o.e1, o.c1, o.e2, o.c2);
  }
  SymWeight operator+(const SymWeight& o) const {
    return {e1 + o.e1, c1 + o.c1, e2 + o.e2, c2 + o.c2};
  }
  SymWeight operator-() const { return {-e1, -c1, -e2, -c2}; }
};

/// Generic-q backend: scalars are rational functions of q, with all weight
/// bookkeeping reduced through q^n = -1 under the standing assumption that
/// n is even.
struct SymbolicBackend {
  using Scalar = RatFuncQ;
  using Weight = SymWeight;

  Scalar from_long(long v) const { return RatFuncQ(v); }
  Scalar q_pow(long k) const { return RatFuncQ::q_power(k); }

  /// q^{w_i} as a signed Laurent monomial.
  Scalar kappa_eigen(const Weight& w, int i) const {
    long e = i == 1 ? w.e1 : w.e2;
    long c = i == 1 ? w.c1 : w.c2;
    Scalar s = RatFuncQ::q_power(c);
    return (e % 2 != 0) ? -s : s;
  }

  /// q^{n i1 j1 + i1 j2 + n i2 j2} for symbolic weights, using q^n = -1 and
  /// q^{n^2} = 1 (n even).
  Scalar gamma_pair(const Weight& i, const Weight& j) const {
    long sign_exp = i.c1 * j.c1 + i.e1 * j.c2 + i.c1 * j.e2 + i.c2 * j.c2;
    Scalar s = RatFuncQ::q_power(i.c1 * j.c2);
    return (sign_exp % 2 != 0) ? -s : s;
  }

  int nu_sign(const Weight& w) const {
    return ((w.c1 + w.c2) % 2 + 2) % 2 == 0 ? +1 : -1;
  }

  Weight add(const Weight& a, const Weight& b) const { return a + b; }
  Weight neg(const Weight& a) const { return -a; }
  Weight shift(Weight w, int coord, long delta) const {
    (coord == 1 ? w.c1 : w.c2) += delta;
    return w;
  }
  static Weight alpha(int i) {
    return i == 1 ? SymWeight{0, 1, 0, 0} : SymWeight{0, 0, 0, 1};
  }

  bool operator==(const SymbolicBackend&) const = default;
};

/// Weight in (Z/N)^2.
struct CycloWeight {
  long i1 = 0, i2 = 0;
  bool operator==(const CycloWeight&) const = default;
  bool operator<(const CycloWeight& o) const {
    return std::tie(i1, i2) < std::tie(o.i1, o.i2);
  }
};

/// Root-of-unity backend: scalars live in Q(zeta_N) with q a primitive N-th
/// root, N = 2n even.
struct CycloBackend {
  long N = 0;
  long n = 0;

  CycloBackend() = default;
  explicit CycloBackend(long order) : N(order), n(order / 2) {}

  using Scalar = CycloScalar;
  using Weight = CycloWeight;

  Scalar from_long(long v) const { return CycloScalar(N, v); }
  Scalar q_pow(long k) const { return CycloScalar::q_power(N, k); }

  Scalar kappa_eigen(const Weight& w, int i) const {
    return q_pow(i == 1 ? w.i1 : w.i2);
  }

  Scalar gamma_pair(const Weight& i, const Weight& j) const {
    return q_pow(n * i.i1 * j.i1 + i.i1 * j.i2 + n * i.i2 * j.i2);
  }

  int nu_sign(const Weight& w) const {
    return ((w.i1 + w.i2) % 2 + 2) % 2 == 0 ? +1 : -1;
  }

  long red(long v) const {
    long r = v % N;
    return r < 0 ? r + N : r;
  }
  Weight add(const Weight& a, const Weight& b) const {
    return {red(a.i1 + b.i1), red(a.i2 + b.i2)};
  }
  Weight neg(const Weight& a) const { return {red(-a.i1), red(-a.i2)}; }
  Weight shift(Weight w, int coord, long delta) const {
    (coord == 1 ? w.i1 : w.i2) = red((coord == 1 ? w.i1 : w.i2) + delta);
    return w;
  }

  bool operator==(const CycloBackend&) const = default;
};

}  // namespace uqsl
