#include "uqsl/qcomb.hpp"

namespace uqsl {

LaurentInt gauss_int(long k) {
  if (k < 0) throw scalar_error("gauss_int of negative argument");
  LaurentInt r;
  for (long i = 0; i < k; ++i) r += LaurentInt::q_power(i);
  return r;
}

LaurentInt gauss_factorial(long k) {
  if (k < 0) throw scalar_error("gauss_factorial of negative argument");
  LaurentInt r(1);
  for (long i = 1; i <= k; ++i) r *= gauss_int(i);
  return r;
}

LaurentInt gauss_binom(long k, long i) {
  if (i < 0 || k < 0 || i > k) throw scalar_error("gauss_binom out of domain");
  return gauss_factorial(k).divide_exact(gauss_factorial(i) *
                                         gauss_factorial(k - i));
}

CycloScalar specialize(const LaurentInt& p, long N) {
  if (N <= 2 || N % 2 != 0) throw scalar_error("specialization order must be even > 2");
  CycloScalar r(N, 0);
  for (auto& [e, c] : p.terms())
    r += CycloScalar::from_coords(N, {mpq_class(c)}) * CycloScalar::q_power(N, e);
  return r;
}

CycloScalar specialize(const RatFuncQ& p, long N) {
  if (N <= 2 || N % 2 != 0) throw scalar_error("specialization order must be even > 2");
  auto eval = [N](const IntPoly& f) {
    CycloScalar r(N, 0);
    CycloScalar qe(N, 1);
    const CycloScalar q = CycloScalar::q_power(N, 1);
    for (size_t i = 0; i < f.coeffs().size(); ++i) {
      r += CycloScalar::from_coords(N, {mpq_class(f.coeffs()[i])}) * qe;
      qe = qe * q;
    }
    return r;
  };
  CycloScalar den = eval(p.den());
  if (den.is_zero())
    throw scalar_error("denominator vanishes at the chosen root of unity");
  return eval(p.num()) / den;
}

}  // namespace uqsl
