#include "uqsl/ratfunc.hpp"

#include <sstream>

namespace uqsl {

void RatFuncQ::reduce() {
  if (den_.is_zero()) throw scalar_error("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = IntPoly(1);
    return;
  }
  IntPoly g = IntPoly::gcd(num_, den_);
  num_ = num_.divide_exact(g);
  den_ = den_.divide_exact(g);
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RatFuncQ::RatFuncQ(IntPoly num, IntPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  reduce();
}

RatFuncQ::RatFuncQ(const LaurentInt& p) {
  if (p.is_zero()) return;
  long shift = std::min(0L, p.min_exp());
  std::vector<mpz_class> c((size_t)(p.max_exp() - shift) + 1, 0);
  for (auto& [e, co] : p.terms()) c[(size_t)(e - shift)] = co;
  num_ = IntPoly(std::move(c));
  den_ = IntPoly::x_power((size_t)(-shift));
  reduce();
}

RatFuncQ RatFuncQ::q_power(long e) {
  RatFuncQ r;
  if (e >= 0) {
    r.num_ = IntPoly::x_power((size_t)e);
    r.den_ = IntPoly(1);
  } else {
    r.num_ = IntPoly(1);
    r.den_ = IntPoly::x_power((size_t)(-e));
  }
  return r;
}

RatFuncQ RatFuncQ::operator-() const {
  RatFuncQ r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFuncQ RatFuncQ::operator+(const RatFuncQ& o) const {
  return RatFuncQ(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFuncQ RatFuncQ::operator-(const RatFuncQ& o) const { return *this + (-o); }

RatFuncQ RatFuncQ::operator*(const RatFuncQ& o) const {
  return RatFuncQ(num_ * o.num_, den_ * o.den_);
}

RatFuncQ RatFuncQ::inv() const {
  if (is_zero()) throw scalar_error("inverse of zero rational function");
  return RatFuncQ(den_, num_);
}

RatFuncQ RatFuncQ::pow(long k) const {
  RatFuncQ base = k >= 0 ? *this : inv();
  unsigned long e = (unsigned long)(k >= 0 ? k : -k);
  RatFuncQ r(1);
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

RatFuncQ RatFuncQ::mirror() const {
  if (is_zero()) return {};
  auto rev = [](const IntPoly& p) {
    std::vector<mpz_class> c(p.coeffs().rbegin(), p.coeffs().rend());
    return IntPoly(std::move(c));
  };
  long dn = num_.degree(), dd = den_.degree();
  IntPoly n = rev(num_), d = rev(den_);
  if (dd >= dn)
    n = n * IntPoly::x_power((size_t)(dd - dn));
  else
    d = d * IntPoly::x_power((size_t)(dn - dd));
  return RatFuncQ(std::move(n), std::move(d));
}

bool RatFuncQ::is_laurent() const {
  if (is_zero()) return true;
  if (den_.degree() < 0) return false;
  // reduced form: Laurent iff den = c * q^k with every num coeff divisible by c
  for (long i = 0; i < den_.degree(); ++i)
    if (den_.coeff((size_t)i) != 0) return false;
  const mpz_class& c = den_.leading();
  for (auto& a : num_.coeffs())
    if (a % c != 0) return false;
  return true;
}

LaurentInt RatFuncQ::to_laurent() const {
  if (!is_laurent()) throw scalar_error("value is not an integer Laurent polynomial");
  LaurentInt r;
  if (is_zero()) return r;
  long k = den_.degree();
  const mpz_class& c = den_.leading();
  for (size_t i = 0; i < num_.coeffs().size(); ++i) {
    mpz_class a = num_.coeffs()[i] / c;
    if (a != 0) r += LaurentInt::monomial(a, (long)i - k);
  }
  return r;
}

std::string RatFuncQ::str() const {
  if (is_laurent()) return to_laurent().str();
  std::ostringstream os;
  os << "(" << num_.str() << ")/(" << den_.str() << ")";
  return os.str();
}

}  // namespace uqsl
