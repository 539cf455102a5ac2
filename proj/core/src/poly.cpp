#include "uqsl/poly.hpp"

#include <sstream>

namespace uqsl {

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::x_power(size_t e) {
  std::vector<mpz_class> c(e + 1, 0);
  c[e] = 1;
  return IntPoly(std::move(c));
}

const mpz_class& IntPoly::leading() const {
  if (c_.empty()) throw scalar_error("leading coefficient of zero polynomial");
  return c_.back();
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<mpz_class> c(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (c_.empty() || o.c_.empty()) return {};
  std::vector<mpz_class> c(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return IntPoly(std::move(c));
}

IntPoly IntPoly::divide_exact(const IntPoly& d) const {
  if (d.is_zero()) throw scalar_error("polynomial division by zero");
  if (is_zero()) return {};
  if (degree() < d.degree()) throw scalar_error("inexact polynomial division");
  std::vector<mpz_class> rem = c_, quo(degree() - d.degree() + 1, 0);
  for (long i = degree(); i >= d.degree(); --i) {
    mpz_class top = rem[i];
    if (top == 0) continue;
    mpz_class qc, qr;
    mpz_fdiv_qr(qc.get_mpz_t(), qr.get_mpz_t(), top.get_mpz_t(),
                d.leading().get_mpz_t());
    if (qr != 0) throw scalar_error("inexact polynomial division");
    quo[i - d.degree()] = qc;
    for (long j = 0; j <= d.degree(); ++j) rem[i - d.degree() + j] -= qc * d.c_[j];
  }
  for (auto& x : rem)
    if (x != 0) throw scalar_error("inexact polynomial division");
  return IntPoly(std::move(quo));
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (auto& x : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

IntPoly IntPoly::primitive() const {
  if (is_zero()) return {};
  mpz_class g = content();
  IntPoly r = *this;
  for (auto& x : r.c_) x /= g;
  return r;
}

// Primitive Euclidean algorithm with pseudo-remainders.
IntPoly IntPoly::gcd(IntPoly a, IntPoly b) {
  mpz_class ca = a.content(), cb = b.content(), cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  a = a.is_zero() ? a : a.primitive();
  b = b.is_zero() ? b : b.primitive();
  while (!b.is_zero()) {
    if (a.degree() < b.degree()) std::swap(a, b);
    if (b.is_zero()) break;
    // pseudo-remainder of a by b
    long k = a.degree() - b.degree() + 1;
    mpz_class lead_pow;
    mpz_pow_ui(lead_pow.get_mpz_t(), b.leading().get_mpz_t(), (unsigned long)k);
    IntPoly r = IntPoly(lead_pow) * a;
    // ordinary division loop, discarding the quotient
    std::vector<mpz_class> rem = r.c_;
    for (long i = (long)rem.size() - 1; i >= b.degree(); --i) {
      if (rem[i] == 0) continue;
      mpz_class qc = rem[i] / b.leading();
      for (long j = 0; j <= b.degree(); ++j)
        rem[(size_t)(i - b.degree() + j)] -= qc * b.c_[(size_t)j];
    }
    IntPoly rr{std::vector<mpz_class>(rem.begin(), rem.end())};
    a = b;
    b = rr.is_zero() ? rr : rr.primitive();
  }
  if (a.is_zero()) return IntPoly(cg);
  a = a.primitive();
  if (a.leading() < 0) a = -a;
  return IntPoly(cg) * a;
}

std::string IntPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  LaurentInt l;
  for (size_t i = 0; i < c_.size(); ++i)
    l += LaurentInt::monomial(c_[i], (long)i);
  (void)var;
  return l.str();
}

}  // namespace uqsl
