#include "uqsl/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "uqsl/laurent.hpp"

namespace uqsl {

namespace {

using RatVec = std::vector<mpq_class>;

void trim(RatVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

RatVec mul(const RatVec& a, const RatVec& b) {
  if (a.empty() || b.empty()) return {};
  RatVec c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

RatVec sub(RatVec a, const RatVec& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

RatVec scale(RatVec a, const mpq_class& s) {
  for (auto& x : a) x *= s;
  trim(a);
  return a;
}

std::pair<RatVec, RatVec> divmod(RatVec a, const RatVec& d) {
  RatVec q;
  if (d.empty()) throw scalar_error("cyclotomic division by zero");
  trim(a);
  if (a.size() >= d.size()) q.resize(a.size() - d.size() + 1, 0);
  while (a.size() >= d.size() && !a.empty()) {
    mpq_class f = a.back() / d.back();
    size_t shift = a.size() - d.size();
    q[shift] = f;
    for (size_t i = 0; i < d.size(); ++i) a[shift + i] -= f * d[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

RatVec int_to_rat(const IntPoly& p) {
  RatVec v;
  v.reserve(p.coeffs().size());
  for (auto& c : p.coeffs()) v.emplace_back(c);
  return v;
}

}  // namespace

const IntPoly& CycloScalar::cyclotomic_poly(long N) {
  static std::map<long, IntPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;
  // Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e for divisors d of N in
  // ascending order, so dependencies are always present.
  for (long d = 1; d <= N; ++d) {
    if (N % d != 0 || cache.count(d)) continue;
    IntPoly num = IntPoly::x_power((size_t)d) - IntPoly(1);
    for (long e = 1; e < d; ++e)
      if (d % e == 0) num = num.divide_exact(cache.at(e));
    cache.emplace(d, std::move(num));
  }
  return cache.at(N);
}

long CycloScalar::phi_degree(long N) { return cyclotomic_poly(N).degree(); }

CycloScalar::CycloScalar(long order, long c) : order_(order) {
  if (order <= 0) throw scalar_error("cyclotomic order must be positive");
  c_.assign((size_t)phi_degree(order), 0);
  c_[0] = c;
}

CycloScalar CycloScalar::from_coords(long order, std::vector<mpq_class> coords) {
  if (order <= 0) throw scalar_error("cyclotomic order must be positive");
  CycloScalar s;
  s.order_ = order;
  const IntPoly& phi = cyclotomic_poly(order);
  RatVec v = std::move(coords);
  trim(v);
  if ((long)v.size() > phi.degree()) v = divmod(std::move(v), int_to_rat(phi)).second;
  v.resize((size_t)phi.degree(), 0);
  s.c_ = std::move(v);
  return s;
}

CycloScalar CycloScalar::q_power(long order, long e) {
  long r = e % order;
  if (r < 0) r += order;
  RatVec v((size_t)r + 1, 0);
  v[(size_t)r] = 1;
  return from_coords(order, std::move(v));
}

CycloScalar CycloScalar::promoted(long N) const {
  if (order_ == N) return *this;
  if (order_ != 0) throw scalar_error("mixed cyclotomic orders");
  RatVec v = c_;
  return from_coords(N, std::move(v));
}

std::vector<mpq_class> CycloScalar::coords() const {
  if (order_ <= 0) throw scalar_error("coords of order-agnostic constant");
  return c_;
}

bool CycloScalar::is_zero() const {
  for (auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycloScalar::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

CycloScalar CycloScalar::operator-() const {
  CycloScalar r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycloScalar CycloScalar::operator+(const CycloScalar& o) const {
  long N = order_ ? order_ : o.order_;
  if (N == 0) {
    mpq_class a = c_.empty() ? mpq_class(0) : c_[0];
    mpq_class b = o.c_.empty() ? mpq_class(0) : o.c_[0];
    return CycloScalar(a + b);
  }
  CycloScalar x = promoted(N), y = o.promoted(N);
  for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
  return x;
}

CycloScalar CycloScalar::operator-(const CycloScalar& o) const {
  return *this + (-o);
}

CycloScalar CycloScalar::operator*(const CycloScalar& o) const {
  long N = order_ ? order_ : o.order_;
  if (N == 0) {
    mpq_class a = c_.empty() ? mpq_class(0) : c_[0];
    mpq_class b = o.c_.empty() ? mpq_class(0) : o.c_[0];
    return CycloScalar(a * b);
  }
  CycloScalar x = promoted(N), y = o.promoted(N);
  return from_coords(N, mul(x.c_, y.c_));
}

bool CycloScalar::operator==(const CycloScalar& o) const {
  long N = order_ ? order_ : o.order_;
  if (N == 0) return (*this - o).is_zero();
  return (promoted(N).c_ == o.promoted(N).c_);
}

CycloScalar CycloScalar::inv() const {
  if (is_zero()) throw scalar_error("inverse of zero cyclotomic element");
  if (order_ == 0) return CycloScalar(mpq_class(1) / c_[0]);
  // extended Euclid over Q[x]: find t with t * this = 1 mod Phi_N
  RatVec r0 = int_to_rat(cyclotomic_poly(order_)), r1 = c_;
  trim(r1);
  RatVec t0, t1{1};
  while (!r1.empty()) {
    auto [q, r2] = divmod(r0, r1);
    RatVec t2 = sub(t0, mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) throw scalar_error("cyclotomic inversion failed");
  return from_coords(order_, scale(t0, mpq_class(1) / r0[0]));
}

std::string CycloScalar::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = (long)c_.size() - 1; i >= 0; --i) {
    const mpq_class& x = c_[(size_t)i];
    if (x == 0) continue;
    mpq_class a = abs(x);
    if (x < 0)
      os << "-";
    else if (!first)
      os << "+";
    os << a.get_str();
    if (i != 0) {
      os << "*q";
      if (i != 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

}  // namespace uqsl
