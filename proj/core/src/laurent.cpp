#include "uqsl/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace uqsl {

namespace {
long checked_add(long a, long b) {
  long r;
  if (__builtin_add_overflow(a, b, &r))
    throw scalar_error("Laurent exponent overflow");
  return r;
}
}  // namespace

void LaurentInt::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(t);
    if (!out.empty() && out.back().second == 0) out.pop_back();
  }
  terms_ = std::move(out);
}

mpz_class LaurentInt::coeff(long e) const {
  for (auto& t : terms_)
    if (t.first == e) return t.second;
  return 0;
}

long LaurentInt::min_exp() const {
  if (terms_.empty()) throw scalar_error("min_exp of zero polynomial");
  return terms_.front().first;
}

long LaurentInt::max_exp() const {
  if (terms_.empty()) throw scalar_error("max_exp of zero polynomial");
  return terms_.back().first;
}

LaurentInt LaurentInt::operator-() const {
  LaurentInt r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

LaurentInt LaurentInt::operator+(const LaurentInt& o) const {
  LaurentInt r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      r.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      r.terms_.push_back(*b++);
    } else {
      mpz_class c = a->second + b->second;
      if (c != 0) r.terms_.push_back({a->first, c});
      ++a, ++b;
    }
  }
  return r;
}

LaurentInt LaurentInt::operator-(const LaurentInt& o) const {
  return *this + (-o);
}

LaurentInt LaurentInt::operator*(const LaurentInt& o) const {
  if (terms_.empty() || o.terms_.empty()) return {};
  std::map<long, mpz_class> acc;
  for (auto& a : terms_)
    for (auto& b : o.terms_) acc[checked_add(a.first, b.first)] += a.second * b.second;
  LaurentInt r;
  for (auto& [e, c] : acc)
    if (c != 0) r.terms_.push_back({e, c});
  return r;
}

LaurentInt LaurentInt::pow(unsigned long k) const {
  LaurentInt r(1), base = *this;
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

LaurentInt LaurentInt::mirror() const {
  LaurentInt r;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    r.terms_.push_back({-it->first, it->second});
  return r;
}

LaurentInt LaurentInt::divide_exact(const LaurentInt& d) const {
  if (d.is_zero()) throw scalar_error("division by zero");
  if (is_zero()) return {};
  LaurentInt rem = *this, quo;
  // Eliminate from the top using d's leading term.
  const Term& lead = d.terms_.back();
  while (!rem.is_zero()) {
    const Term& rt = rem.terms_.back();
    mpz_class qc, qr;
    mpz_fdiv_qr(qc.get_mpz_t(), qr.get_mpz_t(), rt.second.get_mpz_t(),
                lead.second.get_mpz_t());
    if (qr != 0) throw scalar_error("inexact Laurent division");
    LaurentInt m = monomial(qc, rt.first - lead.first);
    quo += m;
    rem -= m * d;
    if (!rem.is_zero() && rem.max_exp() >= rt.first)
      throw scalar_error("inexact Laurent division");
  }
  return quo;
}

std::string LaurentInt::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const mpz_class& c = it->second;
    if (c < 0)
      os << "-";
    else if (!first)
      os << "+";
    mpz_class a = abs(c);
    os << a.get_str();
    if (it->first != 0) {
      os << "*q";
      if (it->first != 1) os << "^" << it->first;
    }
    first = false;
  }
  return os.str();
}

LaurentInt LaurentInt::parse(const std::string& s) {
  LaurentInt out;
  size_t i = 0;
  auto skip_ws = [&] { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; };
  skip_ws();
  if (i == s.size()) throw scalar_error("empty Laurent string");
  while (i < s.size()) {
    skip_ws();
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
      skip_ws();
    }
    std::string digits;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) digits += s[i++];
    mpz_class c = digits.empty() ? mpz_class(1) : mpz_class(digits);
    if (sign < 0) c = -c;
    long e = 0;
    skip_ws();
    if (i < s.size() && (s[i] == '*' || s[i] == 'q')) {
      if (s[i] == '*') { ++i; skip_ws(); }
      if (i >= s.size() || s[i] != 'q') throw scalar_error("expected q in Laurent string");
      ++i;
      e = 1;
      skip_ws();
      if (i < s.size() && s[i] == '^') {
        ++i;
        skip_ws();
        bool eneg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) eneg = (s[i++] == '-');
        std::string ed;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ed += s[i++];
        if (ed.empty()) throw scalar_error("missing exponent in Laurent string");
        e = std::stol(ed);
        if (eneg) e = -e;
      }
    } else if (digits.empty()) {
      throw scalar_error("malformed Laurent term");
    }
    out += monomial(c, e);
    skip_ws();
    if (i < s.size() && s[i] != '+' && s[i] != '-')
      throw scalar_error("unexpected character in Laurent string");
  }
  return out;
}

}  // namespace uqsl
