#include "doctest.h"

#include <random>

#include "uqsl/cyclotomic.hpp"
#include "uqsl/laurent.hpp"
#include "uqsl/qcomb.hpp"
#include "uqsl/ratfunc.hpp"

using namespace uqsl;

namespace {

std::mt19937 rng(20240817);

LaurentInt random_laurent(int max_terms = 5, long max_exp = 6, long max_coeff = 9) {
  std::uniform_int_distribution<int> nt(0, max_terms);
  std::uniform_int_distribution<long> ex(-max_exp, max_exp);
  std::uniform_int_distribution<long> co(-max_coeff, max_coeff);
  LaurentInt p;
  int k = nt(rng);
  for (int i = 0; i < k; ++i) p += LaurentInt::monomial(co(rng), ex(rng));
  return p;
}

RatFuncQ random_ratfunc() {
  LaurentInt den;
  while (den.is_zero()) den = random_laurent(3, 3, 4);
  return RatFuncQ(random_laurent()) * RatFuncQ(den).inv();
}

// Independent Pascal-recurrence oracle for Gaussian binomials:
// binom(k,i) = binom(k-1,i-1) + q^i binom(k-1,i).
LaurentInt binom_pascal(long k, long i) {
  if (i == 0 || i == k) return LaurentInt(1);
  return binom_pascal(k - 1, i - 1) +
         LaurentInt::q_power(i) * binom_pascal(k - 1, i);
}

}  // namespace

TEST_CASE("laurent rendering and parsing") {
  LaurentInt p = LaurentInt::monomial(2, 2) + LaurentInt::monomial(4, 1) +
                 LaurentInt(3) + LaurentInt::monomial(-1, -1);
  CHECK(p.str() == "2*q^2+4*q+3-1*q^-1");
  CHECK(LaurentInt::parse("2*q^2+4*q+3-1*q^-1") == p);
  CHECK(LaurentInt().str() == "0");
  CHECK(LaurentInt::parse("0").is_zero());
  CHECK(LaurentInt::parse("-2*q-2") == LaurentInt::monomial(-2, 1) + LaurentInt(-2));
  for (int i = 0; i < 200; ++i) {
    LaurentInt p = random_laurent();
    CHECK(LaurentInt::parse(p.str()) == p);
  }
}

TEST_CASE("laurent ring axioms and mirror involution") {
  for (int i = 0; i < 200; ++i) {
    LaurentInt a = random_laurent(), b = random_laurent(), c = random_laurent();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a.mirror().mirror() == a);
    CHECK((a * b).mirror() == a.mirror() * b.mirror());
  }
}

TEST_CASE("gauss integers") {
  CHECK(gauss_int(0).is_zero());
  CHECK(gauss_int(1) == LaurentInt(1));
  CHECK(gauss_int(3) == LaurentInt::parse("1*q^2+1*q+1"));
}

TEST_CASE("gauss binomials") {
  CHECK(gauss_binom(2, 1) == LaurentInt::parse("1*q+1"));
  // derived by the independent Pascal oracle and frozen
  CHECK(binom_pascal(4, 2) == LaurentInt::parse("1*q^4+1*q^3+2*q^2+1*q+1"));
  CHECK(gauss_binom(4, 2) == LaurentInt::parse("1*q^4+1*q^3+2*q^2+1*q+1"));
  CHECK(gauss_binom(5, 0) == LaurentInt(1));
  CHECK_THROWS_AS(gauss_binom(3, 4), scalar_error);

  // Pascal identity for all k <= 12
  for (long k = 1; k <= 12; ++k)
    for (long i = 0; i <= k; ++i) CHECK(gauss_binom(k, i) == binom_pascal(k, i));

  // defining identity binom(k,i) [i]! [k-i]! = [k]!
  for (long k = 0; k <= 8; ++k)
    for (long i = 0; i <= k; ++i)
      CHECK(gauss_binom(k, i) * gauss_factorial(i) * gauss_factorial(k - i) ==
            gauss_factorial(k));
}

TEST_CASE("rational function canonical form") {
  // (q^2 - 1)/(q - 1) reduces structurally to q + 1
  RatFuncQ a(IntPoly({std::vector<mpz_class>{-1, 0, 1}}),
             IntPoly({std::vector<mpz_class>{-1, 1}}));
  CHECK(a == RatFuncQ(LaurentInt::parse("1*q+1")));
  // denominator normalized to positive leading coefficient
  RatFuncQ b(IntPoly(1), IntPoly({std::vector<mpz_class>{1, -1}}));  // 1/(1-q)
  CHECK(b.den().leading() > 0);
  CHECK(b.num() == IntPoly(-1));
  CHECK(b + RatFuncQ(1) * b * RatFuncQ(LaurentInt::parse("-1*q")) == RatFuncQ(1));

  for (int i = 0; i < 100; ++i) {
    RatFuncQ x = random_ratfunc(), y = random_ratfunc(), z = random_ratfunc();
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x - x == RatFuncQ());
    if (!x.is_zero()) CHECK(x * x.inv() == RatFuncQ(1));
    CHECK(x.mirror().mirror() == x);
  }
}

TEST_CASE("laurent extraction from rational functions") {
  RatFuncQ p = RatFuncQ::q_power(2) - RatFuncQ::q_power(-3);
  CHECK(p.is_laurent());
  CHECK(p.to_laurent() == LaurentInt::parse("1*q^2-1*q^-3"));
  RatFuncQ np = RatFuncQ(1) * RatFuncQ(IntPoly(1), IntPoly({std::vector<mpz_class>{1, 1}}));
  CHECK(!np.is_laurent());
  CHECK_THROWS_AS(np.to_laurent(), scalar_error);
}

TEST_CASE("cyclotomic identities") {
  for (long N : {4L, 6L, 8L, 12L}) {
    CycloScalar q = CycloScalar::q_power(N, 1);
    CycloScalar qn = CycloScalar::q_power(N, N / 2);
    CHECK(CycloScalar::q_power(N, N) == CycloScalar(N, 1));
    CHECK(qn == -CycloScalar(N, 1));
    CHECK(q * q.inv() == CycloScalar(N, 1));
  }
}

TEST_CASE("specialize examples") {
  // q^n -> -1 at N = 8
  CHECK(specialize(RatFuncQ::q_power(4), 8) == -CycloScalar(8, 1));
  // 1/(1-q) at N = 4 equals (1+q)/2
  RatFuncQ f = RatFuncQ(IntPoly(1), IntPoly({std::vector<mpz_class>{1, -1}}));
  CycloScalar expect =
      CycloScalar::from_coords(4, {mpq_class(1, 2), mpq_class(1, 2)});
  CHECK(specialize(f, 4) == expect);
  // plain polynomial reduction mod Phi_12
  LaurentInt p = LaurentInt::parse("2*q^2+4*q+3");
  CHECK(specialize(p, 12) ==
        CycloScalar::from_coords(12, {3, 4, 2, 0}));
  // vanishing denominator signals an error: 1/(1+q^2) at N = 4
  RatFuncQ g(IntPoly(1), IntPoly({std::vector<mpz_class>{1, 0, 1}}));
  CHECK_THROWS_AS(specialize(g, 4), scalar_error);
}

TEST_CASE("specialize is a ring homomorphism") {
  for (int i = 0; i < 1000; ++i) {
    RatFuncQ a = random_ratfunc(), b = random_ratfunc();
    long N = (i % 2) ? 8 : 12;
    CycloScalar sa, sb;
    bool ok = true;
    try {
      sa = specialize(a, N);
      sb = specialize(b, N);
    } catch (const scalar_error&) {
      ok = false;  // denominator vanished at the root; skip
    }
    if (!ok) continue;
    CHECK(specialize(a * b, N) == sa * sb);
    CHECK(specialize(a + b, N) == sa + sb);
  }
}

TEST_CASE("cyclotomic ring axioms") {
  std::uniform_int_distribution<long> co(-6, 6);
  for (int i = 0; i < 100; ++i) {
    long N = (i % 2) ? 8 : 6;
    auto rnd = [&] {
      std::vector<mpq_class> v((size_t)CycloScalar::phi_degree(N));
      for (auto& x : v) x = co(rng);
      return CycloScalar::from_coords(N, v);
    };
    CycloScalar a = rnd(), b = rnd(), c = rnd();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * a.inv() == CycloScalar(N, 1));
  }
}
