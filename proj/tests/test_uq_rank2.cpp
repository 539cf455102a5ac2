#include "doctest.h"

#include <map>
#include <vector>

#include "uqsl/braiding.hpp"
#include "uqsl/modules_symbolic.hpp"
#include "uqsl/repmod.hpp"

using namespace uqsl;

namespace {

using S = RatFuncQ;

S q(long e) { return RatFuncQ::q_power(e); }

Matrix<S> from_table(size_t n, const std::vector<std::vector<S>>& rows) {
  Matrix<S> m(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
  return m;
}

// Reference braiding on L(1,0) (x) L(1,0), lexicographic basis.
Matrix<S> golden_psi_L10() {
  S o(1), z(0);
  std::vector<std::vector<S>> rows = {
      {-o, z, z, z, z, z, z, z, z},
      {z, q(-1) - o, z, -o, z, z, z, z, z},
      {z, z, q(-1) - o, z, z, z, o, z, z},
      {z, -q(-1), z, z, z, z, z, z, z},
      {z, z, z, z, q(-1), z, z, z, z},
      {z, z, z, z, z, q(-1) - o, z, -o, z},
      {z, z, q(-1), z, z, z, z, z, z},
      {z, z, z, z, z, -q(-1), z, z, z},
      {z, z, z, z, z, z, z, z, -o}};
  return from_table(9, rows);
}

// Reference mixed braiding V (x) V* -> V* (x) V with V* = L(0,1) in its
// canonical highest-weight basis.
Matrix<S> golden_psi_prime() {
  S o(1), z(0);
  std::vector<std::vector<S>> rows = {
      {q(1), z, z, z, z, z, z, z, z},
      {z, z, z, -q(1), z, z, z, z, z},
      {z, z, q(-1) - o, z, q(1) - o, z, -o, z, z},
      {z, -q(1), z, z, z, z, z, z, z},
      {z, z, q(-1) - o, z, q(1), z, z, z, z},
      {z, z, z, z, z, z, z, -o, z},
      {z, z, -o, z, z, z, z, z, z},
      {z, z, z, z, z, -o, z, z, z},
      {z, z, z, z, z, z, z, z, o}};
  return from_table(9, rows);
}

// Reference braiding on W (x) W with (-1)^n = 1 (n even).
Matrix<S> golden_psi_W() {
  Matrix<S> m(16, 16);
  S o(1);
  auto set = [&](size_t r, size_t c, const S& v) { m.at(r - 1, c - 1) = v; };
  set(1, 1, o);
  set(2, 2, o + q(-1));
  set(2, 5, -q(-1));
  set(3, 3, S(2));
  set(3, 9, -o);
  set(4, 4, S(3) + q(-1));
  set(4, 7, S(-2));
  set(4, 10, S(-2));
  set(4, 13, q(-1));
  set(5, 2, o);
  set(6, 6, q(-1));
  set(7, 4, o + q(-1));
  set(7, 10, -o);
  set(8, 8, o + q(-1));
  set(8, 14, -q(-1));
  set(9, 3, o);
  set(10, 4, o + q(-1));
  set(10, 7, -o);
  set(11, 11, o);
  set(12, 12, S(2));
  set(12, 15, -o);
  set(13, 4, o);
  set(14, 8, o);
  set(15, 12, o);
  set(16, 16, o);
  return m;
}

// ---------------------------------------------------------------------------
// Word-level oracle for the braided coproducts: free words in the generators
// (1, 2), braided tensor multiplication
// (a (x) b)(c (x) d) = q(|b|, |c|) ac (x) bd with
// q(beta, gamma) = (-1)^{b1 g1 + b2 g2} q^{b1 g2} (exponent matrix
// [[n,1],[0,n]], q^n = -1, n even). The same pairing serves both Nichols
// factors since the degree signs cancel.

using Word = std::vector<int>;
using WordTensor = std::map<std::pair<Word, Word>, S>;

std::pair<long, long> wdeg(const Word& w) {
  long a = 0, b = 0;
  for (int g : w) (g == 1 ? a : b) += 1;
  return {a, b};
}

S qpair(const Word& b, const Word& c) {
  auto [b1, b2] = wdeg(b);
  auto [c1, c2] = wdeg(c);
  S r = q(b1 * c2);
  return ((b1 * c1 + b2 * c2) % 2 != 0) ? -r : r;
}

void wt_add(WordTensor& t, Word l, Word r, const S& c) {
  if (c.is_zero()) return;
  auto& slot = t[{l, r}];
  slot += c;
  if (slot.is_zero()) t.erase({l, r});
}

WordTensor wt_mul(const WordTensor& A, const WordTensor& B) {
  WordTensor out;
  for (auto& [ka, va] : A)
    for (auto& [kb, vb] : B) {
      Word l = ka.first, r = ka.second;
      l.insert(l.end(), kb.first.begin(), kb.first.end());
      r.insert(r.end(), kb.second.begin(), kb.second.end());
      wt_add(out, l, r, va * vb * qpair(ka.second, kb.first));
    }
  return out;
}

WordTensor delta_word(const Word& w) {
  WordTensor out;
  out[{{}, {}}] = S(1);
  for (int g : w) {
    WordTensor gen;
    gen[{{g}, {}}] = S(1);
    gen[{{}, {g}}] = S(1);
    out = wt_mul(out, gen);
  }
  return out;
}

// Normal forms. Positive side: x_1^{a1} x_21^{k} x_2^{a2} with
// x_21 = x_2 x_1 - x_1 x_2 (letter 3); negative side:
// y_2^{b2} y_12^{k} y_1^{b1} with y_12 = y_1 y_2 - q y_2 y_1 (letter 3).
using NF = std::map<NicholsIndex, S>;

void nf_add(NF& out, const NicholsIndex& k, const S& c) {
  if (c.is_zero()) return;
  auto& slot = out[k];
  slot += c;
  if (slot.is_zero()) out.erase(k);
}

NicholsIndex count_letters(const Word& w) {
  int n1 = 0, n2 = 0;
  long k = 0;
  for (int g : w) {
    if (g == 1) ++n1;
    else if (g == 2) ++n2;
    else ++k;
  }
  return NicholsIndex{n1, k, n2};
}

NF normal_form(const Word& w0, bool positive) {
  NF out;
  std::vector<std::pair<Word, S>> work{{w0, S(1)}};
  while (!work.empty()) {
    auto [w, c] = work.back();
    work.pop_back();
    bool done = true;
    for (size_t t = 0; t + 1 < w.size() && done; ++t) {
      int a = w[t], b = w[t + 1];
      auto repl = [&, t](std::vector<int> mid, const S& f) {
        Word nw(w.begin(), w.begin() + (long)t);
        nw.insert(nw.end(), mid.begin(), mid.end());
        nw.insert(nw.end(), w.begin() + (long)t + 2, w.end());
        work.push_back({nw, c * f});
      };
      if (a == b && (a == 1 || a == 2)) {
        done = false;  // generator squares vanish: drop the word
      } else if (positive && a == 2 && b == 1) {
        repl({3}, S(1));
        repl({1, 2}, S(1));
        done = false;
      } else if (positive && a == 3 && b == 1) {
        repl({1, 3}, S(-1));
        done = false;
      } else if (positive && a == 2 && b == 3) {
        repl({3, 2}, S(-1));
        done = false;
      } else if (!positive && a == 1 && b == 2) {
        repl({3}, S(1));
        repl({2, 1}, q(1));
        done = false;
      } else if (!positive && a == 1 && b == 3) {
        repl({3, 1}, -q(1));
        done = false;
      } else if (!positive && a == 3 && b == 2) {
        repl({2, 3}, -q(1));
        done = false;
      }
    }
    if (!done) continue;
    NicholsIndex idx = count_letters(w);
    if (idx.b1 > 1 || idx.b2 > 1) continue;
    nf_add(out, idx, c);
  }
  return out;
}

// (1-q)^k [k]_q! as a rational function.
S dp_denom(long k) {
  S r(1);
  for (long i = 1; i <= k; ++i) r *= (S(1) - q(1)) * S(gauss_int(i));
  return r;
}

std::vector<std::pair<Word, S>> expand_words(const NicholsIndex& m, bool positive) {
  std::vector<std::pair<Word, S>> out{{{}, S(1)}};
  auto mul = [&](const std::vector<std::pair<Word, S>>& gens) {
    std::vector<std::pair<Word, S>> next;
    for (auto& [w, c] : out)
      for (auto& [gw, gc] : gens) {
        Word nw = w;
        nw.insert(nw.end(), gw.begin(), gw.end());
        next.push_back({nw, c * gc});
      }
    out = next;
  };
  if (positive) {
    // x_1^{a1} x_21^{a21} x_2^{a2}
    if (m.b1) mul({{{1}, S(1)}});
    for (long t = 0; t < m.b12; ++t) mul({{{2, 1}, S(1)}, {{1, 2}, S(-1)}});
    if (m.b2) mul({{{2}, S(1)}});
  } else {
    // y_2^{b2} y_12^{(b12)} y_1^{b1} (divided power)
    if (m.b2) mul({{{2}, S(1)}});
    for (long t = 0; t < m.b12; ++t) mul({{{1, 2}, S(1)}, {{2, 1}, -q(1)}});
    if (m.b1) mul({{{1}, S(1)}});
    S norm = dp_denom(m.b12).inv();
    for (auto& [w, c] : out) c *= norm;
  }
  return out;
}

using PairMap = std::map<std::pair<NicholsIndex, NicholsIndex>, S>;

PairMap oracle_coproduct(const NicholsIndex& m, bool positive) {
  PairMap out;
  for (auto& [w, c] : expand_words(m, positive))
    for (auto& [lr, v] : delta_word(w))
      for (auto& [lk, lv] : normal_form(lr.first, positive))
        for (auto& [rk, rv] : normal_form(lr.second, positive)) {
          S f = positive ? S(1) : dp_denom(lk.b12) * dp_denom(rk.b12);
          auto& slot = out[{lk, rk}];
          slot += c * v * lv * rv * f;
          if (slot.is_zero()) out.erase({lk, rk});
        }
  return out;
}

PairMap to_ratfunc(const BraidedTensorSum& b) {
  PairMap out;
  for (auto& [k, v] : b)
    if (!v.is_zero()) out[k] = S(v);
  return out;
}

// Recursive pairing through the braided coproduct of the y side, as in the
// dual-orthogonality proof: <y, g w> = sum <y_(1), w> <y_(2), g>.
S pair_recursive(const NicholsIndex& y, const Word& xw) {
  if (xw.empty()) return y == NicholsIndex{0, 0, 0} ? S(1) : S(0);
  int g = xw.front();
  Word rest(xw.begin() + 1, xw.end());
  S acc(0);
  NicholsIndex want = g == 1 ? NicholsIndex{1, 0, 0} : NicholsIndex{0, 0, 1};
  for (auto& [lr, c] : coproduct_neg(y)) {
    if (!(lr.second == want)) continue;
    acc += S(c) * pair_recursive(lr.first, rest);
  }
  return acc;
}

}  // namespace

TEST_CASE("negative coproducts match the word oracle") {
  for (long k = 0; k <= 4; ++k)
    for (int b2 = 0; b2 <= 1; ++b2)
      for (int b1 = 0; b1 <= 1; ++b1) {
        NicholsIndex m{b1, k, b2};
        CHECK(to_ratfunc(coproduct_neg(m)) == oracle_coproduct(m, false));
      }
}

TEST_CASE("coproduct_neg spec examples") {
  BraidedTensorSum d = coproduct_neg({0, 1, 0});
  CHECK(d.size() == 3);
  CHECK(d.at({{0, 1, 0}, {0, 0, 0}}) == LaurentInt(1));
  CHECK(d.at({{0, 0, 0}, {0, 1, 0}}) == LaurentInt(1));
  CHECK(d.at({{1, 0, 0}, {0, 0, 1}}) == LaurentInt(1));  // y_1 (x) y_2
  CHECK(coproduct_neg({1, 0, 0}).size() == 2);           // y_1 primitive
  BraidedTensorSum t = coproduct_neg({0, 2, 1});         // y_2 y_12^{(2)}
  CHECK(t.size() == 8);
  CHECK(t.at({{0, 1, 0}, {0, 1, 1}}) == LaurentInt(-1));  // (-1)^i at i = 1
}

TEST_CASE("positive coproducts match the word oracle") {
  for (long k = 0; k <= 4; ++k)
    for (int a2 = 0; a2 <= 1; ++a2)
      for (int a1 = 0; a1 <= 1; ++a1) {
        NicholsIndex m{a1, k, a2};
        CHECK(to_ratfunc(coproduct_pos(m)) == oracle_coproduct(m, true));
      }
}

TEST_CASE("coproduct_pos examples") {
  BraidedTensorSum d = coproduct_pos({0, 1, 0});
  CHECK(d.size() == 3);
  CHECK(d.at({{0, 1, 0}, {0, 0, 0}}) == LaurentInt(1));
  CHECK(d.at({{0, 0, 0}, {0, 1, 0}}) == LaurentInt(1));
  // cross term x_2 (x) x_1 with coefficient (1 - q), forced by expanding
  // Delta(x_2 x_1 - x_1 x_2) in the braided tensor algebra (see the word
  // oracle above); an x_1 (x) x_2 cross term cannot occur
  CHECK(d.at({{0, 0, 1}, {1, 0, 0}}) == LaurentInt::parse("-1*q+1"));
  CHECK(coproduct_pos({1, 0, 0}).size() == 2);
  BraidedTensorSum t = coproduct_pos({1, 2, 0});
  CHECK(t.at({{1, 1, 0}, {0, 1, 0}}) == gauss_binom(2, 1));
  CHECK(t.at({{0, 1, 0}, {1, 1, 0}}) ==
        -(LaurentInt::q_power(1) * gauss_binom(2, 1)));
  CHECK(t.at({{0, 2, 0}, {1, 0, 0}}) == LaurentInt::q_power(2));
}

TEST_CASE("dual pairing is the Kronecker form") {
  CHECK(pairing({1, 0, 0}, {1, 0, 0}) == 1);  // <y_1, x_1>
  CHECK(pairing({0, 1, 0}, {0, 1, 0}) == 1);  // <y_12^{(1)}, x_21>
  CHECK(pairing({0, 1, 0}, {1, 0, 1}) == 0);  // <y_12^{(1)}, x_1 x_2>
}

TEST_CASE("pairing-coproduct duality oracle (N <= 6)") {
  for (long N : {4L, 6L})
    for (int yb2 = 0; yb2 <= 1; ++yb2)
      for (long yk = 0; yk < N; ++yk)
        for (int yb1 = 0; yb1 <= 1; ++yb1)
          for (int xb2 = 0; xb2 <= 1; ++xb2)
            for (long xk = 0; xk < N; ++xk)
              for (int xb1 = 0; xb1 <= 1; ++xb1) {
                NicholsIndex y{yb1, yk, yb2}, x{xb1, xk, xb2};
                S acc(0);
                for (auto& [w, c] : expand_words(x, true))
                  acc += c * pair_recursive(y, w);
                CHECK(acc == S(pairing(y, x)));
              }
}

namespace {

template <class B>
void check_defining_relations(const WeightModule<B>& V, long N) {
  using M = Matrix<typename B::Scalar>;
  auto zero = M(V.dim(), V.dim());
  auto id = M::identity(V.dim());
  auto k1 = V.kappa(1), k2 = V.kappa(2);
  auto qs = [&](long e) { return V.bk.q_pow(e); };
  CHECK(k1 * V.x1 == V.x1 * k1 * qs(1));
  CHECK(k1 * V.x2 == V.x2 * k1);
  CHECK(k2 * V.x2 == V.x2 * k2 * qs(1));
  CHECK(k2 * V.x1 == V.x1 * k2);
  CHECK(k1 * V.y1 == V.y1 * k1 * qs(-1));
  CHECK(k1 * V.y2 == V.y2 * k1);
  CHECK(k2 * V.y2 == V.y2 * k2 * qs(-1));
  CHECK(k2 * V.y1 == V.y1 * k2);
  CHECK(k1 * k2 == k2 * k1);
  CHECK(k1.pow((unsigned long)N) == id);
  CHECK(k2.pow((unsigned long)N) == id);
  CHECK(V.y1 * V.x1 + V.x1 * V.y1 == id - k2);
  CHECK(V.y2 * V.x2 + V.x2 * V.y2 == id - k1);
  CHECK(V.y2 * V.x1 == V.x1 * V.y2 * qs(1));
  CHECK(V.y1 * V.x2 == V.x2 * V.y1);
  CHECK(V.x1 * V.x1 == zero);
  CHECK(V.x2 * V.x2 == zero);
  CHECK(V.y1 * V.y1 == zero);
  CHECK(V.y2 * V.y2 == zero);
  CHECK((V.x1 * V.x2).pow((unsigned long)N) + (V.x2 * V.x1).pow((unsigned long)N) ==
        zero);
  CHECK((V.y1 * V.y2).pow((unsigned long)N) + (V.y2 * V.y1).pow((unsigned long)N) ==
        zero);
}

}  // namespace

TEST_CASE("defining relations annihilate the standard modules (N <= 6)") {
  for (long N : {4L, 6L})
    for (long i = 0; i < N; ++i)
      for (long j = 0; j < N; ++j)
        check_defining_relations(standard_module(N, i, j), N);
}

TEST_CASE("defining relations annihilate the simple modules (N = 4)") {
  long N = 4;
  for (long i = 0; i < N; ++i)
    for (long j = 0; j < N; ++j)
      check_defining_relations(simple_module(N, i, j), N);
}

TEST_CASE("defining relations hold on the symbolic modules") {
  for (auto V : {symbolic_W(), symbolic_L10(), symbolic_L01()}) {
    using M = Matrix<S>;
    auto zero = M(V.dim(), V.dim());
    auto id = M::identity(V.dim());
    auto k1 = V.kappa(1), k2 = V.kappa(2);
    CHECK(V.y1 * V.x1 + V.x1 * V.y1 == id - k2);
    CHECK(V.y2 * V.x2 + V.x2 * V.y2 == id - k1);
    CHECK(V.y2 * V.x1 == V.x1 * V.y2 * q(1));
    CHECK(V.y1 * V.x2 == V.x2 * V.y1);
    CHECK(V.x1 * V.x1 == zero);
    CHECK(V.x2 * V.x2 == zero);
    CHECK(V.y1 * V.y1 == zero);
    CHECK(V.y2 * V.y2 == zero);
    CHECK((V.x1 * V.x2).pow(2) == zero);
    CHECK((V.y1 * V.y2).pow(2) == zero);
  }
}

TEST_CASE("commutation relations of the divided powers (N <= 6)") {
  for (long N : {4L, 6L}) {
    CycloBackend bk(N);
    auto qs = [&](long e) { return bk.q_pow(e); };
    auto sg = [&](long k) { return bk.from_long(k % 2 == 0 ? 1 : -1); };
    for (long i = 0; i < N; ++i)
      for (long j = 0; j < N; ++j) {
        CModule V = standard_module(N, i, j);
        using M = Matrix<CycloScalar>;
        M id = M::identity(V.dim());
        M zero(V.dim(), V.dim());
        M k1m = V.kappa(2);  // k_1 = gamma_1 gammabar_1 = kappa_2
        M k2m = V.kappa(1);  // k_2 = kappa_1
        for (long k = 0; k < N; ++k) {
          M dk = y_monomial_op(V, {0, k, 0});
          M dk1 = k > 0 ? y_monomial_op(V, {0, k - 1, 0}) : zero;
          CHECK(dk * V.x1 - V.x1 * dk * (sg(k) * qs(k)) ==
                (k > 0 ? V.y2 * dk1 * k1m * sg(k) : zero));
          CHECK(dk * V.x2 - V.x2 * dk * sg(k) == (k > 0 ? dk1 * V.y1 : zero));
          CHECK(dk * V.y1 * V.x1 + V.x1 * dk * V.y1 * (sg(k) * qs(k)) ==
                dk * (id - k1m) -
                    (k > 0 ? V.y2 * dk1 * V.y1 * k1m * sg(k) : zero));
          CHECK(dk * V.y1 * V.x2 == V.x2 * dk * V.y1 * sg(k));
          CHECK(V.y2 * dk * V.x1 == V.x1 * V.y2 * dk * (sg(k) * qs(k + 1)));
          CHECK(V.y2 * dk * V.x2 + V.x2 * V.y2 * dk * sg(k) ==
                dk * (id - k2m * qs(-k)) * sg(k) +
                    (k > 0 ? V.y2 * dk1 * V.y1 : zero));
          CHECK(V.y2 * dk * V.y1 * V.x1 +
                    V.x1 * V.y2 * dk * V.y1 * (sg(k) * qs(k + 1)) ==
                V.y2 * dk * (id - k1m));
          CHECK(V.y2 * dk * V.y1 * V.x2 + V.x2 * V.y2 * dk * V.y1 * sg(k) ==
                dk * V.y1 * (id - k2m * qs(-k - 1)) * sg(k));
        }
      }
  }
}

TEST_CASE("act on PBW monomials") {
  long N = 4;
  CycloBackend bk(N);
  for (long i = 0; i < N; ++i)
    for (long j = 0; j < N; ++j) {
      CModule V = standard_module(N, i, j);
      PbwMonomial<CycloBackend> mk{bk.from_long(1), {0, 0, 0}, 1, 0, {0, 0, 0}};
      CHECK(act(mk, V).at(0, 0) == bk.q_pow(i));
      PbwMonomial<CycloBackend> ysq{bk.from_long(1), {0, 0, 0}, 0, 0, {1, 0, 0}};
      auto y1m = act(ysq, V);
      CHECK((y1m * y1m).is_zero());
      PbwMonomial<CycloBackend> dp{bk.from_long(1), {0, 0, 0}, 0, 0, {0, 1, 0}};
      auto m = act(dp, V);
      for (size_t r = 0; r < V.dim(); ++r)
        CHECK(m.at(r, 0) ==
              (V.label[r] == "v(0,1,0)" ? bk.from_long(1) : bk.from_long(0)));
    }
}

TEST_CASE("golden braiding matrices") {
  SModule V = symbolic_L10();
  Matrix<S> psi = r_matrix_braiding(V, V, 6);
  CHECK(psi == golden_psi_L10());
  // the 4N-monomial sum stabilizes once higher divided powers act by zero
  CHECK(psi == r_matrix_braiding(V, V, 10));

  SModule Vd = symbolic_L01();
  CHECK(r_matrix_braiding(V, Vd, 6) == golden_psi_prime());

  SModule W = symbolic_W();
  CHECK(r_matrix_braiding(W, W, 6) == golden_psi_W());

  SModule one = trivial_module(SymbolicBackend{});
  CHECK(r_matrix_braiding(V, one, 6) == Matrix<S>::identity(3));
  CHECK(r_matrix_braiding(one, V, 6) == Matrix<S>::identity(3));
}

TEST_CASE("canonical dual of L(1,0) is L(0,1)") {
  SModule V = symbolic_L10();
  SModule Vd = dual_module(V);
  SModule L01 = symbolic_L01();
  std::vector<S> u0(3, S(0));
  u0[2] = S(1);  // dual vector to the lowest basis vector
  auto applyv = [&](const Matrix<S>& m, const std::vector<S>& v) {
    std::vector<S> out(3, S(0));
    for (size_t r = 0; r < 3; ++r)
      for (size_t c = 0; c < 3; ++c) out[r] += m.at(r, c) * v[c];
    return out;
  };
  auto u1 = applyv(Vd.y1, u0);
  auto u2 = applyv(Vd.y2, u1);
  Matrix<S> T(3, 3);
  for (size_t r = 0; r < 3; ++r) {
    T.at(r, 0) = u0[r];
    T.at(r, 1) = u1[r];
    T.at(r, 2) = u2[r];
  }
  Matrix<S> Ti = T.inverse();
  CHECK(Ti * Vd.x1 * T == L01.x1);
  CHECK(Ti * Vd.x2 * T == L01.x2);
  CHECK(Ti * Vd.y1 * T == L01.y1);
  CHECK(Ti * Vd.y2 * T == L01.y2);
}

TEST_CASE("Yang-Baxter") {
  auto yb = [&](const SModule& V) {
    size_t d = V.dim();
    Matrix<S> psi = r_matrix_braiding(V, V, 6);
    Matrix<S> id = Matrix<S>::identity(d);
    Matrix<S> a = Matrix<S>::kron(psi, id), b = Matrix<S>::kron(id, psi);
    CHECK(a * b * a == b * a * b);
  };
  yb(symbolic_L10());
  yb(symbolic_W());
}

TEST_CASE("braidings are module maps") {
  auto natural = [&](const SModule& V, const SModule& W) {
    SModule VW = tensor(V, W), WV = tensor(W, V);
    Matrix<S> psi = r_matrix_braiding(V, W, 6);
    CHECK(psi * VW.x1 == WV.x1 * psi);
    CHECK(psi * VW.x2 == WV.x2 * psi);
    CHECK(psi * VW.y1 == WV.y1 * psi);
    CHECK(psi * VW.y2 == WV.y2 * psi);
    CHECK(psi * VW.kappa(1) == WV.kappa(1) * psi);
    CHECK(psi * VW.kappa(2) == WV.kappa(2) * psi);
  };
  natural(symbolic_L10(), symbolic_L10());
  natural(symbolic_L10(), symbolic_W());
  natural(symbolic_W(), symbolic_W());
  natural(symbolic_W(), symbolic_L01());
}

TEST_CASE("mixed braidings satisfy the quadratic skein relations") {
  SModule V = symbolic_L10();
  SModule Vd = dual_module(V);
  auto psi_p = r_matrix_braiding(V, Vd, 6);
  auto psi_ps = r_matrix_braiding(Vd, V, 6);
  Matrix<S> id = Matrix<S>::identity(9);
  Matrix<S> A = psi_ps * psi_p, B = psi_p * psi_ps;
  CHECK(A + A.inverse() * q(1) == id * (S(1) + q(1)));
  CHECK(B + B.inverse() * q(1) == id * (S(1) + q(1)));
}

TEST_CASE("minimal polynomial of the L(1,0) braiding") {
  SModule V = symbolic_L10();
  Matrix<S> psi = r_matrix_braiding(V, V, 6);
  Matrix<S> inv = psi.inverse();
  CHECK(psi * q(1) - inv == Matrix<S>::identity(9) * (S(1) - q(1)));
}

TEST_CASE("cyclotomic braiding specializes the symbolic one") {
  for (long N : {8L, 12L}) {
    CModule Wc = canonical_W(N);
    Matrix<CycloScalar> psi_c = r_matrix_braiding(Wc, Wc, N);
    SModule Ws = symbolic_W();
    Matrix<S> psi_s = r_matrix_braiding(Ws, Ws, 6);
    for (size_t i = 0; i < 16; ++i)
      for (size_t j = 0; j < 16; ++j)
        CHECK(psi_c.at(i, j) == specialize(psi_s.at(i, j), N));
  }
}
