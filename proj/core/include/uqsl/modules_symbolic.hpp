#pragma once

#include "uqsl/weight_module.hpp"

namespace uqsl {

using SModule = WeightModule<SymbolicBackend>;

/// The four-dimensional simple module W = L(n, n+1) over the generic-q
/// backend (n even), basis (w0, w1 = y1 w0, w1' = y2 w0, w2 = y2 y1 w0).
/// Action table from the quotient of M(n, n+1); reproduces the reference
/// 16x16 braiding matrix entrywise.
inline SModule symbolic_W() {
  SModule m;
  m.wt = {SymWeight{1, 0, 1, 1}, SymWeight{1, -1, 1, 1}, SymWeight{1, 0, 1, 0},
          SymWeight{1, -1, 1, 0}};
  m.depth = {0, 1, 1, 2};
  m.label = {"w0", "w1", "w1'", "w2"};
  using S = RatFuncQ;
  auto q = [](long e) { return RatFuncQ::q_power(e); };
  S one(1);
  Matrix<S> y1(4, 4), y2(4, 4), x1(4, 4), x2(4, 4);
  y1.at(1, 0) = one;
  y1.at(3, 2) = S(2) * (one + q(-1)).inv();
  y2.at(2, 0) = one;
  y2.at(3, 1) = one;
  x1.at(0, 1) = one + q(1);
  x1.at(2, 3) = one + q(-1);
  x2.at(0, 2) = S(2);
  x2.at(1, 3) = one + q(-1);
  m.y1 = y1;
  m.y2 = y2;
  m.x1 = x1;
  m.x2 = x2;
  m.check_grading();
  return m;
}

/// The three-dimensional simple module V = L(1,0), basis
/// (v0, v1 = y2 v0, v2 = y1 v1).
inline SModule symbolic_L10() {
  SModule m;
  m.wt = {SymWeight{0, 1, 0, 0}, SymWeight{0, 1, 0, -1}, SymWeight{0, 0, 0, -1}};
  m.depth = {0, 1, 2};
  m.label = {"v0", "v1", "v2"};
  using S = RatFuncQ;
  auto q = [](long e) { return RatFuncQ::q_power(e); };
  S one(1);
  Matrix<S> y1(3, 3), y2(3, 3), x1(3, 3), x2(3, 3);
  y2.at(1, 0) = one;
  y1.at(2, 1) = one;
  x2.at(0, 1) = one - q(1);
  x1.at(1, 2) = one - q(-1);
  m.y1 = y1;
  m.y2 = y2;
  m.x1 = x1;
  m.x2 = x2;
  m.check_grading();
  return m;
}

/// L(0,1) = L(1,0)^* in its canonical highest-weight basis
/// (u0, u1 = y1 u0, u2 = y2 u1).
inline SModule symbolic_L01() {
  SModule m;
  m.wt = {SymWeight{0, 0, 0, 1}, SymWeight{0, -1, 0, 1}, SymWeight{0, -1, 0, 0}};
  m.depth = {0, 1, 2};
  m.label = {"u0", "u1", "u2"};
  using S = RatFuncQ;
  auto q = [](long e) { return RatFuncQ::q_power(e); };
  S one(1);
  Matrix<S> y1(3, 3), y2(3, 3), x1(3, 3), x2(3, 3);
  y1.at(1, 0) = one;
  y2.at(2, 1) = one;
  x1.at(0, 1) = one - q(1);
  x2.at(1, 2) = one - q(-1);
  m.y1 = y1;
  m.y2 = y2;
  m.x1 = x1;
  m.x2 = x2;
  m.check_grading();
  return m;
}

}  // namespace uqsl
