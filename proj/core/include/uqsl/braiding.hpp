#pragma once

#include <map>

#include "uqsl/qcomb.hpp"
#include "uqsl/weight_module.hpp"

namespace uqsl {

/// Index of a PBW monomial of one Nichols factor: y_2^{b2} y_12^{(b12)}
/// y_1^{b1} on the negative side, pairing with x_1^{b1} x_21^{b12} x_2^{b2}
/// on the positive side.
struct NicholsIndex {
  int b1 = 0;
  long b12 = 0;
  int b2 = 0;
  bool operator==(const NicholsIndex&) const = default;
  bool operator<(const NicholsIndex& o) const {
    return std::tie(b1, b12, b2) < std::tie(o.b1, o.b12, o.b2);
  }
};

/// All 4N monomial indices, b12 = 0..N-1.
inline std::vector<NicholsIndex> nichols_indices(long N) {
  std::vector<NicholsIndex> out;
  for (int b2 = 0; b2 <= 1; ++b2)
    for (long b12 = 0; b12 < N; ++b12)
      for (int b1 = 0; b1 <= 1; ++b1) out.push_back({b1, b12, b2});
  return out;
}

template <class B>
typename B::Scalar qint_scalar(const B& bk, long k) {
  typename B::Scalar r = bk.from_long(0);
  for (long i = 0; i < k; ++i) r += bk.q_pow(i);
  return r;
}

/// ((1-q)^k [k]_q!)^{-1}, the divided-power normalization.
template <class B>
typename B::Scalar divided_power_norm(const B& bk, long k) {
  typename B::Scalar d = bk.from_long(1);
  for (long i = 1; i <= k; ++i)
    d *= (bk.from_long(1) - bk.q_pow(1)) * qint_scalar(bk, i);
  return d.inv();
}

/// Operator of y_2^{b2} y_12^{(b12)} y_1^{b1} on a module.
template <class B>
Matrix<typename B::Scalar> y_monomial_op(const WeightModule<B>& V,
                                         const NicholsIndex& a) {
  auto m = Matrix<typename B::Scalar>::identity(V.dim());
  if (a.b1) m = V.y1 * m;
  if (a.b12) m = V.y12().pow((unsigned long)a.b12) * divided_power_norm(V.bk, a.b12) * m;
  if (a.b2) m = V.y2 * m;
  return m;
}

/// Operator of the dual PBW monomial x_1^{b1} x_21^{b12} x_2^{b2}.
template <class B>
Matrix<typename B::Scalar> x_monomial_op(const WeightModule<B>& V,
                                         const NicholsIndex& a) {
  auto m = Matrix<typename B::Scalar>::identity(V.dim());
  if (a.b2) m = V.x2 * m;
  if (a.b12) m = V.x21().pow((unsigned long)a.b12) * m;
  if (a.b1) m = V.x1 * m;
  return m;
}

template <class S>
S bk_pow(const S& s, long k) {
  if (k < 0) return bk_pow(s.inv(), -k);
  S r(1);
  S base = s;
  unsigned long e = (unsigned long)k;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

/// Full PBW monomial of u_q(sl_{2,I}) with a scalar coefficient:
/// c x_1^{a1} x_21^{a21} x_2^{a2} kappa_1^{n1} kappa_2^{n2}
///   y_2^{b2} y_12^{(b12)} y_1^{b1}.
template <class B>
struct PbwMonomial {
  typename B::Scalar coeff;
  NicholsIndex x;  // (a1, a21, a2) as (b1, b12, b2)
  long n1 = 0, n2 = 0;
  NicholsIndex y;
};

/// Applies a PBW monomial as a composition of generator actions.
template <class B>
Matrix<typename B::Scalar> act(const PbwMonomial<B>& m, const WeightModule<B>& V) {
  using S = typename B::Scalar;
  Matrix<S> op = y_monomial_op(V, m.y);
  Matrix<S> k(V.dim(), V.dim());
  for (size_t t = 0; t < V.dim(); ++t) {
    S e = bk_pow(V.bk.kappa_eigen(V.wt[t], 1), m.n1) *
          bk_pow(V.bk.kappa_eigen(V.wt[t], 2), m.n2);
    k.at(t, t) = e;
  }
  op = k * op;
  op = x_monomial_op(V, m.x) * op;
  return op * m.coeff;
}

/// Braiding Psi_{V,W}: V (x) W -> W (x) V from the universal R-matrix:
/// Psi(v (x) w) = sum_alpha (x_alpha gamma_{wt(y_alpha v)} w) (x) (y_alpha v),
/// summed over the 4N dual-basis monomials.
template <class B>
Matrix<typename B::Scalar> r_matrix_braiding(const WeightModule<B>& V,
                                             const WeightModule<B>& W,
                                             long N) {
  using S = typename B::Scalar;
  size_t dv = V.dim(), dw = W.dim();
  Matrix<S> psi(dw * dv, dv * dw);
  for (auto& a : nichols_indices(N)) {
    Matrix<S> ya = y_monomial_op(V, a);
    if (ya.is_zero()) continue;
    Matrix<S> xa = x_monomial_op(W, a);
    std::map<typename B::Weight, Matrix<S>> cache;
    for (size_t s = 0; s < dv; ++s) {
      bool used = false;
      for (size_t t = 0; t < dv; ++t)
        if (!ya.at(s, t).is_zero()) used = true;
      if (!used) continue;
      auto it = cache.find(V.wt[s]);
      if (it == cache.end())
        it = cache.emplace(V.wt[s], xa * W.gamma_weight(V.wt[s])).first;
      const Matrix<S>& A = it->second;
      for (size_t t = 0; t < dv; ++t) {
        const S& c = ya.at(s, t);
        if (c.is_zero()) continue;
        for (size_t wo = 0; wo < dw; ++wo)
          for (size_t wi = 0; wi < dw; ++wi) {
            const S& x = A.at(wo, wi);
            if (!x.is_zero()) psi.at(wo * dv + s, t * dw + wi) += c * x;
          }
      }
    }
  }
  return psi;
}

// ---------------------------------------------------------------------------
// Formal braided coproducts of the Nichols factors and the dual pairing.

/// Formal sum of (left monomial) (x) (right monomial) with integer Laurent
/// coefficients; used for both Nichols factors.
using BraidedTensorSum = std::map<std::pair<NicholsIndex, NicholsIndex>, LaurentInt>;

inline void add_term(BraidedTensorSum& s, NicholsIndex l, NicholsIndex r,
                     LaurentInt c) {
  if (c.is_zero()) return;
  auto& slot = s[{l, r}];
  slot += c;
  if (slot.is_zero()) s.erase({l, r});
}

/// Braided coproduct of y_2^{b2} y_12^{(k)} y_1^{b1}; all coefficients +-1.
BraidedTensorSum coproduct_neg(const NicholsIndex& m);

/// Braided coproduct of x_1^{a1} x_21^{k} x_2^{a2}; Gaussian-binomial
/// coefficients.
BraidedTensorSum coproduct_pos(const NicholsIndex& m);

/// Dual pairing <y_2^{b2} y_12^{(b12)} y_1^{b1}, x_1^{a1} x_21^{a21} x_2^{a2}>
/// = delta_{a1,b1} delta_{a21,b12} delta_{a2,b2}.
inline long pairing(const NicholsIndex& y, const NicholsIndex& x) {
  return y == x ? 1 : 0;
}

inline BraidedTensorSum coproduct_neg(const NicholsIndex& m) {
  if (m.b12 < 0) throw module_error("negative divided power");
  long k = m.b12;
  BraidedTensorSum out;
  auto I = [](int b2, long k12, int b1) { return NicholsIndex{b1, k12, b2}; };
  LaurentInt one(1);
  auto sgn = [](long e) { return e % 2 == 0 ? LaurentInt(1) : LaurentInt(-1); };
  if (!m.b2 && !m.b1) {
    for (long i = 0; i <= k; ++i) add_term(out, I(0, i, 0), I(0, k - i, 0), one);
    for (long i = 0; i < k; ++i) add_term(out, I(0, i, 1), I(1, k - i - 1, 0), one);
  } else if (!m.b2 && m.b1) {
    for (long i = 0; i <= k; ++i) {
      add_term(out, I(0, i, 0), I(0, k - i, 1), one);
      add_term(out, I(0, i, 1), I(0, k - i, 0), sgn(k - i));
    }
    for (long i = 0; i < k; ++i) add_term(out, I(0, i, 1), I(1, k - i - 1, 1), one);
  } else if (m.b2 && !m.b1) {
    for (long i = 0; i <= k; ++i) {
      add_term(out, I(1, i, 0), I(0, k - i, 0), one);
      add_term(out, I(0, i, 0), I(1, k - i, 0), sgn(i));
    }
    for (long i = 0; i < k; ++i) add_term(out, I(1, i, 1), I(1, k - i - 1, 0), one);
  } else {
    for (long i = 0; i <= k; ++i) {
      add_term(out, I(1, i, 1), I(0, k - i, 0), sgn(k - i));
      add_term(out, I(1, i, 0), I(0, k - i, 1), one);
      add_term(out, I(0, i, 1), I(1, k - i, 0), sgn(k));
      add_term(out, I(0, i, 0), I(1, k - i, 1), sgn(i));
    }
    for (long i = 0; i < k; ++i) add_term(out, I(1, i, 1), I(1, k - i - 1, 1), one);
  }
  return out;
}

inline BraidedTensorSum coproduct_pos(const NicholsIndex& m) {
  long k = m.b12;
  BraidedTensorSum out;
  auto X = [](int a1, long a21, int a2) { return NicholsIndex{a1, a21, a2}; };
  auto mq_pow = [](long i) {  // (-q)^i
    LaurentInt p = LaurentInt::q_power(i);
    return i % 2 == 0 ? p : -p;
  };
  auto corr = [&](long i) {  // binom(k,i) (1 - q^{k-i})
    return gauss_binom(k, i) * (LaurentInt(1) - LaurentInt::q_power(k - i));
  };
  if (!m.b1 && !m.b2) {
    for (long i = 0; i <= k; ++i)
      add_term(out, X(0, i, 0), X(0, k - i, 0), gauss_binom(k, i));
    for (long i = 0; i < k; ++i)
      add_term(out, X(0, i, 1), X(1, k - i - 1, 0), corr(i));
  } else if (m.b1 && !m.b2) {
    for (long i = 0; i <= k; ++i) {
      add_term(out, X(1, i, 0), X(0, k - i, 0), gauss_binom(k, i));
      add_term(out, X(0, i, 0), X(1, k - i, 0), gauss_binom(k, i) * mq_pow(i));
    }
    for (long i = 0; i < k; ++i)
      add_term(out, X(1, i, 1), X(1, k - i - 1, 0), corr(i));
  } else if (!m.b1 && m.b2) {
    for (long i = 0; i <= k; ++i) {
      add_term(out, X(0, i, 1), X(0, k - i, 0), gauss_binom(k, i) * mq_pow(k - i));
      add_term(out, X(0, i, 0), X(0, k - i, 1), gauss_binom(k, i));
    }
    for (long i = 0; i < k; ++i)
      add_term(out, X(0, i, 1), X(1, k - i - 1, 1), corr(i));
  } else {
    LaurentInt qk1 = LaurentInt::q_power(k + 1);
    if (k % 2 != 0) qk1 = -qk1;  // (-1)^k q^{k+1}
    for (long i = 0; i <= k; ++i) {
      add_term(out, X(1, i, 1), X(0, k - i, 0), gauss_binom(k, i) * mq_pow(k - i));
      add_term(out, X(0, i, 1), X(1, k - i, 0), gauss_binom(k, i) * qk1);
      add_term(out, X(1, i, 0), X(0, k - i, 1), gauss_binom(k, i));
      add_term(out, X(0, i, 0), X(1, k - i, 1), gauss_binom(k, i) * mq_pow(i));
    }
    for (long i = 0; i < k; ++i)
      add_term(out, X(1, i, 1), X(1, k - i - 1, 1), corr(i));
  }
  return out;
}

}  // namespace uqsl
