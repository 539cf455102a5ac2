#pragma once

#include "uqsl/braiding.hpp"

namespace uqsl {

/// Antipode of the PBW monomial x_1^{b1} x_21^{b12} x_2^{b2} as an operator:
/// S reverses the factors and sends each through S(x_i) = -gamma_i^{-1} x_i.
template <class B>
Matrix<typename B::Scalar> antipode_x_monomial_op(const WeightModule<B>& V,
                                                  const NicholsIndex& a) {
  using S = typename B::Scalar;
  Matrix<S> sx1 = antipode_x(V, 1), sx2 = antipode_x(V, 2);
  Matrix<S> sx21 = sx1 * sx2 - sx2 * sx1;  // S(x_2 x_1 - x_1 x_2)
  Matrix<S> m = Matrix<S>::identity(V.dim());
  // S(x_1^{b1} x_21^{b12} x_2^{b2}) = S(x_2)^{b2} S(x_21)^{b12} S(x_1)^{b1}
  if (a.b1) m = m * sx1;
  if (a.b12) m = sx21.pow((unsigned long)a.b12) * m;
  if (a.b2) m = sx2 * m;
  return m;
}

/// Drinfeld element u = S(R^{(2)}) R^{(1)} acting on V:
/// u v = sum_alpha gamma_{wt(y_alpha v)}^{-1} S(x_alpha) (y_alpha v).
template <class B>
Matrix<typename B::Scalar> drinfeld_u(const WeightModule<B>& V, long N) {
  using S = typename B::Scalar;
  size_t d = V.dim();
  Matrix<S> u(d, d);
  for (auto& a : nichols_indices(N)) {
    Matrix<S> ya = y_monomial_op(V, a);
    if (ya.is_zero()) continue;
    Matrix<S> sxa = antipode_x_monomial_op(V, a);
    std::map<typename B::Weight, Matrix<S>> cache;
    for (size_t s = 0; s < d; ++s) {
      bool used = false;
      for (size_t t = 0; t < d; ++t)
        if (!ya.at(s, t).is_zero()) used = true;
      if (!used) continue;
      auto it = cache.find(V.wt[s]);
      if (it == cache.end())
        it = cache.emplace(V.wt[s], V.gamma_weight(V.wt[s], -1) * sxa).first;
      const Matrix<S>& A = it->second;
      for (size_t t = 0; t < d; ++t) {
        const S& c = ya.at(s, t);
        if (c.is_zero()) continue;
        for (size_t r = 0; r < d; ++r)
          if (!A.at(r, s).is_zero()) u.at(r, t) += c * A.at(r, s);
      }
    }
  }
  return u;
}

/// Ribbon twist theta_V = nu . u^{-1} (the unique ribbon structure).
template <class B>
Matrix<typename B::Scalar> twist(const WeightModule<B>& V, long N) {
  return V.nu() * drinfeld_u(V, N).inverse();
}

/// Quantum dimension dim_q V = dim V_even - dim V_odd by weight parity.
template <class B>
typename B::Scalar qdim(const WeightModule<B>& V) {
  long s = 0;
  for (auto& w : V.wt) s += V.bk.nu_sign(w);
  return V.bk.from_long(s);
}

/// The four duality maps for V with the pivotal grouplike nu.
/// Conventions: ev: V* (x) V -> 1, coev: 1 -> V (x) V*,
/// ev_right(v (x) f) = f(nu v), coev_right: 1 -> sum f_i (x) nu^{-1} v_i.
template <class B>
struct DualityMaps {
  using S = typename B::Scalar;
  Matrix<S> ev;          // 1 x d^2 on V* (x) V
  Matrix<S> coev;        // d^2 x 1 into V (x) V*
  Matrix<S> ev_right;    // 1 x d^2 on V (x) V*
  Matrix<S> coev_right;  // d^2 x 1 into V* (x) V
};

template <class B>
DualityMaps<B> duality_maps(const WeightModule<B>& V) {
  using S = typename B::Scalar;
  size_t d = V.dim();
  DualityMaps<B> m;
  m.ev = Matrix<S>(1, d * d);
  m.coev = Matrix<S>(d * d, 1);
  m.ev_right = Matrix<S>(1, d * d);
  m.coev_right = Matrix<S>(d * d, 1);
  for (size_t i = 0; i < d; ++i) {
    S nu = V.bk.from_long(V.bk.nu_sign(V.wt[i]));  // self-inverse sign
    m.ev.at(0, i * d + i) = S(1);
    m.coev.at(i * d + i, 0) = S(1);
    m.ev_right.at(0, i * d + i) = nu;
    m.coev_right.at(i * d + i, 0) = nu;
  }
  return m;
}

/// Partial quantum trace over the last tensor factor W of an endomorphism f
/// of V (x) W: ptr(f)(v) = sum_i (Id (x) (f_i o nu))(f(v (x) e_i)).
/// Satisfies ptr(Id) = qdim(W) Id and ptr(g (x) h) = tr_q(h) g.
template <class B>
Matrix<typename B::Scalar> partial_qtrace_last(const Matrix<typename B::Scalar>& f,
                                               const WeightModule<B>& V,
                                               const WeightModule<B>& W) {
  using S = typename B::Scalar;
  size_t dv = V.dim(), dw = W.dim();
  Matrix<S> out(dv, dv);
  for (size_t vo = 0; vo < dv; ++vo)
    for (size_t vi = 0; vi < dv; ++vi) {
      S acc = S(0);
      for (size_t i = 0; i < dw; ++i) {
        const S& x = f.at(vo * dw + i, vi * dw + i);
        if (!x.is_zero())
          acc += x * W.bk.from_long(W.bk.nu_sign(W.wt[i]));
      }
      out.at(vo, vi) = acc;
    }
  return out;
}

/// Partial quantum trace over the first factor V (closing a strand to the
/// left uses nu^{-1}).
template <class B>
Matrix<typename B::Scalar> partial_qtrace_first(const Matrix<typename B::Scalar>& f,
                                                const WeightModule<B>& V,
                                                const WeightModule<B>& W) {
  using S = typename B::Scalar;
  size_t dv = V.dim(), dw = W.dim();
  Matrix<S> out(dw, dw);
  for (size_t wo = 0; wo < dw; ++wo)
    for (size_t wi = 0; wi < dw; ++wi) {
      S acc = S(0);
      for (size_t i = 0; i < dv; ++i) {
        const S& x = f.at(i * dw + wo, i * dw + wi);
        if (!x.is_zero())
          acc += x * V.bk.from_long(V.bk.nu_sign(V.wt[i]));
      }
      out.at(wo, wi) = acc;
    }
  return out;
}

}  // namespace uqsl
