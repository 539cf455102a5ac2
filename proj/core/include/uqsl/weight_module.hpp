#pragma once

#include <string>
#include <vector>

#include "uqsl/backend.hpp"
#include "uqsl/matrix.hpp"

namespace uqsl {

struct module_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Finite-dimensional Lambda- and Z-graded u_q(sl_{2,I})-module with exact
/// action matrices for the generators. kappa actions are implied by the
/// weights; depth records the t-exponent of the graded character (the
/// highest-weight normalization puts generators at depth 0, x_i lowers the
/// depth by one and y_i raises it).
template <class B>
struct WeightModule {
  using S = typename B::Scalar;
  using W = typename B::Weight;

  B bk;
  std::vector<W> wt;
  std::vector<long> depth;
  Matrix<S> x1, x2, y1, y2;
  std::vector<std::string> label;

  size_t dim() const { return wt.size(); }

  Matrix<S> kappa(int i) const {
    Matrix<S> m(dim(), dim());
    for (size_t t = 0; t < dim(); ++t) m.at(t, t) = bk.kappa_eigen(wt[t], i);
    return m;
  }

  /// Diagonal action of gamma_{\bf w} (or its inverse with sign = -1):
  /// eigenvalue q^{<w, U wt_t>} on the t-th basis vector.
  Matrix<S> gamma_weight(const W& w, int sign = +1) const {
    Matrix<S> m(dim(), dim());
    W ww = sign < 0 ? bk.neg(w) : w;
    for (size_t t = 0; t < dim(); ++t) m.at(t, t) = bk.gamma_pair(ww, wt[t]);
    return m;
  }

  /// gamma_i = kappa_i^{u_ii} kappa_{i+1}^{u_{i,i+1}}: eigenvalue
  /// q^{<alpha_i, U w>}.
  Matrix<S> gamma(int i, int sign = +1) const {
    Matrix<S> m(dim(), dim());
    for (size_t t = 0; t < dim(); ++t) {
      W a = alpha_weight(i);
      if (sign < 0) a = bk.neg(a);
      m.at(t, t) = bk.gamma_pair(a, wt[t]);
    }
    return m;
  }

  /// gammabar_i: eigenvalue q^{<w, U alpha_i>}.
  Matrix<S> gamma_bar(int i, int sign = +1) const {
    Matrix<S> m(dim(), dim());
    for (size_t t = 0; t < dim(); ++t) {
      W w = wt[t];
      if (sign < 0) w = bk.neg(w);
      m.at(t, t) = bk.gamma_pair(w, alpha_weight(i));
    }
    return m;
  }

  /// Pivotal grouplike nu = kappa_1^n kappa_2^n: +-1 by total weight parity.
  Matrix<S> nu() const {
    Matrix<S> m(dim(), dim());
    for (size_t t = 0; t < dim(); ++t)
      m.at(t, t) = bk.from_long(bk.nu_sign(wt[t]));
    return m;
  }

  /// x_21 = x_2 x_1 - x_1 x_2 (q_21 = 1).
  Matrix<S> x21() const { return x2 * x1 - x1 * x2; }
  /// y_12 = y_1 y_2 - q y_2 y_1 (q_12 = q).
  Matrix<S> y12() const { return y1 * y2 - (y2 * y1) * bk.q_pow(1); }

  W alpha_weight(int i) const;

  /// Structural sanity: generator actions shift weights and depths as the
  /// grading demands. Throws module_error on violation.
  void check_grading() const {
    auto chk = [&](const Matrix<S>& m, int coord, long wdelta, long ddelta) {
      for (size_t i = 0; i < dim(); ++i)
        for (size_t j = 0; j < dim(); ++j) {
          if (m.at(i, j).is_zero()) continue;
          if (!(wt[i] == bk.shift(wt[j], coord, wdelta)))
            throw module_error("generator action violates the weight grading");
          if (depth[i] != depth[j] + ddelta)
            throw module_error("generator action violates the Z-grading");
        }
    };
    chk(x1, 1, +1, -1);
    chk(x2, 2, +1, -1);
    chk(y1, 1, -1, +1);
    chk(y2, 2, -1, +1);
  }
};

template <>
inline SymbolicBackend::Weight WeightModule<SymbolicBackend>::alpha_weight(int i) const {
  return SymbolicBackend::alpha(i);
}
template <>
inline CycloBackend::Weight WeightModule<CycloBackend>::alpha_weight(int i) const {
  return i == 1 ? CycloWeight{1, 0} : CycloWeight{0, 1};
}

template <class B>
WeightModule<B> trivial_module(const B& bk) {
  WeightModule<B> m;
  m.bk = bk;
  m.wt.resize(1);
  m.depth.assign(1, 0);
  m.x1 = m.x2 = m.y1 = m.y2 = Matrix<typename B::Scalar>(1, 1);
  m.label = {"1"};
  return m;
}

/// Tensor product with the coproduct action
/// g (v (x) w) = g v (x) w + gamma_g v (x) g w; basis lexicographic with the
/// first factor major.
template <class B>
WeightModule<B> tensor(const WeightModule<B>& V, const WeightModule<B>& W) {
  using S = typename B::Scalar;
  WeightModule<B> m;
  m.bk = V.bk;
  size_t dv = V.dim(), dw = W.dim();
  m.wt.reserve(dv * dw);
  m.depth.reserve(dv * dw);
  for (size_t i = 0; i < dv; ++i)
    for (size_t j = 0; j < dw; ++j) {
      m.wt.push_back(m.bk.add(V.wt[i], W.wt[j]));
      m.depth.push_back(V.depth[i] + W.depth[j]);
      if (!V.label.empty() && !W.label.empty())
        m.label.push_back(V.label[i] + "(x)" + W.label[j]);
    }
  auto act = [&](const Matrix<S>& gv, const Matrix<S>& gammav,
                 const Matrix<S>& gw) {
    return Matrix<S>::kron(gv, Matrix<S>::identity(dw)) +
           Matrix<S>::kron(gammav, gw);
  };
  m.x1 = act(V.x1, V.gamma(1), W.x1);
  m.x2 = act(V.x2, V.gamma(2), W.x2);
  m.y1 = act(V.y1, V.gamma_bar(1), W.y1);
  m.y2 = act(V.y2, V.gamma_bar(2), W.y2);
  return m;
}

/// Antipode of a generator as an operator: S(x_i) = -gamma_i^{-1} x_i,
/// S(y_i) = -gammabar_i^{-1} y_i.
template <class B>
Matrix<typename B::Scalar> antipode_x(const WeightModule<B>& V, int i) {
  return -(V.gamma(i, -1) * (i == 1 ? V.x1 : V.x2));
}
template <class B>
Matrix<typename B::Scalar> antipode_y(const WeightModule<B>& V, int i) {
  return -(V.gamma_bar(i, -1) * (i == 1 ? V.y1 : V.y2));
}

/// Left dual with the antipode-twisted action (h f)(v) = f(S(h) v); dual
/// basis, weights and depths negated.
template <class B>
WeightModule<B> dual_module(const WeightModule<B>& V) {
  WeightModule<B> m;
  m.bk = V.bk;
  for (size_t i = 0; i < V.dim(); ++i) {
    m.wt.push_back(m.bk.neg(V.wt[i]));
    m.depth.push_back(-V.depth[i]);
    if (!V.label.empty()) m.label.push_back(V.label[i] + "*");
  }
  m.x1 = antipode_x(V, 1).transpose();
  m.x2 = antipode_x(V, 2).transpose();
  m.y1 = antipode_y(V, 1).transpose();
  m.y2 = antipode_y(V, 2).transpose();
  return m;
}

}  // namespace uqsl
