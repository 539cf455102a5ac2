#include "uqsl/tangle.hpp"

#include <mutex>
#include <sstream>

#include "json.hpp"

namespace uqsl {

namespace {

template <class B, class S, class Conv>
CrossKit<S> build_kit(const WeightModule<B>& W, long N, Conv conv) {
  WeightModule<B> Wd = dual_module(W);
  const WeightModule<B>* mods[2] = {&W, &Wd};
  CrossKit<S> kit;
  kit.d = W.dim();
  auto conv_mat = [&](const Matrix<typename B::Scalar>& m) {
    Matrix<S> out(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
      for (size_t j = 0; j < m.cols(); ++j)
        if (!m.at(i, j).is_zero()) out.at(i, j) = conv(m.at(i, j));
    return out;
  };
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      auto psi_ab = r_matrix_braiding(*mods[a], *mods[b], N);
      auto psi_ba = r_matrix_braiding(*mods[b], *mods[a], N);
      kit.pos[a][b] = conv_mat(-(psi_ba.inverse()));
      kit.neg[a][b] = conv_mat(-psi_ab);
    }
  auto maps = duality_maps(W);
  kit.ev = conv_mat(maps.ev);
  kit.coev = conv_mat(maps.coev);
  kit.ev_right = conv_mat(maps.ev_right);
  kit.coev_right = conv_mat(maps.coev_right);
  for (size_t i = 0; i < kit.d; ++i) {
    int s = W.bk.nu_sign(W.wt[i]);
    kit.nu_sign.push_back(s);
    kit.nu.push_back(S(s));
  }
  return kit;
}

size_t ipow(size_t b, long e) {
  size_t r = 1;
  for (long i = 0; i < e; ++i) r *= b;
  return r;
}

/// M' = (Id_{d^pos} (x) X (x) Id) M for X acting on factors (pos, pos+1).
template <class S>
Matrix<S> apply_local(const Matrix<S>& X, long pos, long k, size_t d,
                      const Matrix<S>& M) {
  size_t high = ipow(d, pos), low = ipow(d, k - pos - 2), dd = d * d;
  size_t dim = M.rows();
  Matrix<S> out(dim, M.cols());
  for (size_t a = 0; a < high; ++a)
    for (size_t b = 0; b < low; ++b)
      for (size_t m = 0; m < dd; ++m) {
        size_t row = (a * dd + m) * low + b;
        for (size_t mp = 0; mp < dd; ++mp) {
          const S& x = X.at(m, mp);
          if (x.is_zero()) continue;
          size_t src = (a * dd + mp) * low + b;
          for (size_t c = 0; c < M.cols(); ++c) {
            const S& v = M.at(src, c);
            if (!v.is_zero()) out.at(row, c) += x * v;
          }
        }
      }
  return out;
}

template <class S>
Matrix<S> ptr_last(const Matrix<S>& f, size_t dl, size_t dw,
                   const std::vector<int>& sign) {
  Matrix<S> out(dl, dl);
  for (size_t vo = 0; vo < dl; ++vo)
    for (size_t vi = 0; vi < dl; ++vi) {
      S acc = S(0);
      for (size_t i = 0; i < dw; ++i) {
        const S& x = f.at(vo * dw + i, vi * dw + i);
        if (!x.is_zero()) acc += (sign[i] < 0 ? S(0) - x : x);
      }
      out.at(vo, vi) = acc;
    }
  return out;
}

template <class S>
Matrix<S> ptr_first(const Matrix<S>& f, size_t dv, size_t dw,
                    const std::vector<int>& sign) {
  Matrix<S> out(dw, dw);
  for (size_t wo = 0; wo < dw; ++wo)
    for (size_t wi = 0; wi < dw; ++wi) {
      S acc = S(0);
      for (size_t i = 0; i < dv; ++i) {
        const S& x = f.at(i * dw + wo, i * dw + wi);
        if (!x.is_zero()) acc += (sign[i] < 0 ? S(0) - x : x);
      }
      out.at(wo, wi) = acc;
    }
  return out;
}

}  // namespace

template <class S>
Matrix<S> evaluate_braid(const CrossKit<S>& kit, const BraidSpec& b,
                         bool dual_color) {
  if (b.strands < 1) throw tangle_error("braid needs at least one strand");
  if (b.cut < 1 || b.cut > b.strands) throw tangle_error("cut strand out of range");
  for (long w : b.word)
    if (w == 0 || std::labs(w) >= b.strands)
      throw tangle_error("braid letter out of range");
  size_t d = kit.d;
  size_t dim = ipow(d, b.strands);
  Matrix<S> M = Matrix<S>::identity(dim);
  int o = dual_color ? 1 : 0;
  for (long w : b.word) {
    const Matrix<S>& X = w > 0 ? kit.pos[o][o] : kit.neg[o][o];
    M = apply_local(X, std::labs(w) - 1, b.strands, d, M);
  }
  // close right strands (strands down to cut+1), then left ones
  long kleft = b.strands;
  while (kleft > b.cut) {
    M = ptr_last(M, ipow(d, kleft - 1), d, kit.nu_sign);
    --kleft;
  }
  while (kleft > 1) {
    M = ptr_first(M, d, ipow(d, kleft - 1), kit.nu_sign);
    --kleft;
  }
  return M;
}

template <class S>
Matrix<S> evaluate_morse(const CrossKit<S>& kit, const MorseTangle& t) {
  size_t d = kit.d;
  std::vector<bool> boundary{false};  // single upward W strand
  Matrix<S> M = Matrix<S>::identity(d);
  for (auto& slice : t.slices) {
    std::vector<bool> next;
    Matrix<S> op = Matrix<S>::identity(1);
    size_t consumed = 0;
    for (auto& p : slice) {
      Matrix<S> pm;
      switch (p.kind) {
        case MorsePiece::Id: {
          if (consumed >= boundary.size() || boundary[consumed] != p.down)
            throw tangle_error("identity strand orientation mismatch");
          ++consumed;
          pm = Matrix<S>::identity(d);
          next.push_back(p.down);
          break;
        }
        case MorsePiece::Cross: {
          if (consumed + 2 > boundary.size()) throw tangle_error("crossing arity");
          if (boundary[consumed] != p.or1_down ||
              boundary[consumed + 1] != p.or2_down)
            throw tangle_error("crossing orientation mismatch");
          consumed += 2;
          int a = p.or1_down ? 1 : 0, b = p.or2_down ? 1 : 0;
          pm = p.positive ? kit.pos[a][b] : kit.neg[a][b];
          next.push_back(p.or2_down);
          next.push_back(p.or1_down);
          break;
        }
        case MorsePiece::Cup: {
          pm = p.left_up ? kit.coev : kit.coev_right;
          next.push_back(!p.left_up);
          next.push_back(p.left_up);
          break;
        }
        case MorsePiece::Cap: {
          if (consumed + 2 > boundary.size()) throw tangle_error("cap arity");
          bool l = boundary[consumed], r = boundary[consumed + 1];
          // left_up cap consumes (up, down); the other (down, up)
          if (p.left_up ? (l || !r) : (!l || r))
            throw tangle_error("cap orientation mismatch");
          consumed += 2;
          pm = p.left_up ? kit.ev_right : kit.ev;
          break;
        }
      }
      op = Matrix<S>::kron(op, pm);
    }
    if (consumed != boundary.size()) throw tangle_error("slice arity mismatch");
    M = op * M;
    boundary = next;
  }
  if (boundary != std::vector<bool>{false})
    throw tangle_error("tangle does not end on a single upward strand");
  return M;
}

template <class S>
S extract_scalar(const Matrix<S>& endo) {
  if (endo.rows() != endo.cols() || endo.rows() == 0)
    throw tangle_error("endomorphism expected");
  const S& lambda = endo.at(0, 0);
  for (size_t i = 0; i < endo.rows(); ++i)
    for (size_t j = 0; j < endo.cols(); ++j) {
      if (i == j && !(endo.at(i, j) == lambda))
        throw tangle_error("broken functoriality: unequal diagonal");
      if (i != j && !endo.at(i, j).is_zero())
        throw tangle_error("broken functoriality: off-diagonal residue");
    }
  return lambda;
}

template Matrix<LaurentInt> evaluate_braid(const CrossKit<LaurentInt>&, const BraidSpec&, bool);
template Matrix<CycloScalar> evaluate_braid(const CrossKit<CycloScalar>&, const BraidSpec&, bool);
template Matrix<LaurentInt> evaluate_morse(const CrossKit<LaurentInt>&, const MorseTangle&);
template Matrix<CycloScalar> evaluate_morse(const CrossKit<CycloScalar>&, const MorseTangle&);
template LaurentInt extract_scalar(const Matrix<LaurentInt>&);
template CycloScalar extract_scalar(const Matrix<CycloScalar>&);

CrossKit<LaurentInt> symbolic_kit() {
  SModule W = symbolic_W();
  return build_kit<SymbolicBackend, LaurentInt>(
      W, 6, [](const RatFuncQ& v) { return v.to_laurent(); });
}

CrossKit<CycloScalar> cyclotomic_kit(long N) {
  CModule W = canonical_W(N);
  return build_kit<CycloBackend, CycloScalar>(W, N,
                                              [](const CycloScalar& v) { return v; });
}

namespace {
const CrossKit<LaurentInt>& cached_symbolic_kit() {
  static const CrossKit<LaurentInt> kit = symbolic_kit();
  return kit;
}
}  // namespace

LaurentInt invariant(const BraidSpec& b) {
  return extract_scalar(evaluate_braid(cached_symbolic_kit(), b));
}

LaurentInt invariant(const MorseTangle& t) {
  return extract_scalar(evaluate_morse(cached_symbolic_kit(), t));
}

CycloScalar invariant_cyclo(const BraidSpec& b, long N) {
  CrossKit<CycloScalar> kit = cyclotomic_kit(N);
  return extract_scalar(evaluate_braid(kit, b));
}

LaurentInt torus2_formula(long b) {
  if (b == 0) throw tangle_error("torus parameter must be nonzero");
  bool mirror = b < 0;
  if (mirror) b = -b;
  LaurentInt r(b);
  for (long i = 1; i <= b - 1; ++i)
    r += LaurentInt::monomial(2 * (b - i), mirror ? i : -i);
  if (b % 2 == 0) r = -r;  // (-1)^{b+1}
  return r;
}

std::vector<LaurentInt> torus2_by_skein(long bmax) {
  // values I(T(2,-b)) seeded with b = 0 (two-component unlink), 1, 2
  std::vector<LaurentInt> v;
  v.push_back(LaurentInt());
  v.push_back(LaurentInt(1));
  v.push_back(LaurentInt::parse("-2-2*q^-1"));
  LaurentInt c2 = LaurentInt::parse("2+1*q^-1");
  LaurentInt c1 = LaurentInt::parse("1+2*q^-1");
  LaurentInt c0 = LaurentInt::q_power(-1);
  for (long b = 3; b <= bmax; ++b)
    v.push_back(-(c2 * v[(size_t)(b - 1)] + c1 * v[(size_t)(b - 2)] +
                  c0 * v[(size_t)(b - 3)]));
  return v;
}

SkeinReport skein_verify() {
  using S = RatFuncQ;
  SModule W = symbolic_W();
  Matrix<S> psi = -r_matrix_braiding(W, W, 6);  // the crossing operator
  Matrix<S> id = Matrix<S>::identity(16);
  S q = RatFuncQ::q_power(1), qi = RatFuncQ::q_power(-1), one(1);
  SkeinReport rep;
  Matrix<S> cubic = psi.pow(3) + psi.pow(2) * (S(2) + qi) +
                    psi * (one + S(2) * qi) + id * qi;
  rep.cubic_zero = cubic.is_zero();
  // spectral projector onto the -q^{-1} eigenspace: (psi + 1)^2 / (1-q^{-1})^2
  Matrix<S> e = (psi + id).pow(2) * ((one - qi) * (one - qi)).inv();
  rep.idempotent = (e * e == e);
  rep.rank_e = e.rank();
  Matrix<S> quad = psi + psi.inverse() + id * S(2) + e * (q + qi - S(2));
  rep.quadratic_zero = quad.is_zero();
  rep.spectrum_ok = rep.cubic_zero && (psi + id).rank() < 16 &&
                    (psi + id * qi).rank() < 16;
  // e fixes the highest weight vector of the L(2n-1,2) summand; in this
  // basis (w2 = y2 y1 w0) it is w0 (x) w1 + q w1 (x) w0
  std::vector<S> u(16, S(0));
  u[0 * 4 + 1] = one;
  u[1 * 4 + 0] = q;
  std::vector<S> eu(16, S(0));
  for (size_t i = 0; i < 16; ++i)
    for (size_t j = 0; j < 16; ++j) eu[i] += e.at(i, j) * u[j];
  rep.image_ok = true;
  for (size_t i = 0; i < 16; ++i)
    if (!(eu[i] == u[i])) rep.image_ok = false;
  return rep;
}

BraidSpec torus_braid(long b) {
  BraidSpec s;
  s.strands = 2;
  s.cut = 1;
  for (long i = 0; i < std::labs(b); ++i) s.word.push_back(b > 0 ? 1 : -1);
  return s;
}

BraidSpec mirror(const BraidSpec& b) {
  BraidSpec m = b;
  for (auto& w : m.word) w = -w;
  return m;
}

BraidSpec braid_of(const KnotEntry& e) {
  if (!e.confirmed)
    throw tangle_error("no validated presentation for " + e.name);
  BraidSpec b;
  b.strands = e.strands;
  b.word = e.word;
  b.cut = 1;
  return b;
}

MorseTangle parse_tangle_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  MorseTangle t;
  for (auto& slice : j) {
    std::vector<MorsePiece> ps;
    for (auto& p : slice) {
      MorsePiece m;
      if (p.contains("id")) {
        m.kind = MorsePiece::Id;
        m.down = p.at("id") == "down";
      } else if (p.contains("x")) {
        m.kind = MorsePiece::Cross;
        m.positive = p.at("x") == "pos";
        std::string ors = p.value("or", "uu");
        m.or1_down = ors.size() > 0 && ors[0] == 'd';
        m.or2_down = ors.size() > 1 && ors[1] == 'd';
      } else if (p.contains("cup")) {
        m.kind = MorsePiece::Cup;
        m.left_up = p.at("cup") == "l";
      } else if (p.contains("cap")) {
        m.kind = MorsePiece::Cap;
        m.left_up = p.at("cap") == "l";
      } else {
        throw tangle_error("unknown tangle piece");
      }
      ps.push_back(m);
    }
    t.slices.push_back(ps);
  }
  return t;
}

}  // namespace uqsl
