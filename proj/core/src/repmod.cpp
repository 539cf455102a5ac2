#include "uqsl/repmod.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <sstream>

namespace uqsl {

namespace {

long mod(long a, long N) {
  long r = a % N;
  return r < 0 ? r + N : r;
}

size_t vidx(long N, int b2, long k, int b1) {
  return (size_t)(b2 * 2 * N + k * 2 + b1);
}

}  // namespace

CModule standard_module(long N, long i, long j) {
  CycloBackend bk(N);
  CModule m;
  m.bk = bk;
  size_t d = (size_t)(4 * N);
  m.wt.resize(d);
  m.depth.resize(d);
  m.label.resize(d);
  for (int b2 = 0; b2 <= 1; ++b2)
    for (long k = 0; k < N; ++k)
      for (int b1 = 0; b1 <= 1; ++b1) {
        size_t t = vidx(N, b2, k, b1);
        m.wt[t] = CycloWeight{mod(i - k - b1, N), mod(j - k - b2, N)};
        m.depth[t] = b1 + b2 + 2 * k;
        std::ostringstream os;
        os << "v(" << b2 << "," << k << "," << b1 << ")";
        m.label[t] = os.str();
      }
  using S = CycloScalar;
  Matrix<S> x1(d, d), x2(d, d), y1(d, d), y2(d, d);
  auto q = [&](long e) { return bk.q_pow(e); };
  auto sgn = [&](long e) { return bk.from_long(e % 2 == 0 ? 1 : -1); };
  auto qint = [&](long k) { return qint_scalar(bk, k); };
  S one = bk.from_long(1), oneminusq = one - q(1);
  auto put = [&](Matrix<S>& a, int b2o, long ko, int b1o, int b2i, long ki, int b1i,
                 const S& c) {
    if (c.is_zero()) return;
    if (ko < 0 || ko >= N) throw module_error("standard action out of range");
    a.at(vidx(N, b2o, ko, b1o), vidx(N, b2i, ki, b1i)) += c;
  };
  for (long k = 0; k < N; ++k) {
    // y_1
    put(y1, 0, k, 1, 0, k, 0, sgn(k) * q(k));
    if (k + 1 < N || (oneminusq * qint(k + 1)).is_zero()) {
      if (k + 1 < N) {
        put(y1, 0, k + 1, 0, 1, k, 0, oneminusq * qint(k + 1));
        put(y1, 0, k + 1, 1, 1, k, 1, oneminusq * qint(k + 1));
      }
    } else {
      throw module_error("nonzero action beyond the PBW range");
    }
    put(y1, 1, k, 1, 1, k, 0, sgn(k) * q(k + 1));
    // y_2
    put(y2, 1, k, 0, 0, k, 0, one);
    put(y2, 1, k, 1, 0, k, 1, one);
    // x_1
    if (k >= 1) put(x1, 1, k - 1, 0, 0, k, 0, -q(j - k));
    put(x1, 0, k, 0, 0, k, 1, sgn(k) * q(-k) * (one - q(j)));
    if (k >= 1) put(x1, 1, k - 1, 1, 0, k, 1, -q(j - k));
    put(x1, 1, k, 0, 1, k, 1, sgn(k) * q(-k - 1) * (one - q(j)));
    // x_2
    if (k >= 1) put(x2, 0, k - 1, 1, 0, k, 0, sgn(k - 1));
    put(x2, 0, k, 0, 1, k, 0, one - q(i - k));
    if (k >= 1) put(x2, 1, k - 1, 1, 1, k, 0, sgn(k));
    put(x2, 0, k, 1, 1, k, 1, one - q(i - k - 1));
  }
  m.x1 = x1;
  m.x2 = x2;
  m.y1 = y1;
  m.y2 = y2;
  m.check_grading();
  return m;
}

namespace {

using S = CycloScalar;
using Vec = std::vector<S>;

Vec basis_vec(size_t dim, size_t t) {
  Vec v(dim, S(0));
  v[t] = S(1);
  return v;
}

Vec mat_apply(const Matrix<S>& a, const Vec& v) {
  Vec out(a.rows(), S(0));
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j)
      if (!a.at(i, j).is_zero() && !v[j].is_zero()) out[i] += a.at(i, j) * v[j];
  return out;
}

/// Quotient of M by the submodule generated by `gens` (closed under the
/// generator actions). The quotient basis is the set of standard basis
/// vectors at non-pivot coordinates.
CModule quotient_by(const CModule& M, std::vector<Vec> gens) {
  size_t d = M.dim();
  // invariant closure, maintained as an rref matrix
  Matrix<S> U(0, 0);
  std::vector<Vec> rows;
  auto add_rows = [&](const std::vector<Vec>& vs) {
    size_t before;
    Matrix<S> m(rows.size() + vs.size(), d);
    size_t r = 0;
    for (auto& v : rows) {
      for (size_t c = 0; c < d; ++c) m.at(r, c) = v[c];
      ++r;
    }
    for (auto& v : vs) {
      for (size_t c = 0; c < d; ++c) m.at(r, c) = v[c];
      ++r;
    }
    before = rows.size();
    auto piv = m.rref();
    rows.clear();
    for (size_t k = 0; k < piv.size(); ++k) {
      Vec v(d, S(0));
      for (size_t c = 0; c < d; ++c) v[c] = m.at(k, c);
      rows.push_back(v);
    }
    return rows.size() != before;
  };
  add_rows(gens);
  const Matrix<S>* ops[6] = {&M.x1, &M.x2, &M.y1, &M.y2, nullptr, nullptr};
  Matrix<S> k1 = M.kappa(1), k2 = M.kappa(2);
  ops[4] = &k1;
  ops[5] = &k2;
  bool grew = true;
  while (grew) {
    std::vector<Vec> next;
    for (auto& v : rows)
      for (auto* op : ops) next.push_back(mat_apply(*op, v));
    grew = add_rows(next);
  }
  // pivots of the submodule
  Matrix<S> u(rows.size(), d);
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < d; ++c) u.at(r, c) = rows[r][c];
  auto piv = u.rref();
  std::vector<bool> is_piv(d, false);
  for (size_t p : piv) is_piv[p] = true;
  std::vector<size_t> keep;
  for (size_t c = 0; c < d; ++c)
    if (!is_piv[c]) keep.push_back(c);
  std::vector<long> pos(d, -1);
  for (size_t t = 0; t < keep.size(); ++t) pos[keep[t]] = (long)t;

  auto project = [&](const Vec& v) {
    Vec out(keep.size(), S(0));
    for (size_t c = 0; c < d; ++c) {
      if (v[c].is_zero()) continue;
      if (pos[c] >= 0) {
        out[(size_t)pos[c]] += v[c];
      } else {
        // pivot coordinate: e_c = -sum over non-pivots of rref row entries
        size_t r = (size_t)(std::find(piv.begin(), piv.end(), c) - piv.begin());
        for (size_t t = 0; t < keep.size(); ++t) {
          const S& e = u.at(r, keep[t]);
          if (!e.is_zero()) out[t] -= v[c] * e;
        }
      }
    }
    return out;
  };

  CModule Q;
  Q.bk = M.bk;
  for (size_t t : keep) {
    Q.wt.push_back(M.wt[t]);
    Q.depth.push_back(M.depth[t]);
    if (!M.label.empty()) Q.label.push_back(M.label[t]);
  }
  auto build = [&](const Matrix<S>& a) {
    Matrix<S> out(keep.size(), keep.size());
    for (size_t t = 0; t < keep.size(); ++t) {
      Vec img = project(mat_apply(a, basis_vec(d, keep[t])));
      for (size_t r = 0; r < keep.size(); ++r) out.at(r, t) = img[r];
    }
    return out;
  };
  Q.x1 = build(M.x1);
  Q.x2 = build(M.x2);
  Q.y1 = build(M.y1);
  Q.y2 = build(M.y2);
  Q.check_grading();
  return Q;
}

}  // namespace

CModule simple_module(long N, long i, long j) {
  i = mod(i, N);
  j = mod(j, N);
  CModule M = standard_module(N, i, j);
  size_t d = M.dim();
  std::vector<Vec> gens;
  if (i == 0 && j == 0) {
    gens.push_back(basis_vec(d, vidx(N, 1, 0, 0)));
    gens.push_back(basis_vec(d, vidx(N, 0, 0, 1)));
  } else if (j == 0) {
    gens.push_back(basis_vec(d, vidx(N, 0, 0, 1)));
    gens.push_back(basis_vec(d, vidx(N, 1, i, 0)));
  } else if (i == 0) {
    gens.push_back(basis_vec(d, vidx(N, 1, 0, 0)));
    gens.push_back(basis_vec(d, vidx(N, 0, j, 1)));
  } else if (mod(i + j, N) != 0) {
    long k = mod(i + j, N);
    CycloBackend bk(N);
    Vec w(d, S(0));
    S c = bk.from_long(1) - bk.q_pow(-j);
    if (k % 2 != 0) c = -c;  // (-1)^k (1 - q^{-j})
    w[vidx(N, 0, k, 0)] = c;
    w[vidx(N, 1, k - 1, 1)] = bk.from_long(1);
    gens.push_back(w);
  } else {
    return M;  // i + j = N: the standard module is simple
  }
  return quotient_by(M, gens);
}

namespace {
struct ModuleCache {
  std::map<std::tuple<long, long, long, int>, std::unique_ptr<CModule>> map;
  std::shared_mutex mu;
  const CModule& get(long N, long i, long j, int kind) {
    auto key = std::make_tuple(N, i, j, kind);
    {
      std::shared_lock lock(mu);
      auto it = map.find(key);
      if (it != map.end()) return *it->second;
    }
    auto built = std::make_unique<CModule>(kind == 0 ? standard_module(N, i, j)
                                                     : simple_module(N, i, j));
    std::unique_lock lock(mu);
    auto [it, inserted] = map.emplace(key, std::move(built));
    return *it->second;
  }
};
ModuleCache g_cache;
}  // namespace

const CModule& standard_module_cached(long N, long i, long j) {
  return g_cache.get(N, mod(i, N), mod(j, N), 0);
}
const CModule& simple_module_cached(long N, long i, long j) {
  return g_cache.get(N, mod(i, N), mod(j, N), 1);
}

long simple_dimension_formula(long N, long i, long j) {
  i = mod(i, N);
  j = mod(j, N);
  if (j == 0) return 2 * i + 1;
  if (i == 0) return 2 * j + 1;
  return i + j <= N ? 4 * (i + j) : 4 * (i + j - N);
}

std::vector<HWVector> highest_weight_vectors(const CModule& V) {
  std::vector<HWVector> out;
  std::map<CycloWeight, std::vector<size_t>> spaces;
  for (size_t t = 0; t < V.dim(); ++t) spaces[V.wt[t]].push_back(t);
  for (auto& [w, idx] : spaces) {
    // stacked restriction of (x1; x2) to the weight space
    Matrix<S> m(2 * V.dim(), idx.size());
    for (size_t c = 0; c < idx.size(); ++c)
      for (size_t r = 0; r < V.dim(); ++r) {
        m.at(r, c) = V.x1.at(r, idx[c]);
        m.at(V.dim() + r, c) = V.x2.at(r, idx[c]);
      }
    Matrix<S> K = m.kernel();
    for (size_t c = 0; c < K.cols(); ++c) {
      HWVector h;
      h.coords.assign(V.dim(), S(0));
      long depth = 0;
      for (size_t r = 0; r < K.rows(); ++r) {
        h.coords[idx[r]] = K.at(r, c);
        if (!K.at(r, c).is_zero()) depth = V.depth[idx[r]];
      }
      h.weight = w;
      h.depth = depth;
      out.push_back(std::move(h));
    }
  }
  return out;
}

GradedCharacter graded_character(const CModule& V) {
  GradedCharacter ch;
  for (size_t t = 0; t < V.dim(); ++t)
    ch[{V.wt[t].i1, V.wt[t].i2, V.depth[t]}] += 1;
  return ch;
}

GradedCharacter char_mul(const GradedCharacter& a, const GradedCharacter& b, long N) {
  GradedCharacter out;
  for (auto& [ka, va] : a)
    for (auto& [kb, vb] : b) {
      CharKey k{mod(ka.w1 + kb.w1, N), mod(ka.w2 + kb.w2, N), ka.d + kb.d};
      out[k] += va * vb;
      if (out[k] == 0) out.erase(k);
    }
  return out;
}

GradedCharacter char_shift(GradedCharacter a, long d) {
  GradedCharacter out;
  for (auto& [k, v] : a) out[{k.w1, k.w2, k.d + d}] = v;
  return out;
}

long char_mass(const GradedCharacter& a) {
  long s = 0;
  for (auto& [k, v] : a) s += v;
  return s;
}

std::vector<CompositionFactor> peel_character(GradedCharacter ch, long N) {
  for (auto it = ch.begin(); it != ch.end();)
    it = it->second == 0 ? ch.erase(it) : std::next(it);
  std::vector<CompositionFactor> out;
  while (!ch.empty()) {
    // lowest t-degree (= highest Z-degree); among those the lexicographically
    // largest weight
    long d = ch.begin()->first.d;
    CharKey best = ch.begin()->first;
    for (auto& [k, v] : ch) {
      if (k.d != d) break;
      if (std::tie(k.w1, k.w2) > std::tie(best.w1, best.w2)) best = k;
    }
    long mult = ch[best];
    if (mult < 0) throw module_error("character peeling hit a negative multiplicity");
    GradedCharacter lc =
        char_shift(graded_character(simple_module_cached(N, best.w1, best.w2)), d);
    for (auto& [k, v] : lc) {
      ch[k] -= v * mult;
      if (ch[k] == 0) ch.erase(k);
    }
    out.push_back({best.w1, best.w2, d});
    for (long m = 1; m < mult; ++m) out.push_back({best.w1, best.w2, d});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CompositionFactor> composition_factors(const CModule& V) {
  return peel_character(graded_character(V), V.bk.N);
}

std::vector<CompositionFactor> standard_tensor_decomposition(long N, long a, long b,
                                                             long c, long d) {
  std::vector<CompositionFactor> out;
  out.push_back({mod(a + c, N), mod(b + d, N), 0});
  for (long l = 1; l <= N; ++l) {
    out.push_back({mod(a + c - l, N), mod(b + d - l + 1, N), 2 * l - 1});
    out.push_back({mod(a + c - l + 1, N), mod(b + d - l, N), 2 * l - 1});
  }
  for (long l = 1; l <= N - 1; ++l) {
    out.push_back({mod(a + c - l, N), mod(b + d - l, N), 2 * l});
    out.push_back({mod(a + c - l, N), mod(b + d - l, N), 2 * l});
  }
  out.push_back({mod(a + c - N, N), mod(b + d - N, N), 2 * N});
  std::sort(out.begin(), out.end());
  return out;
}

namespace {
GradedCharacter combo_character(const LCombo& c, long N) {
  GradedCharacter out;
  for (auto& [key, mult] : c) {
    auto [i, j, shift] = key;
    GradedCharacter lc =
        char_shift(graded_character(simple_module_cached(N, i, j)), shift);
    for (auto& [k, v] : lc) {
      out[k] += v * mult;
      if (out[k] == 0) out.erase(k);
    }
  }
  return out;
}

/// Peel allowing negative multiplicities (general Grothendieck elements).
LCombo peel_signed(GradedCharacter ch, long N) {
  for (auto it = ch.begin(); it != ch.end();)
    it = it->second == 0 ? ch.erase(it) : std::next(it);
  LCombo out;
  while (!ch.empty()) {
    long d = ch.begin()->first.d;
    CharKey best = ch.begin()->first;
    for (auto& [k, v] : ch) {
      if (k.d != d) break;
      if (std::tie(k.w1, k.w2) > std::tie(best.w1, best.w2)) best = k;
    }
    long mult = ch[best];
    GradedCharacter lc =
        char_shift(graded_character(simple_module_cached(N, best.w1, best.w2)), d);
    for (auto& [k, v] : lc) {
      ch[k] -= v * mult;
      if (ch[k] == 0) ch.erase(k);
    }
    out[{best.w1, best.w2, d}] += mult;
    if (out[{best.w1, best.w2, d}] == 0) out.erase({best.w1, best.w2, d});
  }
  return out;
}
}  // namespace

LCombo grothendieck_product(const LCombo& a, const LCombo& b, long N) {
  return peel_signed(char_mul(combo_character(a, N), combo_character(b, N), N), N);
}

std::string l_combo_str(const LCombo& c) {
  std::ostringstream os;
  bool first = true;
  for (auto& [key, mult] : c) {
    auto [i, j, shift] = key;
    if (mult == 0) continue;
    if (mult > 0 && !first) os << "+";
    if (mult == -1)
      os << "-";
    else if (mult != 1)
      os << mult << "*";
    os << "l" << i << j;
    if (shift != 0) os << "*t^" << shift;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

CModule canonical_W(long N) {
  long n = N / 2;
  CModule L = simple_module(N, n, n + 1);
  if (L.dim() != 4) throw module_error("L(n,n+1) is not four-dimensional");
  auto hw = highest_weight_vectors(L);
  if (hw.size() != 1) throw module_error("W should have a unique highest weight vector");
  Vec w0 = hw[0].coords;
  std::vector<Vec> basis{w0, mat_apply(L.y1, w0), mat_apply(L.y2, w0),
                         mat_apply(L.y2, mat_apply(L.y1, w0))};
  Matrix<S> T(4, 4);
  for (size_t c = 0; c < 4; ++c)
    for (size_t r = 0; r < 4; ++r) T.at(r, c) = basis[c][r];
  Matrix<S> Ti = T.inverse();
  CModule W;
  W.bk = L.bk;
  W.wt = {CycloWeight{mod(n, N), mod(n + 1, N)},
          CycloWeight{mod(n - 1, N), mod(n + 1, N)},
          CycloWeight{mod(n, N), mod(n, N)},
          CycloWeight{mod(n - 1, N), mod(n, N)}};
  W.depth = {0, 1, 1, 2};
  W.label = {"w0", "w1", "w1'", "w2"};
  W.x1 = Ti * L.x1 * T;
  W.x2 = Ti * L.x2 * T;
  W.y1 = Ti * L.y1 * T;
  W.y2 = Ti * L.y2 * T;
  W.check_grading();
  return W;
}

}  // namespace uqsl
