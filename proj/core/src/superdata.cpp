#include "uqsl/superdata.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace uqsl {

namespace {

long mod(long a, long N) {
  long r = a % N;
  return r < 0 ? r + N : r;
}

// Vertex/edge exponent labels of the diagram determined by (q, J) per the
// downward recurrence from vertex r: the diagram of type Super A is fixed by
// q and J alone.
void diagram_exponents(long r, const std::vector<bool>& odd, long n,
                       IntVec& vert, IntVec& edge) {
  vert.assign((size_t)r + 1, 0);
  edge.assign((size_t)r, 0);  // edge[i] labels {i, i+1}, 1 <= i <= r-1
  long e_right = 0;           // exponent of the edge to the right of current vertex
  for (long i = r; i >= 1; --i) {
    if (i == r) {
      if (odd[(size_t)r]) {
        vert[(size_t)r] = n;
        e_right = 1;  // q_rr^2 * edge = q with q_rr = -1
      } else {
        vert[(size_t)r] = 1;  // q_rr = q
        e_right = -1;
      }
      if (r >= 2) edge[(size_t)(r - 1)] = e_right;
      continue;
    }
    if (odd[(size_t)i]) {
      vert[(size_t)i] = n;
      if (i >= 2) edge[(size_t)(i - 1)] = -e_right;
    } else {
      vert[(size_t)i] = -e_right;  // q_ii = (edge to the right)^{-1}
      if (i >= 2) edge[(size_t)(i - 1)] = e_right;
    }
    if (i >= 2) e_right = edge[(size_t)(i - 1)];
  }
}

std::string label_text(long e, long n, long N) {
  long m = mod(e, N);
  if (m == mod(n, N)) return "-1";
  if (m == 1) return "q";
  if (m == mod(-1, N)) return "q^-1";
  std::ostringstream os;
  os << "q^" << (m > N / 2 ? m - N : m);
  return os.str();
}

std::string render_diagram(const IntVec& vert, const IntVec& edge, long n, long N) {
  std::ostringstream os;
  long r = (long)vert.size() - 1;
  for (long i = 1; i <= r; ++i) {
    os << "(" << label_text(vert[(size_t)i], n, N) << ")";
    if (i < r) os << " --" << label_text(edge[(size_t)i], n, N) << "-- ";
  }
  return os.str();
}

}  // namespace

SuperAData build_super_a(long r, IntVec J, long N) {
  if (r < 2) throw bad_rank("rank must be at least 2");
  if (N <= 2 || N % 2 != 0) throw bad_order("order of q must be even and > 2");
  if (J.empty()) throw bad_odd_set("the odd set J must be nonempty");
  std::sort(J.begin(), J.end());
  J.erase(std::unique(J.begin(), J.end()), J.end());
  for (long j : J)
    if (j < 1 || j > r) throw bad_odd_set("J contains a vertex outside 1..r");

  SuperAData d;
  d.r = r;
  d.N = N;
  d.n = N / 2;
  d.J = J;
  d.odd.assign((size_t)r + 1, false);
  for (long j : J) d.odd[(size_t)j] = true;

  IntVec vert, edge;
  diagram_exponents(r, d.odd, d.n, vert, edge);

  d.u.assign((size_t)r, IntVec((size_t)r, 0));
  for (long i = 1; i <= r; ++i) {
    d.u[(size_t)(i - 1)][(size_t)(i - 1)] = vert[(size_t)i];
    if (i < r) d.u[(size_t)(i - 1)][(size_t)i] = edge[(size_t)i];
  }
  d.t.assign((size_t)r, IntVec((size_t)r, 0));
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < r; ++j) {
      if (i == j)
        d.t[(size_t)i][(size_t)j] = d.odd[(size_t)(i + 1)] ? 0 : 2 * d.u[(size_t)i][(size_t)j];
      else
        d.t[(size_t)i][(size_t)j] =
            d.u[(size_t)i][(size_t)j] + d.u[(size_t)j][(size_t)i];
    }

  d.eps.assign((size_t)r + 1, 0);
  for (long j = 1; j <= r; ++j)
    d.eps[(size_t)j] = parity(root_alpha(j, r, r), d);

  long s = 0;
  for (size_t k = 0; k < d.J.size(); ++k)
    s += (k % 2 == 0 ? -1 : +1) * d.J[k];
  d.sJ = std::abs(s);

  // Dynkin-diagram conditions of the Super-A definition, checked mod N.
  auto qt = [&](long i, long j) {  // exponent of q_ij q_ji
    return mod(d.u[(size_t)(i - 1)][(size_t)(j - 1)] +
                   d.u[(size_t)(j - 1)][(size_t)(i - 1)],
               N);
  };
  if (mod(2 * d.u[(size_t)(r - 1)][(size_t)(r - 1)] + qt(r - 1, r), N) != 1)
    throw validation_error("diagram condition q_rr^2 q~_{r-1,r} = q failed");
  for (long i = 1; i <= r; ++i) {
    for (long j = i + 2; j <= r; ++j)
      if (qt(i, j) != 0) throw validation_error("non-adjacent edge present");
    if (d.odd[(size_t)i]) {
      if (mod(d.u[(size_t)(i - 1)][(size_t)(i - 1)], N) != d.n)
        throw validation_error("odd vertex label not -1");
      if (i >= 2 && i < r && mod(qt(i - 1, i) + qt(i, i + 1), N) != 0)
        throw validation_error("odd vertex edge condition failed");
    } else {
      long v = mod(d.u[(size_t)(i - 1)][(size_t)(i - 1)], N);
      if (v != 1 && v != mod(-1, N))
        throw validation_error("even vertex label not q^{+-1}");
      if (i >= 2 && mod(qt(i - 1, i) + v, N) != 0)
        throw validation_error("even vertex left edge condition failed");
      if (i < r && mod(qt(i, i + 1) + v, N) != 0)
        throw validation_error("even vertex right edge condition failed");
    }
  }
  return d;
}

int parity(const IntVec& beta, const SuperAData& d) {
  long s = 0;
  for (long j : d.J)
    if (j <= (long)beta.size()) s += beta[(size_t)(j - 1)];
  return mod(s, 2) == 0 ? +1 : -1;
}

long root_order(const IntVec& beta, const SuperAData& d) {
  return parity(beta, d) == -1 ? 2 : d.N;
}

IntVec root_alpha(long i, long j, long r) {
  IntVec v((size_t)r, 0);
  for (long k = i; k <= j; ++k) v[(size_t)(k - 1)] = 1;
  return v;
}

IntMat cartan_matrix(const SuperAData& d) {
  long r = d.r, N = d.N;
  IntMat c((size_t)r, IntVec((size_t)r, 0));
  for (long i = 0; i < r; ++i) c[(size_t)i][(size_t)i] = 2;
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < r; ++j) {
      if (i == j) continue;
      long qt = mod(d.u[(size_t)i][(size_t)j] + d.u[(size_t)j][(size_t)i], N);
      long qii = mod(d.u[(size_t)i][(size_t)i], N);
      // smallest m >= 0 with (m+1)_{q_ii} = 0 or q_ii^m q~_ij = 1
      for (long m = 0;; ++m) {
        bool qint_zero = false;
        // (m+1)_{q_ii} = 0 iff q_ii is a root of unity of order dividing…
        // evaluate exponent sums mod N: 1 + q^a + ... + q^{ma} = 0 only if
        // q^a is a nontrivial root; detect by exact exponent arithmetic.
        // (m+1)_{x} = 0 iff x^{m+1} = 1, x != 1.
        if (mod(qii * (m + 1), N) == 0 && mod(qii, N) != 0) qint_zero = true;
        bool qpow_one = mod(qii * m + qt, N) == 0;
        if (qint_zero || qpow_one) {
          c[(size_t)i][(size_t)j] = -m;
          break;
        }
        if (m > 2 * N) throw validation_error("Cartan entry did not terminate");
      }
    }
  return c;
}

std::pair<IntVec, IntVec> BraidingMatrix::key() const {
  long r = (long)u_mod.size();
  IntVec vert, edge;
  for (long i = 0; i < r; ++i) vert.push_back(u_mod[(size_t)i][(size_t)i]);
  for (long i = 0; i + 1 < r; ++i)
    edge.push_back((u_mod[(size_t)i][(size_t)(i + 1)] +
                    u_mod[(size_t)(i + 1)][(size_t)i]) %
                   N);
  return {vert, edge};
}

namespace {

// Attempt to recognize a braiding exponent matrix as a Super-A diagram.
void recognize(BraidingMatrix& m) {
  long r = (long)m.u_mod.size(), N = m.N, n = N / 2;
  m.recognized = false;
  IntVec vert((size_t)r + 1, 0), edge((size_t)r, 0);
  for (long i = 1; i <= r; ++i) vert[(size_t)i] = mod(m.u_mod[(size_t)(i - 1)][(size_t)(i - 1)], N);
  for (long i = 1; i < r; ++i)
    edge[(size_t)i] = mod(m.u_mod[(size_t)(i - 1)][(size_t)i] +
                              m.u_mod[(size_t)i][(size_t)(i - 1)],
                          N);
  for (long i = 1; i <= r; ++i)
    for (long j = i + 2; j <= r; ++j)
      if (mod(m.u_mod[(size_t)(i - 1)][(size_t)(j - 1)] +
                  m.u_mod[(size_t)(j - 1)][(size_t)(i - 1)],
              N) != 0)
        return;  // long-range edge: not a Super-A diagram
  for (int base : {+1, -1}) {
    IntVec J;
    std::vector<bool> odd((size_t)r + 1, false);
    bool ok = true;
    for (long i = 1; i <= r && ok; ++i) {
      if (vert[(size_t)i] == (long)mod(n, N)) {
        J.push_back(i);
        odd[(size_t)i] = true;
      } else if (vert[(size_t)i] != mod(base, N) && vert[(size_t)i] != mod(-base, N)) {
        ok = false;
      }
    }
    if (!ok || J.empty()) continue;
    IntVec evert, eedge;
    diagram_exponents(r, odd, n, evert, eedge);
    bool match = true;
    for (long i = 1; i <= r && match; ++i)
      if (mod(base * evert[(size_t)i], N) != vert[(size_t)i]) match = false;
    for (long i = 1; i < r && match; ++i)
      if (mod(base * eedge[(size_t)i], N) != edge[(size_t)i]) match = false;
    if (match) {
      m.recognized = true;
      m.base = base;
      m.J = J;
      return;
    }
  }
}

std::string render_mod(const BraidingMatrix& m) {
  long r = (long)m.u_mod.size(), N = m.N, n = N / 2;
  IntVec vert((size_t)r + 1, 0), edge((size_t)r, 0);
  for (long i = 1; i <= r; ++i) vert[(size_t)i] = m.u_mod[(size_t)(i - 1)][(size_t)(i - 1)];
  for (long i = 1; i < r; ++i)
    edge[(size_t)i] = m.u_mod[(size_t)(i - 1)][(size_t)i] +
                      m.u_mod[(size_t)i][(size_t)(i - 1)];
  return render_diagram(vert, edge, n, N);
}

BraidingMatrix reflect_mat(const IntMat& u, long N, long i_onebased, const IntMat& cartan) {
  long r = (long)u.size();
  long i = i_onebased - 1;
  // s_i(alpha_j) = alpha_j - c_{ij} alpha_i
  IntMat S((size_t)r, IntVec((size_t)r, 0));
  for (long j = 0; j < r; ++j) {
    S[(size_t)j][(size_t)j] += 1;
    S[(size_t)i][(size_t)j] -= cartan[(size_t)i][(size_t)j];
  }
  BraidingMatrix out;
  out.N = N;
  out.u_mod.assign((size_t)r, IntVec((size_t)r, 0));
  for (long k = 0; k < r; ++k)
    for (long j = 0; j < r; ++j) {
      long acc = 0;
      for (long a = 0; a < r; ++a)
        for (long b = 0; b < r; ++b)
          acc += S[(size_t)a][(size_t)k] * u[(size_t)a][(size_t)b] * S[(size_t)b][(size_t)j];
      out.u_mod[(size_t)k][(size_t)j] = mod(acc, N);
    }
  recognize(out);
  out.diagram = render_mod(out);
  return out;
}

IntMat type_a_cartan(long r) {
  IntMat c((size_t)r, IntVec((size_t)r, 0));
  for (long i = 0; i < r; ++i) {
    c[(size_t)i][(size_t)i] = 2;
    if (i > 0) c[(size_t)i][(size_t)(i - 1)] = -1;
    if (i + 1 < r) c[(size_t)i][(size_t)(i + 1)] = -1;
  }
  return c;
}

}  // namespace

BraidingMatrix reflect(const SuperAData& d, long i) {
  return reflect_mat(d.u, d.N, i, cartan_matrix(d));
}

BraidingMatrix reflect(const BraidingMatrix& m, long i) {
  return reflect_mat(m.u_mod, m.N, i, type_a_cartan((long)m.u_mod.size()));
}

std::vector<BraidingMatrix> weyl_orbit(const SuperAData& d) {
  std::vector<BraidingMatrix> orbit;
  std::set<std::pair<IntVec, IntVec>> seen;
  BraidingMatrix start;
  start.N = d.N;
  start.u_mod.assign((size_t)d.r, IntVec((size_t)d.r, 0));
  for (long i = 0; i < d.r; ++i)
    for (long j = 0; j < d.r; ++j)
      start.u_mod[(size_t)i][(size_t)j] = mod(d.u[(size_t)i][(size_t)j], d.N);
  recognize(start);
  start.diagram = render_mod(start);
  std::deque<BraidingMatrix> todo{start};
  seen.insert(start.key());
  while (!todo.empty()) {
    BraidingMatrix cur = todo.front();
    todo.pop_front();
    orbit.push_back(cur);
    for (long i = 1; i <= d.r; ++i) {
      BraidingMatrix nxt = reflect(cur, i);
      if (seen.insert(nxt.key()).second) todo.push_back(nxt);
    }
  }
  return orbit;
}

long weyl_class_invariant(const SuperAData& d) { return d.sJ; }

std::string diagram_text(const SuperAData& d) {
  IntVec vert, edge;
  diagram_exponents(d.r, d.odd, d.n, vert, edge);
  return render_diagram(vert, edge, d.n, d.N);
}

std::string to_json(const SuperAData& d) {
  std::ostringstream os;
  auto mat = [&](const IntMat& m) {
    std::ostringstream ms;
    ms << "[";
    for (size_t i = 0; i < m.size(); ++i) {
      ms << (i ? "," : "") << "[";
      for (size_t j = 0; j < m[i].size(); ++j) ms << (j ? "," : "") << m[i][j];
      ms << "]";
    }
    ms << "]";
    return ms.str();
  };
  os << "{\"r\":" << d.r << ",\"J\":[";
  for (size_t k = 0; k < d.J.size(); ++k) os << (k ? "," : "") << d.J[k];
  os << "],\"N\":" << d.N << ",\"u\":" << mat(d.u) << ",\"t\":" << mat(d.t)
     << ",\"diagram\":\"" << diagram_text(d) << "\"}";
  return os.str();
}

}  // namespace uqsl
