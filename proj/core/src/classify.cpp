#include "uqsl/classify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace uqsl {

namespace {

long mod(long a, long N) {
  long r = a % N;
  return r < 0 ? r + N : r;
}

// Fraction-free Bareiss determinant; entries here are tiny.
long det_bareiss(IntMat m) {
  long r = (long)m.size();
  long sign = 1, prev = 1;
  for (long k = 0; k < r - 1; ++k) {
    if (m[(size_t)k][(size_t)k] == 0) {
      long swap_row = -1;
      for (long i = k + 1; i < r; ++i)
        if (m[(size_t)i][(size_t)k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(m[(size_t)k], m[(size_t)swap_row]);
      sign = -sign;
    }
    for (long i = k + 1; i < r; ++i)
      for (long j = k + 1; j < r; ++j) {
        long x = m[(size_t)i][(size_t)j] * m[(size_t)k][(size_t)k] -
                 m[(size_t)i][(size_t)k] * m[(size_t)k][(size_t)j];
        m[(size_t)i][(size_t)j] = x / prev;
      }
    prev = m[(size_t)k][(size_t)k];
  }
  return sign * m[(size_t)(r - 1)][(size_t)(r - 1)];
}

}  // namespace

long det_symmetrized(const SuperAData& d) {
  long r = d.r;
  long direct = det_bareiss(d.t);

  // E-matrix route: E t = Id - Comp_alpha, det t = det(E) alpha(1).
  IntMat E((size_t)r, IntVec((size_t)r, 0));
  for (long i = 1; i <= r; ++i)
    for (long j = i; j <= r; ++j)
      E[(size_t)(i - 1)][(size_t)(j - 1)] = d.eps[(size_t)i];
  IntMat lhs((size_t)r, IntVec((size_t)r, 0));
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < r; ++j) {
      long acc = 0;
      for (long k = 0; k < r; ++k)
        acc += E[(size_t)i][(size_t)k] * d.t[(size_t)k][(size_t)j];
      lhs[(size_t)i][(size_t)j] = acc;
    }
  // Id - Comp_alpha for alpha = x^r + eps_r x^{r-1} + ... + eps_1
  IntMat rhs((size_t)r, IntVec((size_t)r, 0));
  for (long i = 0; i < r; ++i) {
    rhs[(size_t)i][(size_t)i] += 1;
    if (i + 1 < r) rhs[(size_t)(i + 1)][(size_t)i] -= 1;
    rhs[(size_t)i][(size_t)(r - 1)] += d.eps[(size_t)(i + 1)];
  }
  if (lhs != rhs)
    throw consistency_error("E t != Id - Comp_alpha");

  long detE = 1;
  for (long i = 1; i <= r; ++i) detE *= d.eps[(size_t)i];
  long alpha1 = 1;
  for (long i = 1; i <= r; ++i) alpha1 += d.eps[(size_t)i];
  long factored = detE * alpha1;
  if (direct != factored)
    throw consistency_error("determinant routes disagree");
  return direct;
}

bool is_nondegenerate(const SuperAData& d) {
  long det = det_symmetrized(d);
  return std::gcd(std::abs(det), d.N) == 1;
}

IntVec top_degree(const SuperAData& d) {
  IntVec a((size_t)d.r, 0);
  for (long i = 1; i <= d.r; ++i)
    for (long j = i; j <= d.r; ++j) {
      long n_ij = root_order(root_alpha(i, j, d.r), d) - 1;  // 1 or N-1
      for (long m = i; m <= j; ++m) a[(size_t)(m - 1)] += n_ij;
    }
  for (auto& x : a) x = mod(x, d.N);
  return a;
}

bool is_unimodular(const SuperAData& d) {
  IntVec t = top_degree(d);
  bool by_top = true;
  for (long x : t)
    if (x != 0) by_top = false;
  bool closed = d.J_is_full() && d.r % 2 == 0;
  if (by_top != closed)
    throw consistency_error("unimodularity: top degree vs closed form disagree");
  return by_top;
}

namespace {

std::optional<RibbonPair> check_pair(const SuperAData& d, const IntVec& iell,
                                     const IntVec& a, const IntVec& j) {
  long N = d.N, r = d.r;
  for (long i = 0; i < r; ++i) {
    if (mod(2 * a[(size_t)i] - iell[(size_t)i], N) != 0) return std::nullopt;
    if (mod(2 * j[(size_t)i] + iell[(size_t)i], N) != 0) return std::nullopt;
  }
  for (long i = 0; i < r; ++i) {
    long uj = 0;
    for (long k = 0; k < r; ++k) uj += d.u[(size_t)i][(size_t)k] * j[(size_t)k];
    if (mod(a[(size_t)i] + d.u[(size_t)i][(size_t)i] - uj, N) != 0)
      return std::nullopt;
  }
  RibbonPair p;
  p.a = a;
  p.j = j;
  p.eta.assign((size_t)r, 0);
  p.eps.assign((size_t)r, 0);
  for (long i = 0; i < r; ++i) {
    p.eta[(size_t)i] = j[(size_t)i] == 0 ? 0 : 1;
    p.eps[(size_t)i] = a[(size_t)i] == 0 ? 0 : 1;
  }
  p.spherical = std::all_of(p.j.begin(), p.j.end(), [](long x) { return x == 0; });
  return p;
}

void iterate_tuples(long r, long N, IntVec& cur, long pos,
                    const std::function<void(const IntVec&)>& f) {
  if (pos == r) {
    f(cur);
    return;
  }
  for (long v = 0; v < N; ++v) {
    cur[(size_t)pos] = v;
    iterate_tuples(r, N, cur, pos + 1, f);
  }
}

}  // namespace

std::vector<RibbonPair> ribbon_pairs(const SuperAData& d) {
  long N = d.N, r = d.r, n = d.n;
  IntVec iell = top_degree(d);
  std::vector<RibbonPair> out;

  if (r <= 4) {
    IntVec a((size_t)r, 0), j((size_t)r, 0);
    iterate_tuples(r, N, a, 0, [&](const IntVec& av) {
      for (long i = 0; i < r; ++i)
        if (mod(2 * av[(size_t)i] - iell[(size_t)i], N) != 0) return;
      iterate_tuples(r, N, j, 0, [&](const IntVec& jv) {
        if (auto p = check_pair(d, iell, av, jv)) out.push_back(*p);
      });
    });
  } else {
    // solve the congruences: per coordinate 2j_i = -i_ell,i has solutions
    // only for even i_ell,i, namely j_i in {c, c + n}
    bool solvable = true;
    for (long x : iell)
      if (x % 2 != 0) solvable = false;
    if (solvable) {
      IntVec base((size_t)r, 0);
      for (long i = 0; i < r; ++i) base[(size_t)i] = mod(-iell[(size_t)i] / 2, N);
      for (long mask = 0; mask < (1L << r); ++mask) {
        IntVec j((size_t)r, 0), a((size_t)r, 0);
        for (long i = 0; i < r; ++i)
          j[(size_t)i] = mod(base[(size_t)i] + ((mask >> i) & 1) * n, N);
        for (long i = 0; i < r; ++i) {
          long uj = 0;
          for (long k = 0; k < r; ++k) uj += d.u[(size_t)i][(size_t)k] * j[(size_t)k];
          a[(size_t)i] = mod(-d.u[(size_t)i][(size_t)i] + uj, N);
        }
        if (auto p = check_pair(d, iell, a, j)) out.push_back(*p);
      }
    }
  }

  size_t expected = (d.J_is_full() && r % 2 == 0) ? (size_t)1 << r : 0;
  if (out.size() != expected)
    throw consistency_error("ribbon pair count disagrees with the closed form");

  // eta/epsilon compatibility of every pair (mod-2 relation between the
  // sign vectors); failures would indicate an enumeration bug.
  for (auto& p : out) {
    for (long i = 0; i < r; ++i) {
      long want = (i + 1 < r) ? (1 + n * p.eta[(size_t)i] + p.eta[(size_t)(i + 1)])
                              : (1 + n * p.eta[(size_t)i]);
      if (mod(want, 2) != p.eps[(size_t)i])
        throw consistency_error("ribbon pair sign vectors inconsistent");
    }
  }
  return out;
}

ClassificationReport classify_all(const SuperAData& d) {
  ClassificationReport rep;
  rep.det_t = det_symmetrized(d);
  rep.nondegenerate = is_nondegenerate(d);
  rep.top_degree = top_degree(d);
  rep.unimodular = is_unimodular(d);
  if (rep.unimodular) rep.spherical_pivot = IntVec((size_t)d.r, d.n);
  rep.ribbon_pairs = ribbon_pairs(d);
  rep.modular = d.J_is_full() && d.r % 2 == 0;
  return rep;
}

namespace {
std::string vec_json(const IntVec& v) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "]";
  return os.str();
}
}  // namespace

std::string report_json(const SuperAData& d, const ClassificationReport& rep) {
  std::ostringstream os;
  os << "{\"r\":" << d.r << ",\"J\":" << vec_json(d.J) << ",\"N\":" << d.N
     << ",\"det_t\":" << rep.det_t
     << ",\"nondegenerate\":" << (rep.nondegenerate ? "true" : "false")
     << ",\"top_degree\":" << vec_json(rep.top_degree)
     << ",\"unimodular\":" << (rep.unimodular ? "true" : "false")
     << ",\"spherical_pivot\":";
  if (rep.spherical_pivot)
    os << vec_json(*rep.spherical_pivot);
  else
    os << "null";
  os << ",\"ribbon_count\":" << rep.ribbon_pairs.size()
     << ",\"modular\":" << (rep.modular ? "true" : "false") << "}";
  return os.str();
}

std::string report_text(const SuperAData& d, const ClassificationReport& rep) {
  std::ostringstream os;
  os << "type A(" << d.r << ", q, {";
  for (size_t k = 0; k < d.J.size(); ++k) os << (k ? "," : "") << d.J[k];
  os << "})  N=" << d.N << "\n";
  os << "diagram:         " << diagram_text(d) << "\n";
  os << "det t:           " << rep.det_t << "\n";
  os << "nondegenerate:   " << (rep.nondegenerate ? "yes" : "no") << "\n";
  os << "top degree:      " << vec_json(rep.top_degree) << "\n";
  os << "unimodular:      " << (rep.unimodular ? "yes" : "no") << "\n";
  os << "spherical pivot: "
     << (rep.spherical_pivot ? vec_json(*rep.spherical_pivot) : std::string("none"))
     << "\n";
  os << "ribbon pairs:    " << rep.ribbon_pairs.size() << "\n";
  for (auto& p : rep.ribbon_pairs) {
    os << "  a=" << vec_json(p.a) << " j=" << vec_json(p.j) << " eps=[";
    for (size_t k = 0; k < p.eps.size(); ++k) os << (k ? "," : "") << p.eps[k];
    os << "] eta=[";
    for (size_t k = 0; k < p.eta.size(); ++k) os << (k ? "," : "") << p.eta[k];
    os << "]";
    if (p.spherical) os << "  (spherical)";
    os << "\n";
  }
  os << "modular:         " << (rep.modular ? "yes" : "no") << "\n";
  return os.str();
}

}  // namespace uqsl
