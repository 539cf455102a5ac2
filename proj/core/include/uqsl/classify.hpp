#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uqsl/superdata.hpp"

namespace uqsl {

/// Raised when two independent computations of the same classification
/// quantity disagree (these cross-checks are part of the contract).
struct consistency_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RibbonPair {
  IntVec a, j;                // elements of (Z/N)^r
  std::vector<int> eta, eps;  // sign vectors in (Z/2)^r, a = n*eps, j = n*eta
  bool spherical = false;     // the unique pair with j = 0
};

struct ClassificationReport {
  long det_t = 0;
  bool nondegenerate = false;
  IntVec top_degree;  // i_ell in [0,N)^r
  bool unimodular = false;
  std::optional<IntVec> spherical_pivot;
  std::vector<RibbonPair> ribbon_pairs;
  bool modular = false;
};

/// det of the symmetrized matrix, computed both directly and through the
/// E-matrix/companion factorization E t = Id - Comp_alpha. Disagreement of
/// the two routes (or of the matrix identity itself) throws
/// consistency_error.
long det_symmetrized(const SuperAData& d);

/// Whether the base braided category is non-degenerate: gcd(det t, N) = 1.
bool is_nondegenerate(const SuperAData& d);

/// Group degree i_ell of the top PBW monomial, reduced to [0,N)^r.
IntVec top_degree(const SuperAData& d);

/// Unimodularity of the bosonization: i_ell = 0 mod N. Cross-checked
/// against the closed form (J = I and r even).
bool is_unimodular(const SuperAData& d);

/// Ribbon pairs (a, j) with 2a = i_ell, 2j = -i_ell and
/// a = -u_Delta + u j (mod N). Enumerated by brute force over the full pair
/// space for r <= 4 and by solving the congruences for larger ranks; the
/// count is checked against the closed form 2^r [J = I and r even].
std::vector<RibbonPair> ribbon_pairs(const SuperAData& d);

ClassificationReport classify_all(const SuperAData& d);

std::string report_json(const SuperAData& d, const ClassificationReport& rep);
std::string report_text(const SuperAData& d, const ClassificationReport& rep);

}  // namespace uqsl
