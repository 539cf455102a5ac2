#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace uqsl {

struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct bad_rank : validation_error {
  using validation_error::validation_error;
};
struct bad_odd_set : validation_error {
  using validation_error::validation_error;
};
struct bad_order : validation_error {
  using validation_error::validation_error;
};

using IntMat = std::vector<std::vector<long>>;
using IntVec = std::vector<long>;

/// Super-A Cartan/Dynkin data for rank r >= 2: the braiding matrix is stored
/// as the upper-triangular integer exponent matrix u of q (q_ij = q^{u_ij}),
/// with u_ii = n for odd vertices and the symmetrization t = u + u^T stored
/// with the diagonal N reduced to 0 for odd vertices (the mod-N
/// representative the determinant tables use).
struct SuperAData {
  long r = 0;
  long N = 0;  // even order of q, N = 2n > 2
  long n = 0;
  IntVec J;           // odd vertices, ascending, 1-based
  std::vector<bool> odd;  // odd[i] for i = 1..r (index 0 unused)
  IntMat u;           // r x r exponent matrix
  IntMat t;           // symmetrized, diagonal reduced mod N
  std::vector<int> eps;   // eps[j] = parity(alpha_j + ... + alpha_r), 1-based
  long sJ = 0;        // Weyl-class invariant S_J

  bool in_J(long i) const { return odd[(size_t)i]; }
  bool J_is_full() const { return (long)J.size() == r; }
};

/// Validates and derives all data. Errors: bad_rank (r < 2), bad_odd_set
/// (empty or out-of-range J), bad_order (N odd or <= 2).
SuperAData build_super_a(long r, IntVec J, long N);

/// Parity (-1)^{sum of beta_i over i in J} of a root vector.
int parity(const IntVec& beta, const SuperAData& d);
/// Root-vector order: 2 for odd roots, N for even ones.
long root_order(const IntVec& beta, const SuperAData& d);

/// alpha_{ij} = alpha_i + ... + alpha_j as a vector in Z^r (1 <= i <= j <= r).
IntVec root_alpha(long i, long j, long r);

/// Standard type-A Cartan matrix, derived from the braiding exponents via
/// the generalized-Cartan-matrix recipe (not just hardcoded).
IntMat cartan_matrix(const SuperAData& d);

/// A braiding exponent matrix together with its best-effort recognition as
/// a Super-A diagram in base q^{base} (base = +1 or -1).
struct BraidingMatrix {
  IntMat u_mod;  // exponents mod N
  long N = 0;
  bool recognized = false;
  int base = +1;   // q' = q^{base} when recognized
  IntVec J;        // odd set when recognized
  std::string diagram;  // text form, e.g. "(-1) --q-- (-1)"
  /// Canonical key: vertex labels and symmetrized edge labels mod N.
  std::pair<IntVec, IntVec> key() const;
};

/// Reflection rho_i of the braiding matrix (1-based i).
BraidingMatrix reflect(const SuperAData& d, long i);
BraidingMatrix reflect(const BraidingMatrix& m, long i);

/// Full Weyl-class orbit of the braiding matrix under all reflections,
/// collected up to equality of diagram keys.
std::vector<BraidingMatrix> weyl_orbit(const SuperAData& d);

long weyl_class_invariant(const SuperAData& d);

std::string diagram_text(const SuperAData& d);
std::string to_json(const SuperAData& d);

}  // namespace uqsl
