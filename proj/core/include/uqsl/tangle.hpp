#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "uqsl/modules_symbolic.hpp"
#include "uqsl/repmod.hpp"

namespace uqsl {

struct tangle_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Braid word with trace closure: strands >= 1, letters +-1..+-(strands-1),
/// one cut strand (1-based) left open to produce a (1,1)-tangle.
struct BraidSpec {
  long strands = 1;
  std::vector<long> word;
  long cut = 1;
};

/// Morse-slice presentation of an oriented (1,1)-tangle, one input and one
/// output strand, both colored W upward. Slices are read bottom to top.
struct MorsePiece {
  enum Kind { Id, Cross, Cup, Cap } kind = Id;
  bool down = false;     // Id: orientation of the strand (down = W*)
  bool positive = true;  // Cross: crossing sign
  bool or1_down = false, or2_down = false;  // Cross: incoming orientations
  bool left_up = true;   // Cup/Cap variant (which leg is oriented upward)
};

struct MorseTangle {
  std::vector<std::vector<MorsePiece>> slices;
};

/// The crossing/duality matrices for W-colored tangles over an exact scalar
/// ring S, with orientation index 0 = W (up), 1 = W* (down).
///
/// Crossing operators carry the sign normalization c_+ = -Psi^{-1},
/// c_- = -Psi fixed by I_W(trefoil) = 2q^2+4q+3; with it the curl closes to
/// +Id and the invariant is framing-independent.
template <class S>
struct CrossKit {
  size_t d = 4;
  Matrix<S> pos[2][2], neg[2][2];  // [or1][or2]: A (x) B -> B (x) A
  Matrix<S> ev, coev, ev_right, coev_right;
  std::vector<S> nu;  // diagonal of the pivotal action on W (signs)
  std::vector<int> nu_sign;
};

/// Symbolic kit: entries converted to integer Laurent polynomials; a
/// non-Laurent entry is a hard error (the invariant's integrality is
/// enforced here, not assumed).
CrossKit<LaurentInt> symbolic_kit();

/// Root-of-unity kit with W rebuilt from M(n, n+1).
CrossKit<CycloScalar> cyclotomic_kit(long N);

// --- evaluation ----------------------------------------------------------

/// Evaluates a braid closure; dual_color evaluates the same diagram with
/// every strand colored W* instead of W.
template <class S>
Matrix<S> evaluate_braid(const CrossKit<S>& kit, const BraidSpec& b,
                         bool dual_color = false);

template <class S>
Matrix<S> evaluate_morse(const CrossKit<S>& kit, const MorseTangle& t);

/// Extracts the scalar of lambda Id_W; anything else is "broken
/// functoriality".
template <class S>
S extract_scalar(const Matrix<S>& endo);

LaurentInt invariant(const BraidSpec& b);
LaurentInt invariant(const MorseTangle& t);
CycloScalar invariant_cyclo(const BraidSpec& b, long N);

/// Closed form for the torus link T(2,-b) (b >= 1); negative b gives the
/// mirror T(2,|b|).
LaurentInt torus2_formula(long b);

/// I_W(T(2,-b)) for b >= 3 by iterating the skein recursion seeded with the
/// directly evaluated b = 0, 1, 2 values.
std::vector<LaurentInt> torus2_by_skein(long bmax);

struct SkeinReport {
  bool cubic_zero = false;        // cubic minimal polynomial of the braiding
  bool quadratic_zero = false;    // Psi + Psi^{-1} + 2 Id + (q+q^{-1}-2) e = 0
  bool idempotent = false;        // e^2 = e
  size_t rank_e = 0;              // = 4, the L(2n-1,2) summand
  bool spectrum_ok = false;       // spectrum of Psi inside {-1, -q^{-1}}
  bool image_ok = false;          // e fixes w0 (x) w1 - q w1 (x) w0
};
SkeinReport skein_verify();

// --- knot database --------------------------------------------------------

struct KnotEntry {
  std::string name;
  long strands = 0;
  std::vector<long> word;
  std::optional<LaurentInt> expected;
  bool mirrored = false;   // stored word is the mirror of the common table's
  bool confirmed = true;   // presentation validated against the reference value
};

/// Built-in database: unknot, Hopf, all Rolfsen knots through 7 crossings,
/// the torus links 4_1^2 and 6_1^2, and 10_132. T(2,b) is available
/// programmatically via torus_braid.
const std::vector<KnotEntry>& knot_db();
const KnotEntry& knot_db(const std::string& name);
/// Name lookup with the aliases hopf = 2_1^2, solomon = 4_1^2 and the
/// parametric family T(2,b).
KnotEntry knot_entry(const std::string& name);
BraidSpec braid_of(const KnotEntry& e);
BraidSpec torus_braid(long b);
BraidSpec mirror(const BraidSpec& b);

std::string knot_db_json();

/// Parses the tangle JSON format: a list of slices, each a list of pieces
/// {"id":"up"|"down"} | {"x":"pos"|"neg","or":"uu"|"ud"|"du"|"dd"} |
/// {"cup":"l"|"r"} | {"cap":"l"|"r"}.
MorseTangle parse_tangle_json(const std::string& text);

}  // namespace uqsl
