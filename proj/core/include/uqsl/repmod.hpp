#pragma once

#include <map>
#include <tuple>

#include "uqsl/rtcat.hpp"

namespace uqsl {

using CModule = WeightModule<CycloBackend>;

/// Standard module M(i,j): dimension 4N, basis v^{(b2,b12,b1)} =
/// y_2^{b2} y_12^{(b12)} y_1^{b1} v_ij, all sixteen action formulas exact.
CModule standard_module(long N, long i, long j);

/// Simple module L(i,j) materialized as the quotient of M(i,j) by the
/// maximal submodule (generated per the five label cases).
CModule simple_module(long N, long i, long j);

/// Process-wide memoized constructions (concurrent readers, single writer).
const CModule& standard_module_cached(long N, long i, long j);
const CModule& simple_module_cached(long N, long i, long j);

/// dim L(i,j) by the closed form: 2i+1 / 2j+1 / 4(i+j) / 4(i+j-N).
long simple_dimension_formula(long N, long i, long j);

struct HWVector {
  std::vector<CycloScalar> coords;
  CycloWeight weight;
  long depth;
};
/// Lambda-homogeneous basis of the joint kernel of x_1 and x_2.
std::vector<HWVector> highest_weight_vectors(const CModule& V);

// --- graded characters --------------------------------------------------

struct CharKey {
  long w1, w2, d;  // weight (w1, w2), t-exponent d
  bool operator<(const CharKey& o) const {
    return std::tie(d, w1, w2) < std::tie(o.d, o.w1, o.w2);
  }
  bool operator==(const CharKey&) const = default;
};

/// Finitely supported (weight, degree) census; also used for general
/// elements of Z Lambda[t, t^{-1}] (then with possibly negative values).
using GradedCharacter = std::map<CharKey, long>;

GradedCharacter graded_character(const CModule& V);
GradedCharacter char_mul(const GradedCharacter& a, const GradedCharacter& b, long N);
GradedCharacter char_shift(GradedCharacter a, long d);
long char_mass(const GradedCharacter& a);

// --- composition series ------------------------------------------------

struct CompositionFactor {
  long i, j;    // simple label
  long shift;   // t-exponent shift
  bool operator<(const CompositionFactor& o) const {
    return std::tie(shift, i, j) < std::tie(o.shift, o.i, o.j);
  }
  bool operator==(const CompositionFactor&) const = default;
};

/// Greedy top-down peeling of a character by simple characters: lowest
/// t-degree first (highest Z-degree), lexicographically largest weight.
/// Throws module_error if no nonnegative decomposition exists.
std::vector<CompositionFactor> peel_character(GradedCharacter ch, long N);
std::vector<CompositionFactor> composition_factors(const CModule& V);

/// Closed-form tensor decomposition of M(a,b) (x) M(c,d) into 4N standard
/// labels with their t-shifts.
std::vector<CompositionFactor> standard_tensor_decomposition(long N, long a, long b,
                                                             long c, long d);

// --- Grothendieck ring --------------------------------------------------

/// Z[t,t^{-1}]-combination of l-symbols: (i,j,shift) -> multiplicity.
using LCombo = std::map<std::tuple<long, long, long>, long>;

/// Multiply two l-symbol combinations in the graded Grothendieck ring,
/// re-expressed in the l-basis by greedy peeling.
LCombo grothendieck_product(const LCombo& a, const LCombo& b, long N);

std::string l_combo_str(const LCombo& c);

/// L(n, n+1) rebased to the canonical basis (w0, y1 w0, y2 w0, y2 y1 w0).
CModule canonical_W(long N);

}  // namespace uqsl
