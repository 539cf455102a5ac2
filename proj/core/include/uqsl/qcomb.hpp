#pragma once

#include "uqsl/cyclotomic.hpp"
#include "uqsl/laurent.hpp"
#include "uqsl/ratfunc.hpp"

namespace uqsl {

/// [k]_q = 1 + q + ... + q^{k-1}; [0]_q = 0.
LaurentInt gauss_int(long k);

/// [k]_q! = [1]_q [2]_q ... [k]_q; [0]_q! = 1.
LaurentInt gauss_factorial(long k);

/// Gaussian binomial binom(k,i)_q as a polynomial in q, computed by exact
/// division [k]_q! / ([i]_q! [k-i]_q!). Requires 0 <= i <= k.
LaurentInt gauss_binom(long k, long i);

/// Exact image of a rational function under q -> primitive N-th root of
/// unity (N even, > 2). Throws scalar_error if the denominator vanishes
/// there.
CycloScalar specialize(const RatFuncQ& p, long N);
CycloScalar specialize(const LaurentInt& p, long N);

}  // namespace uqsl
