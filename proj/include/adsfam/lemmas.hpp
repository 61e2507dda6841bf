#pragma once

#include "adsfam/pbw.hpp"

namespace adsfam {

// [Y1+, (Y1-)^2N] = -2N(2N-1)(Y1-)^(2N-1) + 4N(Y1-)^(2N-1) H.
bool power_commutator_diagonal(const LieContext& ctx, int N);

// [Y1+, (Yr-)^2N] = 2N(2N-1) Y1- (Yr-)^(2N-2) + 4N(Yr-)^(2N-1) M_1r,
// for 2 <= r <= ctx.n()-3.
bool power_commutator_offdiagonal(const LieContext& ctx, int N, int r);

// [Y1+, Delta] - (2n-6)Y1- - 4 Y1- H consists solely of two-letter words
// (lowering letter)(m letter).
bool laplacian_commutator_shape(const LieContext& ctx);

// [Y1+, Delta^j] - 2j(n-1-2j) Y1- Delta^(j-1) - 4j Y1- Delta^(j-1) H lies in
// U(n^-) m: every word ends with exactly one m letter.
bool laplacian_power_commutator_shape(const LieContext& ctx, int j);

}  // namespace adsfam
