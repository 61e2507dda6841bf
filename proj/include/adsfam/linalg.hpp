#pragma once

#include <vector>

#include "adsfam/ratfunc.hpp"

namespace adsfam {

using RFMatrix = std::vector<std::vector<RatFunc>>;

// Reduces the matrix in place to reduced row echelon form by exact Gaussian
// elimination over the field of rational functions; returns the rank.
int rref_in_place(RFMatrix& m);

// Basis of the right nullspace of an r x c matrix, as vectors of length c.
// The free variables are set to 1 one at a time, so the result is
// deterministic in the column order.
std::vector<std::vector<RatFunc>> nullspace(RFMatrix m, int cols);

}  // namespace adsfam
