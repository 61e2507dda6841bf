#pragma once

#include <vector>

#include "adsfam/diffop.hpp"

namespace adsfam {

// Coefficients of the formal eigenfunction expansion u ~ sum_s r^(lambda+s)
// c_s(x') on the Lorentzian upper half space: c_{2j} = A[j] * Dal'^j c_0.
struct AsymptoticCoefficients {
    int n;
    std::vector<RatFunc> A;  // A[j] = A_{2j}(lambda), A[0] = 1
};

// Derives the coefficients by substituting the expansion into the eigenvalue
// equation of r^2(d_r^2 + Dal') - (n-2) r d_r with eigenvalue
// -lambda(n-1-lambda), matching powers of r symbolically. Each c_{2j} is
// tracked as a full polynomial in Dal'; a non-pure-power result throws.
AsymptoticCoefficients derive_recursion_oracle(int n, int jmax);

// (-1)^j / prod_{k=1..j} 2k(2k+2*lambda+1-n).
RatFunc asymptotic_closed_form(int n, int j);

// S_N(lambda) = sum_j 1/(N-2j)! * A_{2j}(lambda) Dal'^j i* d_n^(N-2j).
DiffOp build_residue_family(int n, int order);

// B_{2N}(mu) = 1/(2^N N! (n-1-2mu-2)(n-1-2mu-4)...(n-1-2mu-2N)) evaluated at
// mu = lambda + n - 1 - 2N, as a rational function of lambda.
RatFunc coincidence_constant_even(int n, int half_order);

struct CoincidenceResult {
    bool proportional;          // S_N(lambda+n-1-N) == c(lambda) * D_N^nc(lambda)
    RatFunc constant;           // the scalar c(lambda)
    bool matches_closed_form;   // even order only; true vacuously for odd
};

CoincidenceResult verify_coincidence(int n, int order);

// Denominator of A_{2j} factors as prod_{k=1..j} (2k+2*lambda+1-n) up to a
// constant, and the numerator is constant.
bool verify_pole_structure(int n, int j);

}  // namespace adsfam
