#pragma once

#include <string>
#include <vector>

#include "adsfam/pbw.hpp"

namespace adsfam {

// Coefficients of the order-N family for the pair o(2,n) > o(2,n-1):
// D = sum_j coeff[j] * Delta^j * T^(N-2j), where T is the last lowering
// generator and Delta the lowering Laplacian in the remaining directions.
// Normalized so that the top coefficient (largest j) is 1.
struct FamilyCoefficients {
    int n;
    int order;
    std::vector<RatFunc> coeff;  // index j = 0 .. floor(order/2)
};

// Solves the two-term recursion downward from the normalized top coefficient.
FamilyCoefficients compute_coefficients(int n, int order);

// The Laplacian -(Q1-)^2 + (Q2-)^2 + sum_{j<=big.n()-4} (Y_j-)^2 in the big
// context, i.e. omitting the last lowering direction T.
UEAElement boundary_laplacian(const LieContext& big);

// The element T = Y_{big.n()-3}^- spanning the transverse lowering direction.
UEAElement transverse_generator(const LieContext& big);

// D as an element of U(n^-) of the big context; big.n() must equal n+1.
UEAElement build_family(const LieContext& big, const FamilyCoefficients& fc);

// All nondecreasing words of the given length over the n^- letters of ctx.
std::vector<std::vector<int>> nminus_words(const LieContext& ctx, int degree);

// Equivariance of D under the parabolic of the embedded subalgebra:
//   (A) [M, D] = 0 for every basis element M of the subalgebra's m,
//   (B) [X, D] = 0 mod the ideal, for X among the raising generators
//       Y_j^+ (j <= n-3), W1, W2,
//   (C) [H, D] = -order * D.
std::vector<RelationCheck> verify_equivariance(const LieContext& big, const UEAElement& d,
                                               int order);

// Dimension of the space of homogeneous degree-`order` solutions of the full
// equivariance system over the rational-function field.
int equivariant_nullity(const LieContext& big, int order);

struct UniquenessResult {
    int dimension;                  // expected 1
    bool generator_matches_family;  // nullspace generator proportional to D
};

UniquenessResult verify_uniqueness(const LieContext& big, int order);

// Adds 1 to a single coefficient and confirms the perturbed element violates
// the raising-side condition with a nonzero residue; one check per j.
std::vector<RelationCheck> negative_controls(const LieContext& big, int order);

// Parity under the embedded reflections: Ad(i(J)) D = (-1)^order D,
// Ad(i(w1)) D = D, Ad(i(w2)) D = D.
std::vector<RelationCheck> verify_parity(const LieContext& small, const LieContext& big,
                                         const UEAElement& d, int order);

// Dimension of the space of elements of U(n^-) of ctx of degree <= bound
// commuting with the whole of ctx's m; expected floor(bound/2) + 1, spanned
// by the powers of the Laplacian.
int centralizer_dimension(const LieContext& ctx, int degree_bound);

// Confirms every power Delta^k, 2k <= bound, commutes with ctx's m.
bool laplacian_powers_centralize(const LieContext& ctx, int degree_bound);

}  // namespace adsfam
