#pragma once

#include <vector>

#include "adsfam/lie.hpp"

namespace adsfam {

// Point of R^{2,n-1} in coordinates (t1, t2, x1, ..., x_{n-1}); flat
// Minkowski point (w1, ..., w_{n-1}).
using ConePoint = std::vector<Rat>;
using MinkowskiPoint = std::vector<Rat>;

// -t1^2 - t2^2 + x1^2 + ... + x_{n-1}^2.
Rat quadratic_form(const ConePoint& p);
bool on_cone(const ConePoint& p);
bool on_hyperboloid(const ConePoint& p);  // value -1

// The conformal embedding of flat space into the light cone:
// (1 - q, 2w1, 2w2, 1 + q, 2w3, ..., 2w_{n-1}) with q = w1^2 - w2^2 - |w'|^2.
ConePoint embed(const MinkowskiPoint& w);

// Inverse coordinates w_i = (corresponding coordinate)/(t1 + x2); throws
// "point in singular set D_n" when t1 + x2 = 0.
MinkowskiPoint invert(const ConePoint& p);

// The base ray representative (1, 0, 0, 1, 0, ..., 0).
ConePoint base_point(int n);

// exp(w1 Q1- + w2 Q2- + sum_{i>=3} w_i Y_{i-2}-) by the finite nilpotent
// series; asserts nilpotency within n+2 powers and form preservation.
GroupElement exp_nminus(const LieContext& ctx, const MinkowskiPoint& w);

enum class Isotropy { FixesRay, FixesLine, Neither };

// How g moves the base ray: fixed with a positive factor, fixed up to a
// nonzero factor, or moved off the line.
Isotropy isotropy_check(const LieContext& ctx, const GroupElement& g);

}  // namespace adsfam
