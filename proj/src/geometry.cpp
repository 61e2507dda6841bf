#include "adsfam/geometry.hpp"

#include <stdexcept>

namespace adsfam {

Rat quadratic_form(const ConePoint& p) {
    Rat q(0);
    for (size_t i = 0; i < p.size(); ++i) {
        Rat sq = p[i] * p[i];
        q += (i < 2 ? Rat(-sq) : sq);
    }
    return q;
}

bool on_cone(const ConePoint& p) {
    if (quadratic_form(p) != 0) return false;
    for (const auto& c : p)
        if (c != 0) return true;
    return false;
}

bool on_hyperboloid(const ConePoint& p) { return quadratic_form(p) == Rat(-1); }

ConePoint embed(const MinkowskiPoint& w) {
    Rat q = w[0] * w[0] - w[1] * w[1];
    for (size_t i = 2; i < w.size(); ++i) q -= w[i] * w[i];
    ConePoint p;
    p.reserve(w.size() + 2);
    p.push_back(Rat(1) - q);
    p.push_back(2 * w[0]);
    p.push_back(2 * w[1]);
    p.push_back(Rat(1) + q);
    for (size_t i = 2; i < w.size(); ++i) p.push_back(2 * w[i]);
    return p;
}

MinkowskiPoint invert(const ConePoint& p) {
    Rat denom = p[0] + p[3];
    if (denom == 0) throw std::domain_error("point in singular set D_n");
    MinkowskiPoint w;
    w.reserve(p.size() - 2);
    w.push_back(p[1] / denom);
    w.push_back(p[2] / denom);
    for (size_t i = 4; i < p.size(); ++i) w.push_back(p[i] / denom);
    return w;
}

ConePoint base_point(int n) {
    ConePoint p(static_cast<size_t>(n), Rat(0));
    p[0] = 1;
    p[3] = 1;
    return p;
}

GroupElement exp_nminus(const LieContext& ctx, const MinkowskiPoint& w) {
    if (static_cast<int>(w.size()) != ctx.n() - 1)
        throw std::invalid_argument("flat point needs n-1 coordinates");
    LieElt x = ctx.element({GenKind::Q1minus}).scaled(w[0]) +
               ctx.element({GenKind::Q2minus}).scaled(w[1]);
    for (size_t i = 2; i < w.size(); ++i)
        x = x + ctx.element({GenKind::Yminus, static_cast<int>(i) - 1}).scaled(w[i]);
    RatMat xm = x.matrix();
    RatMat sum = RatMat::identity(ctx.matrix_size());
    RatMat power = xm;
    Rat fact(1);
    int k = 1;
    while (!power.is_zero()) {
        if (k > ctx.n() + 2) throw std::domain_error("matrix is not nilpotent");
        fact *= k;
        sum = sum + power.scaled(Rat(1) / fact);
        power = power * xm;
        ++k;
    }
    const RatMat& g = ctx.form_matrix();
    if (!(sum.transposed() * g * sum == g))
        throw std::logic_error("exponential does not preserve the form");
    return {"exp(n-)", sum};
}

Isotropy isotropy_check(const LieContext& ctx, const GroupElement& g) {
    ConePoint b = base_point(ctx.matrix_size());
    std::vector<Rat> image = g.matrix * b;
    // base has support {0, 3}; a multiple must vanish elsewhere
    Rat factor = image[0];
    for (size_t i = 0; i < image.size(); ++i) {
        Rat expect = (i == 0 || i == 3) ? factor : Rat(0);
        if (image[i] != expect) return Isotropy::Neither;
    }
    if (factor > 0) return Isotropy::FixesRay;
    if (factor < 0) return Isotropy::FixesLine;
    return Isotropy::Neither;
}

}  // namespace adsfam
