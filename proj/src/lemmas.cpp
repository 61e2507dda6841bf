#include "adsfam/lemmas.hpp"

namespace adsfam {

namespace {

UEAElement gen(const LieContext& ctx, const GenName& g) {
    return UEAElement::from_lie(ctx.element(g));
}

// every word is (n^- letters)* followed by exactly one m letter
bool ends_in_m(const LieContext& ctx, const UEAElement& e) {
    for (const auto& [w, c] : e.terms()) {
        if (w.empty()) return false;
        for (size_t p = 0; p + 1 < w.size(); ++p)
            if (ctx.basis()[static_cast<size_t>(w[p])].subspace != Subspace::NMinus)
                return false;
        if (ctx.basis()[static_cast<size_t>(w.back())].subspace != Subspace::M) return false;
    }
    return true;
}

}  // namespace

bool power_commutator_diagonal(const LieContext& ctx, int N) {
    UEAElement yp = gen(ctx, {GenKind::Yplus, 1});
    UEAElement ym = gen(ctx, {GenKind::Yminus, 1});
    UEAElement h = gen(ctx, {GenKind::H});
    UEAElement lhs = UEAElement::commutator(yp, ym.pow(2 * N));
    UEAElement rhs = ym.pow(2 * N - 1).scaled(RatFunc(Rat(-2 * N * (2 * N - 1)))) +
                     (ym.pow(2 * N - 1) * h).scaled(RatFunc(Rat(4 * N)));
    return lhs == rhs;
}

bool power_commutator_offdiagonal(const LieContext& ctx, int N, int r) {
    UEAElement yp = gen(ctx, {GenKind::Yplus, 1});
    UEAElement y1 = gen(ctx, {GenKind::Yminus, 1});
    UEAElement yr = gen(ctx, {GenKind::Yminus, r});
    UEAElement m1r = gen(ctx, {GenKind::Mij, 1, r});
    UEAElement lhs = UEAElement::commutator(yp, yr.pow(2 * N));
    UEAElement rhs = (y1 * yr.pow(2 * N - 2)).scaled(RatFunc(Rat(2 * N * (2 * N - 1)))) +
                     (yr.pow(2 * N - 1) * m1r).scaled(RatFunc(Rat(4 * N)));
    return lhs == rhs;
}

bool laplacian_commutator_shape(const LieContext& ctx) {
    int n = ctx.n();
    UEAElement yp = gen(ctx, {GenKind::Yplus, 1});
    UEAElement y1 = gen(ctx, {GenKind::Yminus, 1});
    UEAElement h = gen(ctx, {GenKind::H});
    UEAElement rem = UEAElement::commutator(yp, nminus_laplacian(ctx)) -
                     y1.scaled(RatFunc(Rat(2 * n - 6))) - (y1 * h).scaled(RatFunc(Rat(4)));
    for (const auto& [w, c] : rem.terms())
        if (w.size() != 2) return false;
    return ends_in_m(ctx, rem);
}

bool laplacian_power_commutator_shape(const LieContext& ctx, int j) {
    int n = ctx.n();
    UEAElement yp = gen(ctx, {GenKind::Yplus, 1});
    UEAElement y1 = gen(ctx, {GenKind::Yminus, 1});
    UEAElement h = gen(ctx, {GenKind::H});
    UEAElement delta = nminus_laplacian(ctx);
    UEAElement rem =
        UEAElement::commutator(yp, delta.pow(j)) -
        (y1 * delta.pow(j - 1)).scaled(RatFunc(Rat(2 * j * (n - 1 - 2 * j)))) -
        (y1 * delta.pow(j - 1) * h).scaled(RatFunc(Rat(4 * j)));
    return ends_in_m(ctx, rem);
}

}  // namespace adsfam
