#include "adsfam/families.hpp"

#include <map>
#include <stdexcept>

#include "adsfam/linalg.hpp"

namespace adsfam {

FamilyCoefficients compute_coefficients(int n, int order) {
    if (n < 4) throw std::invalid_argument("dimension too small: need n >= 4");
    if (order < 0) throw std::invalid_argument("order must be nonnegative");
    int N = order / 2;
    bool even = order % 2 == 0;
    std::vector<RatFunc> c(static_cast<size_t>(N) + 1);
    c[static_cast<size_t>(N)] = RatFunc(1);
    Poly two_lambda = Poly::lambda().scaled(2);
    for (int j = N; j >= 1; --j) {
        // even:  (N-j+1)(2N-2j+1) a_{j-1} + j (n-1+2L-4N+2j) a_j = 0
        // odd:   (N-j+1)(2N-2j+3) b_{j-1} + j (n-3+2L-4N+2j) b_j = 0
        long shift = even ? (n - 1 - 4 * N + 2 * j) : (n - 3 - 4 * N + 2 * j);
        long denom = even ? static_cast<long>(N - j + 1) * (2 * N - 2 * j + 1)
                          : static_cast<long>(N - j + 1) * (2 * N - 2 * j + 3);
        RatFunc lin = RatFunc(two_lambda + Poly(Rat(shift)));
        c[static_cast<size_t>(j - 1)] =
            -(RatFunc(Rat(j)) * lin * c[static_cast<size_t>(j)]) / RatFunc(Rat(denom));
    }
    return {n, order, std::move(c)};
}

UEAElement boundary_laplacian(const LieContext& big) {
    auto sq = [&](const GenName& g) {
        int k = big.index_of(g);
        return UEAElement::monomial(&big, {k, k}, RatFunc(1));
    };
    UEAElement r = -sq({GenKind::Q1minus}) + sq({GenKind::Q2minus});
    for (int j = 1; j <= big.n() - 4; ++j) r = r + sq({GenKind::Yminus, j});
    return r;
}

UEAElement transverse_generator(const LieContext& big) {
    return UEAElement::from_lie(big.element({GenKind::Yminus, big.n() - 3}));
}

UEAElement build_family(const LieContext& big, const FamilyCoefficients& fc) {
    if (big.n() != fc.n + 1)
        throw std::invalid_argument("family for parameter n lives in the context of size n+1");
    UEAElement delta = boundary_laplacian(big);
    UEAElement t = transverse_generator(big);
    UEAElement d(&big);
    for (size_t j = 0; j < fc.coeff.size(); ++j)
        d += (delta.pow(static_cast<int>(j)) * t.pow(fc.order - 2 * static_cast<int>(j)))
                 .scaled(fc.coeff[j]);
    return d;
}

std::vector<std::vector<int>> nminus_words(const LieContext& ctx, int degree) {
    int letters = ctx.n() - 1;  // n^- block is the first n-1 basis indices
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int from, int left) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = from; k < letters; ++k) {
            cur.push_back(k);
            self(self, k, left - 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, degree);
    return out;
}

namespace {

// Basis of the embedded subalgebra's m, and the raising-side test elements,
// all inside the big context. The subalgebra parameter is n = big.n() - 1.
std::vector<std::pair<std::string, UEAElement>> m_constraints(const LieContext& big) {
    int r = big.n() - 4;  // = n - 3
    std::vector<std::pair<std::string, UEAElement>> out;
    auto add = [&](const GenName& g) {
        out.emplace_back(g.str(), UEAElement::from_lie(big.element(g)));
    };
    for (int j = 1; j <= r; ++j) add({GenKind::Zplus, j});
    for (int j = 1; j <= r; ++j) add({GenKind::Zminus, j});
    add({GenKind::H2});
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) add({GenKind::Mij, i, j});
    return out;
}

std::vector<std::pair<std::string, UEAElement>> raising_constraints(const LieContext& big) {
    int r = big.n() - 4;
    std::vector<std::pair<std::string, UEAElement>> out;
    auto add = [&](const GenName& g) {
        out.emplace_back(g.str(), UEAElement::from_lie(big.element(g)));
    };
    for (int j = 1; j <= r; ++j) add({GenKind::Yplus, j});
    add({GenKind::Q1plus});
    add({GenKind::Q2plus});
    out.emplace_back("W1", UEAElement::from_lie(big.w_element(1)));
    out.emplace_back("W2", UEAElement::from_lie(big.w_element(2)));
    return out;
}

// m of the context itself (every basis element in the m block).
std::vector<std::pair<std::string, UEAElement>> own_m_basis(const LieContext& ctx) {
    std::vector<std::pair<std::string, UEAElement>> out;
    for (size_t k = 0; k < ctx.basis().size(); ++k)
        if (ctx.basis()[k].subspace == Subspace::M) {
            LieElt e = ctx.zero();
            e.c[k] = 1;
            out.emplace_back(ctx.basis()[k].name.str(), UEAElement::from_lie(e));
        }
    return out;
}

}  // namespace

std::vector<RelationCheck> verify_equivariance(const LieContext& big, const UEAElement& d,
                                               int order) {
    std::vector<RelationCheck> out;
    for (const auto& [name, m] : m_constraints(big))
        out.push_back({"[" + name + ",D]=0", UEAElement::commutator(m, d).is_zero()});
    for (const auto& [name, x] : raising_constraints(big))
        out.push_back({"[" + name + ",D]=0 mod ideal",
                       UEAElement::commutator(x, d).reduce_mod_ideal().is_zero()});
    UEAElement h = UEAElement::from_lie(big.element({GenKind::H}));
    out.push_back({"[H,D]=-order*D",
                   UEAElement::commutator(h, d) == d.scaled(RatFunc(Rat(-order)))});
    return out;
}

namespace {

std::vector<std::vector<RatFunc>> constrained_nullspace(
    const LieContext& ctx, const std::vector<std::vector<int>>& words,
    const std::vector<std::pair<std::string, UEAElement>>& constraints, bool reduce) {
    RFMatrix rows;
    for (const auto& [name, x] : constraints) {
        std::map<std::vector<int>, int> row_of;
        for (size_t k = 0; k < words.size(); ++k) {
            UEAElement e =
                UEAElement::commutator(x, UEAElement::monomial(&ctx, words[k], RatFunc(1)));
            if (reduce) e = e.reduce_mod_ideal();
            for (const auto& [w, c] : e.terms()) {
                auto it = row_of.find(w);
                if (it == row_of.end()) {
                    it = row_of.emplace(w, static_cast<int>(rows.size())).first;
                    rows.emplace_back(words.size(), RatFunc());
                }
                rows[static_cast<size_t>(it->second)][k] += c;
            }
        }
    }
    return nullspace(std::move(rows), static_cast<int>(words.size()));
}

}  // namespace

int equivariant_nullity(const LieContext& big, int order) {
    return verify_uniqueness(big, order).dimension;
}

UniquenessResult verify_uniqueness(const LieContext& big, int order) {
    auto constraints = m_constraints(big);
    for (auto& c : raising_constraints(big)) constraints.push_back(std::move(c));
    std::vector<std::vector<int>> words = nminus_words(big, order);
    auto basis = constrained_nullspace(big, words, constraints, /*reduce=*/true);
    UniquenessResult res{static_cast<int>(basis.size()), false};
    if (res.dimension != 1) return res;
    // compare the generator with the recursion-built family up to a scalar
    UEAElement d = build_family(big, compute_coefficients(big.n() - 1, order));
    std::vector<RatFunc> fam(words.size());
    for (size_t k = 0; k < words.size(); ++k) {
        auto it = d.terms().find(words[k]);
        if (it != d.terms().end()) fam[k] = it->second;
    }
    RatFunc scale;
    bool have = false, ok = true;
    for (size_t k = 0; k < words.size(); ++k) {
        const RatFunc& v = basis[0][k];
        if (fam[k].is_zero() != v.is_zero()) {
            ok = false;
            break;
        }
        if (fam[k].is_zero()) continue;
        RatFunc r = v / fam[k];
        if (!have) {
            scale = r;
            have = true;
        } else if (!(r == scale)) {
            ok = false;
            break;
        }
    }
    res.generator_matches_family = ok && have;
    return res;
}

std::vector<RelationCheck> negative_controls(const LieContext& big, int order) {
    std::vector<RelationCheck> out;
    FamilyCoefficients fc = compute_coefficients(big.n() - 1, order);
    // With a single coefficient a perturbation merely rescales the operator,
    // which stays equivariant; there is nothing to control against.
    if (fc.coeff.size() < 2) return out;
    for (size_t j = 0; j < fc.coeff.size(); ++j) {
        FamilyCoefficients perturbed = fc;
        perturbed.coeff[j] += RatFunc(1);
        UEAElement d = build_family(big, perturbed);
        bool broken = false;
        for (const auto& [name, x] : raising_constraints(big))
            if (!UEAElement::commutator(x, d).reduce_mod_ideal().is_zero()) broken = true;
        out.push_back({"perturb a_" + std::to_string(j) + " breaks raising condition", broken});
    }
    return out;
}

int centralizer_dimension(const LieContext& ctx, int degree_bound) {
    std::vector<std::vector<int>> words;
    for (int d = 0; d <= degree_bound; ++d)
        for (auto& w : nminus_words(ctx, d)) words.push_back(std::move(w));
    return static_cast<int>(
        constrained_nullspace(ctx, words, own_m_basis(ctx), /*reduce=*/false).size());
}

bool laplacian_powers_centralize(const LieContext& ctx, int degree_bound) {
    UEAElement delta = nminus_laplacian(ctx);
    for (int k = 0; 2 * k <= degree_bound; ++k) {
        UEAElement p = delta.pow(k);
        for (const auto& [name, m] : own_m_basis(ctx))
            if (!UEAElement::commutator(m, p).is_zero()) return false;
    }
    return true;
}

std::vector<RelationCheck> verify_parity(const LieContext& small, const LieContext& big,
                                         const UEAElement& d, int order) {
    std::vector<RelationCheck> out;
    GroupElement j = small.include_group(big, small.J());
    GroupElement w1 = small.include_group(big, small.w1());
    GroupElement w2 = small.include_group(big, small.w2());
    Rat sign = order % 2 == 0 ? Rat(1) : Rat(-1);
    out.push_back({"Ad(i(J))D=(-1)^order*D", d.ad_group(j) == d.scaled(RatFunc(sign))});
    out.push_back({"Ad(i(w1))D=D", d.ad_group(w1) == d});
    out.push_back({"Ad(i(w2))D=D", d.ad_group(w2) == d});
    return out;
}

}  // namespace adsfam
