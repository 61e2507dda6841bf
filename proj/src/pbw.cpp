#include "adsfam/pbw.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace adsfam {

UEAElement UEAElement::one(const LieContext* ctx) {
    UEAElement e(ctx);
    e.terms_[{}] = RatFunc(1);
    return e;
}

UEAElement UEAElement::from_lie(const LieElt& x) {
    UEAElement e(x.ctx);
    for (size_t k = 0; k < x.c.size(); ++k)
        if (x.c[k] != 0) e.terms_[{static_cast<int>(k)}] = RatFunc(x.c[k]);
    return e;
}

UEAElement UEAElement::monomial(const LieContext* ctx, std::vector<int> word,
                                const RatFunc& coeff) {
    UEAElement e(ctx);
    if (!coeff.is_zero()) e.straighten_into(std::move(word), coeff);
    return e;
}

void UEAElement::add_term(const std::vector<int>& word, const RatFunc& coeff) {
    auto it = terms_.find(word);
    if (it == terms_.end()) {
        if (!coeff.is_zero()) terms_.emplace(word, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

UEAElement operator+(const UEAElement& a, const UEAElement& b) {
    UEAElement r = a;
    if (!r.ctx_) r.ctx_ = b.ctx_;
    for (const auto& [w, c] : b.terms_) r.add_term(w, c);
    return r;
}

UEAElement operator-(const UEAElement& a, const UEAElement& b) {
    UEAElement r = a;
    if (!r.ctx_) r.ctx_ = b.ctx_;
    for (const auto& [w, c] : b.terms_) r.add_term(w, -c);
    return r;
}

UEAElement UEAElement::operator-() const {
    UEAElement r(ctx_);
    for (const auto& [w, c] : terms_) r.terms_[w] = -c;
    return r;
}

UEAElement UEAElement::scaled(const RatFunc& s) const {
    UEAElement r(ctx_);
    if (s.is_zero()) return r;
    for (const auto& [w, c] : terms_) r.terms_[w] = c * s;
    return r;
}

void UEAElement::straighten_into(std::vector<int> word, RatFunc coeff) {
    // Worklist rewriting: an out-of-order adjacent pair x_b x_a (b after a in
    // the basis order) becomes x_a x_b + [x_b, x_a]. Each step lowers
    // (length, inversions) lexicographically, so this terminates.
    std::vector<std::pair<std::vector<int>, RatFunc>> work;
    work.emplace_back(std::move(word), std::move(coeff));
    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();
        size_t p = 0;
        while (p + 1 < w.size() && w[p] <= w[p + 1]) ++p;
        if (p + 1 >= w.size()) {
            add_term(w, c);
            continue;
        }
        std::vector<int> swapped = w;
        std::swap(swapped[p], swapped[p + 1]);
        for (const auto& [k, s] : ctx_->structure(w[p], w[p + 1])) {
            std::vector<int> shorter;
            shorter.reserve(w.size() - 1);
            shorter.insert(shorter.end(), w.begin(), w.begin() + static_cast<long>(p));
            shorter.push_back(k);
            shorter.insert(shorter.end(), w.begin() + static_cast<long>(p) + 2, w.end());
            work.emplace_back(std::move(shorter), c * RatFunc(s));
        }
        work.emplace_back(std::move(swapped), std::move(c));
    }
}

UEAElement operator*(const UEAElement& a, const UEAElement& b) {
    UEAElement r(a.ctx_ ? a.ctx_ : b.ctx_);
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            std::vector<int> w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.straighten_into(std::move(w), ca * cb);
        }
    return r;
}

UEAElement UEAElement::pow(int k) const {
    UEAElement r = one(ctx_);
    for (int i = 0; i < k; ++i) r = r * (*this);
    return r;
}

int UEAElement::weight() const {
    bool have = false;
    int wt = 0;
    for (const auto& [w, c] : terms_) {
        int s = 0;
        for (int k : w) s += ctx_->basis()[static_cast<size_t>(k)].ad_H_weight;
        if (!have) {
            wt = s;
            have = true;
        } else if (s != wt) {
            throw std::domain_error("element has mixed ad(H) weight");
        }
    }
    return have ? wt : 0;
}

bool UEAElement::in_nminus() const {
    for (const auto& [w, c] : terms_)
        for (int k : w)
            if (ctx_->basis()[static_cast<size_t>(k)].subspace != Subspace::NMinus) return false;
    return true;
}

UEAElement UEAElement::reduce_mod_ideal() const {
    UEAElement r(ctx_);
    for (const auto& [w, c] : terms_) {
        size_t cut = w.size();
        int extra = 0;
        Subspace extra_sub = Subspace::NMinus;
        for (size_t p = 0; p < w.size(); ++p) {
            Subspace s = ctx_->basis()[static_cast<size_t>(w[p])].subspace;
            if (s == Subspace::NMinus) continue;
            if (s == Subspace::NPlus)
                throw std::domain_error("reduction requires words without raising letters");
            if (++extra > 1)
                throw std::domain_error("reduction requires at most one non-lowering letter");
            cut = p;
            extra_sub = s;
        }
        if (extra == 0) {
            r.add_term(w, c);
        } else if (extra_sub == Subspace::A) {
            // trailing H acts as multiplication by lambda on the quotient
            std::vector<int> head(w.begin(), w.begin() + static_cast<long>(cut));
            r.add_term(head, c * RatFunc::lambda());
        }
        // trailing m letter: the word lies in the ideal, drop it
    }
    return r;
}

UEAElement UEAElement::ad_group(const GroupElement& w) const {
    UEAElement r(ctx_);
    for (const auto& [word, c] : terms_) {
        UEAElement prod = one(ctx_).scaled(c);
        for (int k : word) {
            LieElt letter = ctx_->zero();
            letter.c[static_cast<size_t>(k)] = 1;
            prod = prod * from_lie(ctx_->ad_group(w, letter));
        }
        r = r + prod;
    }
    return r;
}

UEAElement UEAElement::eval_lambda(const Rat& x) const {
    UEAElement r(ctx_);
    for (const auto& [w, c] : terms_) r.add_term(w, RatFunc(c.eval_at(x)));
    return r;
}

UEAElement UEAElement::shifted(const Rat& c) const {
    UEAElement r(ctx_);
    for (const auto& [w, f] : terms_) r.terms_[w] = f.shifted(c);
    return r;
}

std::string UEAElement::str(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str(var) << ")";
        for (int k : w) os << "*" << ctx_->basis()[static_cast<size_t>(k)].name.str();
    }
    return os.str();
}

UEAElement nminus_laplacian(const LieContext& ctx) {
    auto sq = [&](const GenName& g) {
        int k = ctx.index_of(g);
        return UEAElement::monomial(&ctx, {k, k}, RatFunc(1));
    };
    UEAElement r = -sq({GenKind::Q1minus}) + sq({GenKind::Q2minus});
    for (int j = 1; j <= ctx.n() - 3; ++j) r = r + sq({GenKind::Yminus, j});
    return r;
}

}  // namespace adsfam
