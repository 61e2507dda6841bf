#pragma once

#include <map>
#include <string>
#include <vector>

#include "adsfam/lie.hpp"
#include "adsfam/ratfunc.hpp"

namespace adsfam {

// Element of U(g_n) written over the ordered monomial basis. A word is a
// nondecreasing vector of basis indices; the letter order is the basis order
// of LieContext (n^- first, then m, then H, then n^+), so normal form puts
// lowering operators on the left. Coefficients are rational functions in the
// spectral parameter.
class UEAElement {
  public:
    UEAElement() = default;
    explicit UEAElement(const LieContext* ctx) : ctx_(ctx) {}

    static UEAElement one(const LieContext* ctx);
    static UEAElement from_lie(const LieElt& x);
    static UEAElement monomial(const LieContext* ctx, std::vector<int> word,
                               const RatFunc& coeff);

    const LieContext* ctx() const { return ctx_; }
    const std::map<std::vector<int>, RatFunc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend UEAElement operator+(const UEAElement& a, const UEAElement& b);
    friend UEAElement operator-(const UEAElement& a, const UEAElement& b);
    friend UEAElement operator*(const UEAElement& a, const UEAElement& b);
    UEAElement operator-() const;
    UEAElement scaled(const RatFunc& s) const;
    UEAElement& operator+=(const UEAElement& o) { return *this = *this + o; }
    UEAElement& operator-=(const UEAElement& o) { return *this = *this - o; }
    friend bool operator==(const UEAElement& a, const UEAElement& b) {
        return a.terms_ == b.terms_;
    }

    UEAElement pow(int k) const;

    static UEAElement commutator(const UEAElement& a, const UEAElement& b) {
        return a * b - b * a;
    }

    // ad(H) weight when every word has the same one; throws on mixed weight.
    // Zero reports weight 0.
    int weight() const;

    // True when every letter of every word lies in n^-.
    bool in_nminus() const;

    // Image modulo the left ideal generated by m and (H - lambda), as an
    // element of U(n^-). Requires normal-form words free of n^+ letters with
    // at most one letter outside n^-; straightened commutators of the form
    // [X, D] with D in U(n^-) always satisfy this.
    UEAElement reduce_mod_ideal() const;

    // Extends Ad(w) multiplicatively to words.
    UEAElement ad_group(const GroupElement& w) const;

    // Specializes every coefficient at lambda = x; throws on a pole.
    UEAElement eval_lambda(const Rat& x) const;

    // Coefficient-wise f(lambda) -> f(lambda + c).
    UEAElement shifted(const Rat& c) const;

    std::string str(const std::string& var = "L") const;

  private:
    void add_term(const std::vector<int>& word, const RatFunc& coeff);
    // Rewrites an arbitrary word into normal form, accumulating into terms_.
    void straighten_into(std::vector<int> word, RatFunc coeff);

    const LieContext* ctx_ = nullptr;
    std::map<std::vector<int>, RatFunc> terms_;
};

// -(Q1-)^2 + (Q2-)^2 + sum_j (Y_j-)^2, the boundary Laplacian lifted to
// U(n^-).
UEAElement nminus_laplacian(const LieContext& ctx);

}  // namespace adsfam
