#include "adsfam/asymptotics.hpp"

#include <map>
#include <stdexcept>

namespace adsfam {

AsymptoticCoefficients derive_recursion_oracle(int n, int jmax) {
    // c_s as a polynomial in Dal' (exponent -> coefficient). The three terms
    // of the operator act on r^(lambda+s) g as:
    //   r^2 d_r^2        -> (lambda+s)(lambda+s-1) r^(lambda+s) g
    //   -(n-2) r d_r     -> -(n-2)(lambda+s) r^(lambda+s) g
    //   r^2 Dal'         -> r^(lambda+s+2) Dal' g
    // and the eigenvalue contributes lambda(n-1-lambda) r^(lambda+s) g, so
    // matching the power s gives m_s c_s + Dal' c_{s-2} = 0 with m_s
    // assembled below, never simplified by hand.
    Poly L = Poly::lambda();
    auto indicial = [&](int s) {
        Poly ls = L + Poly(Rat(s));
        Poly m = ls * (ls - Poly(Rat(1)))                      // r^2 d_r^2
                 - ls.scaled(Rat(n - 2))                       // -(n-2) r d_r
                 + L * (Poly(Rat(n - 1)) - L);                 // eigenvalue
        return RatFunc(m);
    };
    std::map<int, RatFunc> prev, prev_odd;
    prev[0] = RatFunc(1);  // c_0
    // odd ladder starts from c_1; m_1 is a nonzero polynomial, so c_1 = 0 and
    // every odd coefficient vanishes identically
    if (indicial(1).is_zero()) throw std::domain_error("odd indicial root at s=1");
    std::vector<RatFunc> A;
    A.push_back(RatFunc(1));
    for (int j = 1; j <= jmax; ++j) {
        int s = 2 * j;
        RatFunc m = indicial(s);
        if (m.is_zero()) throw std::domain_error("vanishing indicial factor");
        std::map<int, RatFunc> cur;
        for (const auto& [e, c] : prev) cur[e + 1] = -(c / m);
        if (cur.size() != 1 || cur.begin()->first != j)
            throw std::domain_error("order matching produced a non-power relation");
        A.push_back(cur.begin()->second);
        prev = std::move(cur);
    }
    return {n, std::move(A)};
}

RatFunc asymptotic_closed_form(int n, int j) {
    Poly L = Poly::lambda();
    Poly den = Poly(Rat(1));
    for (int k = 1; k <= j; ++k)
        den = den * (L.scaled(Rat(2)) + Poly(Rat(2 * k + 1 - n))).scaled(Rat(2 * k));
    return RatFunc(Poly(Rat(j % 2 == 0 ? 1 : -1)), den);
}

DiffOp build_residue_family(int n, int order) {
    AsymptoticCoefficients ac = derive_recursion_oracle(n, order / 2);
    DiffOp tang = DiffOp::dalembertian(n - 1);
    DiffOp r = DiffOp::zero(n, true);
    for (int j = 0; 2 * j <= order; ++j) {
        int k = order - 2 * j;
        Rat fact(1);
        for (int i = 2; i <= k; ++i) fact *= i;
        DiffOp term = tang.pow(j).after_restriction(n);
        std::vector<int> normal(static_cast<size_t>(n), 0);
        normal.back() = k;
        term = term * DiffOp::monomial(n, normal, RatFunc(1));
        r = r + term.scaled(ac.A[static_cast<size_t>(j)] / RatFunc(fact));
    }
    return r;
}

RatFunc coincidence_constant_even(int n, int half_order) {
    int N = half_order;
    Poly mu = Poly::lambda();  // rendered in mu first, shifted below
    Poly den = Poly(Rat(1));
    Rat lead(1);
    for (int k = 1; k <= N; ++k) {
        den = den * (Poly(Rat(n - 1 - 2 * k)) - mu.scaled(Rat(2)));
        lead *= 2 * k;  // 2^N N!
    }
    RatFunc b(Poly(Rat(1)), den.scaled(lead));
    return b.shifted(Rat(n - 1 - 2 * N));  // mu = lambda + n - 1 - 2N
}

CoincidenceResult verify_coincidence(int n, int order) {
    DiffOp s = build_residue_family(n, order).shifted(Rat(n - 1 - order));
    DiffOp d = family_nc(n, order);
    CoincidenceResult res{false, RatFunc(), true};
    if (d.terms.empty() || s.terms.empty()) return res;
    const auto& [al, c] = *d.terms.begin();
    auto it = s.terms.find(al);
    if (it == s.terms.end()) return res;
    res.constant = it->second / c;
    res.proportional = s == d.scaled(res.constant);
    if (order % 2 == 0)
        res.matches_closed_form = res.constant == coincidence_constant_even(n, order / 2);
    return res;
}

bool verify_pole_structure(int n, int j) {
    RatFunc a = derive_recursion_oracle(n, j).A[static_cast<size_t>(j)];
    if (a.num().degree() != 0) return false;
    Poly L = Poly::lambda();
    Poly expect = Poly(Rat(1));
    for (int k = 1; k <= j; ++k)
        expect = expect * (L.scaled(Rat(2)) + Poly(Rat(2 * k + 1 - n)));
    return a.den() == expect.monic();
}

}  // namespace adsfam
