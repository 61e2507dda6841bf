#pragma once

#include <map>
#include <string>
#include <vector>

#include "adsfam/lie.hpp"
#include "adsfam/ratfunc.hpp"

namespace adsfam {

// Polynomial in x_1..x_m with rational-function coefficients; doubles as the
// test-function space for the formal operators below.
struct MVPoly {
    int nvars = 0;
    std::map<std::vector<int>, RatFunc> terms;

    static MVPoly monomial(int nvars, std::vector<int> alpha, const RatFunc& c = RatFunc(1));

    bool is_zero() const { return terms.empty(); }
    void add(const std::vector<int>& alpha, const RatFunc& c);
    friend MVPoly operator+(const MVPoly& a, const MVPoly& b);
    friend MVPoly operator-(const MVPoly& a, const MVPoly& b);
    friend MVPoly operator*(const MVPoly& a, const MVPoly& b);
    MVPoly scaled(const RatFunc& s) const;
    friend bool operator==(const MVPoly& a, const MVPoly& b) {
        return a.nvars == b.nvars && a.terms == b.terms;
    }

    MVPoly deriv(int i) const;
    // i^*: set x_m = 0 and drop the last variable.
    MVPoly restricted() const;

    std::string str(const std::string& var = "L") const;
};

// Constant-coefficient operator c_alpha * d^alpha on R^m, optionally composed
// with the restriction i^* to the hyperplane x_m = 0. Tangential factors
// commute with i^*, so a single multi-index map with one flag is a canonical
// form for every composition appearing here.
struct DiffOp {
    int ambient_dim = 0;
    bool restrict_last = false;
    std::map<std::vector<int>, RatFunc> terms;

    static DiffOp zero(int m, bool restrict_last = false);
    static DiffOp monomial(int m, std::vector<int> alpha, const RatFunc& c = RatFunc(1));
    // -d_1^2 + d_2^2 + ... + d_m^2
    static DiffOp dalembertian(int m);
    // i^* itself.
    static DiffOp restriction(int m);

    void add(const std::vector<int>& alpha, const RatFunc& c);
    friend DiffOp operator+(const DiffOp& a, const DiffOp& b);
    friend DiffOp operator-(const DiffOp& a, const DiffOp& b);
    DiffOp scaled(const RatFunc& s) const;
    // Symbol product; both factors must act on the same ambient space and
    // only the outer factor may restrict.
    friend DiffOp operator*(const DiffOp& a, const DiffOp& b);
    DiffOp pow(int k) const;
    // The same operator followed by i^*.
    DiffOp with_restriction() const;
    // Pads a tangential operator on R^{m-1} to R^m composed with i^*.
    DiffOp after_restriction(int m) const;

    friend bool operator==(const DiffOp& a, const DiffOp& b) {
        return a.ambient_dim == b.ambient_dim && a.restrict_last == b.restrict_last &&
               a.terms == b.terms;
    }

    MVPoly apply(const MVPoly& f) const;
    DiffOp eval_lambda(const Rat& x) const;
    DiffOp shifted(const Rat& c) const;
    int order() const;

    std::string str(const std::string& var = "L") const;
};

// D_N^nc: sum_j a_j(lambda) Dalembertian_{M^{n-1}}^j i^* d_n^{N-2j} as an
// operator from functions of n variables to functions of n-1 variables.
DiffOp family_nc(int n, int order);

// The two special-value identities for the even family of half-order N:
// at lambda = -n/2 + N the family is i^* Dal_{M^n}^N, and at
// lambda = -(n-1)/2 + N it is Dal_{M^(n-1)}^N i^*. Checked coefficient-wise
// and by application to every monomial of degree <= 2N + 2.
std::vector<RelationCheck> verify_special_values(int n, int half_order);

// All monomials of R^m of total degree <= maxdeg.
std::vector<std::vector<int>> all_monomials(int m, int maxdeg);

}  // namespace adsfam
