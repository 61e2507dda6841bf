#include "adsfam/diffop.hpp"

#include <sstream>
#include <stdexcept>

#include "adsfam/families.hpp"

namespace adsfam {

MVPoly MVPoly::monomial(int nvars, std::vector<int> alpha, const RatFunc& c) {
    MVPoly p;
    p.nvars = nvars;
    alpha.resize(static_cast<size_t>(nvars), 0);
    if (!c.is_zero()) p.terms.emplace(std::move(alpha), c);
    return p;
}

void MVPoly::add(const std::vector<int>& alpha, const RatFunc& c) {
    auto it = terms.find(alpha);
    if (it == terms.end()) {
        if (!c.is_zero()) terms.emplace(alpha, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

MVPoly operator+(const MVPoly& a, const MVPoly& b) {
    MVPoly r = a;
    for (const auto& [al, c] : b.terms) r.add(al, c);
    return r;
}

MVPoly operator-(const MVPoly& a, const MVPoly& b) {
    MVPoly r = a;
    for (const auto& [al, c] : b.terms) r.add(al, -c);
    return r;
}

MVPoly operator*(const MVPoly& a, const MVPoly& b) {
    MVPoly r;
    r.nvars = a.nvars;
    for (const auto& [al, ca] : a.terms)
        for (const auto& [bl, cb] : b.terms) {
            std::vector<int> s = al;
            for (size_t i = 0; i < s.size(); ++i) s[i] += bl[i];
            r.add(s, ca * cb);
        }
    return r;
}

MVPoly MVPoly::scaled(const RatFunc& s) const {
    MVPoly r;
    r.nvars = nvars;
    if (s.is_zero()) return r;
    for (const auto& [al, c] : terms) r.terms.emplace(al, c * s);
    return r;
}

MVPoly MVPoly::deriv(int i) const {
    MVPoly r;
    r.nvars = nvars;
    for (const auto& [al, c] : terms) {
        int e = al[static_cast<size_t>(i)];
        if (e == 0) continue;
        std::vector<int> b = al;
        --b[static_cast<size_t>(i)];
        r.add(b, c * RatFunc(Rat(e)));
    }
    return r;
}

MVPoly MVPoly::restricted() const {
    MVPoly r;
    r.nvars = nvars - 1;
    for (const auto& [al, c] : terms) {
        if (al.back() != 0) continue;
        std::vector<int> b(al.begin(), al.end() - 1);
        r.add(b, c);
    }
    return r;
}

std::string MVPoly::str(const std::string& var) const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [al, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str(var) << ")";
        for (size_t i = 0; i < al.size(); ++i) {
            if (al[i] == 0) continue;
            os << "*x" << i + 1;
            if (al[i] > 1) os << "^" << al[i];
        }
    }
    return os.str();
}

DiffOp DiffOp::zero(int m, bool restrict_last) { return DiffOp{m, restrict_last, {}}; }

DiffOp DiffOp::monomial(int m, std::vector<int> alpha, const RatFunc& c) {
    DiffOp d{m, false, {}};
    alpha.resize(static_cast<size_t>(m), 0);
    if (!c.is_zero()) d.terms.emplace(std::move(alpha), c);
    return d;
}

DiffOp DiffOp::dalembertian(int m) {
    DiffOp d{m, false, {}};
    for (int i = 0; i < m; ++i) {
        std::vector<int> al(static_cast<size_t>(m), 0);
        al[static_cast<size_t>(i)] = 2;
        d.terms.emplace(std::move(al), RatFunc(Rat(i == 0 ? -1 : 1)));
    }
    return d;
}

DiffOp DiffOp::restriction(int m) {
    DiffOp d{m, true, {}};
    d.terms.emplace(std::vector<int>(static_cast<size_t>(m), 0), RatFunc(1));
    return d;
}

void DiffOp::add(const std::vector<int>& alpha, const RatFunc& c) {
    auto it = terms.find(alpha);
    if (it == terms.end()) {
        if (!c.is_zero()) terms.emplace(alpha, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

DiffOp operator+(const DiffOp& a, const DiffOp& b) {
    if (a.restrict_last != b.restrict_last || a.ambient_dim != b.ambient_dim)
        throw std::invalid_argument("operator sum shape mismatch");
    DiffOp r = a;
    for (const auto& [al, c] : b.terms) r.add(al, c);
    return r;
}

DiffOp operator-(const DiffOp& a, const DiffOp& b) {
    return a + b.scaled(RatFunc(Rat(-1)));
}

DiffOp DiffOp::scaled(const RatFunc& s) const {
    DiffOp r{ambient_dim, restrict_last, {}};
    if (s.is_zero()) return r;
    for (const auto& [al, c] : terms) r.terms.emplace(al, c * s);
    return r;
}

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
    if (b.restrict_last) throw std::invalid_argument("inner factor may not restrict");
    if (a.ambient_dim != b.ambient_dim) throw std::invalid_argument("dimension mismatch");
    DiffOp r{a.ambient_dim, a.restrict_last, {}};
    for (const auto& [al, ca] : a.terms)
        for (const auto& [bl, cb] : b.terms) {
            std::vector<int> s = al;
            for (size_t i = 0; i < s.size(); ++i) s[i] += bl[i];
            r.add(s, ca * cb);
        }
    return r;
}

DiffOp DiffOp::pow(int k) const {
    DiffOp r = monomial(ambient_dim, {}, RatFunc(1));
    for (int i = 0; i < k; ++i) r = r * (*this);
    return r;
}

DiffOp DiffOp::with_restriction() const {
    DiffOp r = *this;
    r.restrict_last = true;
    return r;
}

DiffOp DiffOp::after_restriction(int m) const {
    if (restrict_last || ambient_dim != m - 1)
        throw std::invalid_argument("expects a tangential operator on m-1 variables");
    DiffOp r{m, true, {}};
    for (const auto& [al, c] : terms) {
        std::vector<int> b = al;
        b.push_back(0);
        r.terms.emplace(std::move(b), c);
    }
    return r;
}

MVPoly DiffOp::apply(const MVPoly& f) const {
    if (f.nvars != ambient_dim) throw std::invalid_argument("dimension mismatch");
    MVPoly g;
    g.nvars = ambient_dim;
    for (const auto& [al, c] : terms)
        for (const auto& [bl, cb] : f.terms) {
            std::vector<int> d(bl.size());
            Rat fact(1);
            bool ok = true;
            for (size_t i = 0; i < bl.size(); ++i) {
                if (bl[i] < al[i]) {
                    ok = false;
                    break;
                }
                d[i] = bl[i] - al[i];
                for (int e = bl[i]; e > d[i]; --e) fact *= e;
            }
            if (ok) g.add(d, c * cb * RatFunc(fact));
        }
    return restrict_last ? g.restricted() : g;
}

DiffOp DiffOp::eval_lambda(const Rat& x) const {
    DiffOp r{ambient_dim, restrict_last, {}};
    for (const auto& [al, c] : terms) r.add(al, RatFunc(c.eval_at(x)));
    return r;
}

DiffOp DiffOp::shifted(const Rat& c) const {
    DiffOp r{ambient_dim, restrict_last, {}};
    for (const auto& [al, f] : terms) r.terms.emplace(al, f.shifted(c));
    return r;
}

int DiffOp::order() const {
    int d = 0;
    for (const auto& [al, c] : terms) {
        int s = 0;
        for (int e : al) s += e;
        if (s > d) d = s;
    }
    return d;
}

std::string DiffOp::str(const std::string& var) const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [al, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str(var) << ")";
        for (size_t i = 0; i < al.size(); ++i) {
            if (al[i] == 0) continue;
            os << "*d" << i + 1;
            if (al[i] > 1) os << "^" << al[i];
        }
    }
    if (restrict_last) os << " (then i*)";
    return os.str();
}

DiffOp family_nc(int n, int order) {
    FamilyCoefficients fc = compute_coefficients(n, order);
    DiffOp tang = DiffOp::dalembertian(n - 1);
    DiffOp r = DiffOp::zero(n, true);
    for (size_t j = 0; j < fc.coeff.size(); ++j) {
        DiffOp term = tang.pow(static_cast<int>(j)).after_restriction(n);
        std::vector<int> normal(static_cast<size_t>(n), 0);
        normal.back() = fc.order - 2 * static_cast<int>(j);
        term = term * DiffOp::monomial(n, normal, RatFunc(1));
        r = r + term.scaled(fc.coeff[j]);
    }
    return r;
}

std::vector<std::vector<int>> all_monomials(int m, int maxdeg) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(m), 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == m) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[static_cast<size_t>(i)] = e;
            self(self, i + 1, left - e);
        }
        cur[static_cast<size_t>(i)] = 0;
    };
    rec(rec, 0, maxdeg);
    return out;
}

std::vector<RelationCheck> verify_special_values(int n, int half_order) {
    int N = half_order;
    std::vector<RelationCheck> out;
    DiffOp fam = family_nc(n, 2 * N);
    DiffOp at_first = fam.eval_lambda(rat(-n, 2) + N);
    DiffOp at_second = fam.eval_lambda(Rat(-(n - 1), 2) + N);
    DiffOp rhs_first = DiffOp::dalembertian(n).pow(N).with_restriction();
    DiffOp rhs_second = DiffOp::dalembertian(n - 1).pow(N).after_restriction(n);
    std::string tag = "n=" + std::to_string(n) + ",N=" + std::to_string(N);
    out.push_back({"D(-n/2+N)=i*Dal^N coeffs " + tag, at_first == rhs_first});
    out.push_back({"D(-(n-1)/2+N)=Dal'^N i* coeffs " + tag, at_second == rhs_second});
    // secondary operator-level oracle: same action on low-degree monomials
    bool ok1 = true, ok2 = true;
    for (const auto& al : all_monomials(n, 2 * N + 2)) {
        MVPoly f = MVPoly::monomial(n, al);
        if (!(at_first.apply(f) == rhs_first.apply(f))) ok1 = false;
        if (!(at_second.apply(f) == rhs_second.apply(f))) ok2 = false;
    }
    out.push_back({"D(-n/2+N)=i*Dal^N on monomials " + tag, ok1});
    out.push_back({"D(-(n-1)/2+N)=Dal'^N i* on monomials " + tag, ok2});
    return out;
}

}  // namespace adsfam
