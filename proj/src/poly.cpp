#include "adsfam/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace adsfam {

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return Poly(std::move(c));
}

Poly Poly::operator-() const {
    std::vector<Rat> c = coeffs_;
    for (auto& x : c) x = -x;
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(c));
}

Poly Poly::scaled(const Rat& s) const {
    if (s == 0) return Poly();
    std::vector<Rat> c = coeffs_;
    for (auto& x : c) x *= s;
    return Poly(std::move(c));
}

Poly Poly::monic() const {
    if (is_zero()) return Poly();
    return scaled(Rat(1) / leading());
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    std::vector<Rat> rem = a.coeffs_;
    std::vector<Rat> quot;
    int db = b.degree();
    if (static_cast<int>(rem.size()) - 1 >= db)
        quot.assign(rem.size() - static_cast<size_t>(db), Rat(0));
    while (static_cast<int>(rem.size()) - 1 >= db && !rem.empty()) {
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        int dr = static_cast<int>(rem.size()) - 1;
        if (dr < db || rem.empty()) break;
        Rat f = rem.back() / b.leading();
        quot[static_cast<size_t>(dr - db)] = f;
        for (int i = 0; i <= db; ++i) rem[static_cast<size_t>(dr - db + i)] -= f * b.coeff(i);
    }
    q = Poly(std::move(quot));
    r = Poly(std::move(rem));
}

Poly operator/(const Poly& a, const Poly& b) {
    Poly q, r;
    Poly::divmod(a, b, q, r);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly q, r;
        divmod(x, y, q, r);
        x = y;
        y = r;
    }
    if (x.is_zero()) return Poly();
    return x.monic();
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::shifted(const Rat& c) const {
    // Horner in (lambda + c).
    Poly acc;
    Poly lin(std::vector<Rat>{c, Rat(1)});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lin + Poly(*it);
    return acc;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        const Rat& c = coeffs_[k];
        if (c == 0) continue;
        Rat a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (k == 0 || a != 1) {
            os << a.get_str();
            if (k > 0) os << "*";
        }
        if (k > 0) {
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

}  // namespace adsfam
