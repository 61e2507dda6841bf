#include "adsfam/ratfunc.hpp"

#include <stdexcept>

namespace adsfam {

void RatFunc::normalize(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::domain_error("division by zero polynomial");
    if (num.is_zero()) {
        num_ = Poly();
        den_ = Poly::constant(1);
        return;
    }
    Poly g = Poly::gcd(num, den);
    Poly n = num / g;
    Poly d = den / g;
    Rat lead = d.leading();
    num_ = n.scaled(Rat(1) / lead);
    den_ = d.scaled(Rat(1) / lead);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rat RatFunc::eval_at(const Rat& x) const {
    Rat d = den_.eval(x);
    if (d == 0) throw std::domain_error("pole at lambda = " + x.get_str());
    return num_.eval(x) / d;
}

std::string RatFunc::str(const std::string& var) const {
    if (is_polynomial()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace adsfam
