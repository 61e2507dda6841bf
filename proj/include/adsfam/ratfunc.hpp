#pragma once

#include <string>

#include "adsfam/poly.hpp"

namespace adsfam {

// Rational function in the spectral parameter, kept in canonical form:
// gcd(num, den) = 1 and den monic. Equality is structural.
class RatFunc {
  public:
    RatFunc() : num_(), den_(Poly::constant(1)) {}
    RatFunc(const Rat& c) : num_(Poly(c)), den_(Poly::constant(1)) {}
    RatFunc(long c) : num_(Poly::constant(c)), den_(Poly::constant(1)) {}
    explicit RatFunc(const Poly& p) : num_(p), den_(Poly::constant(1)) {}
    RatFunc(const Poly& num, const Poly& den) { normalize(num, den); }

    static RatFunc lambda() { return RatFunc(Poly::lambda()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    // Exact specialization; throws on a pole.
    Rat eval_at(const Rat& x) const;

    // f(lambda + c).
    RatFunc shifted(const Rat& c) const { return RatFunc(num_.shifted(c), den_.shifted(c)); }

    // "(<poly>)/(<poly>)", or just the numerator when den = 1.
    std::string str(const std::string& var = "L") const;

  private:
    void normalize(const Poly& num, const Poly& den);
    Poly num_, den_;
};

}  // namespace adsfam
