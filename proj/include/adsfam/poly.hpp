#pragma once

#include <string>
#include <vector>

#include "adsfam/rational.hpp"

namespace adsfam {

// Univariate polynomial in the spectral parameter, dense over Rat.
// Invariant: coeffs is empty (the zero polynomial) or has nonzero back().
class Poly {
  public:
    Poly() = default;
    explicit Poly(const Rat& c) {
        if (c != 0) coeffs_.push_back(c);
    }
    explicit Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    // The polynomial "lambda".
    static Poly lambda() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }
    static Poly constant(long c) { return Poly(Rat(c)); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : Rat(0);
    }
    Rat leading() const { return is_zero() ? Rat(0) : coeffs_.back(); }

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly scaled(const Rat& s) const;
    Poly monic() const;

    // Euclidean division; requires b != 0.
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);

    // Exact division; throws if the remainder is nonzero.
    friend Poly operator/(const Poly& a, const Poly& b);

    // Monic gcd via the Euclidean algorithm over Q.
    static Poly gcd(const Poly& a, const Poly& b);

    Rat eval(const Rat& x) const;

    // p(lambda + c), for specializations like S_N(lambda + n - 1 - N).
    Poly shifted(const Rat& c) const;

    // Text form "c0 + c1*L + c2*L^2"; var is "L" or "\\lambda".
    std::string str(const std::string& var = "L") const;

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rat> coeffs_;
};

}  // namespace adsfam
