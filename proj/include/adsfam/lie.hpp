#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adsfam/rational.hpp"

namespace adsfam {

// Dense square matrix over Rat, sized (n+1)x(n+1) for o(2,n-1).
class RatMat {
  public:
    RatMat() = default;
    explicit RatMat(int size) : size_(size), a_(static_cast<size_t>(size) * size, Rat(0)) {}

    int size() const { return size_; }
    Rat& at(int r, int c) { return a_[static_cast<size_t>(r) * size_ + c]; }
    const Rat& at(int r, int c) const { return a_[static_cast<size_t>(r) * size_ + c]; }

    friend RatMat operator+(const RatMat& x, const RatMat& y);
    friend RatMat operator-(const RatMat& x, const RatMat& y);
    friend RatMat operator*(const RatMat& x, const RatMat& y);
    RatMat operator-() const;
    RatMat scaled(const Rat& s) const;
    RatMat transposed() const;
    bool is_zero() const;
    friend bool operator==(const RatMat& x, const RatMat& y) {
        return x.size_ == y.size_ && x.a_ == y.a_;
    }

    static RatMat identity(int size);
    std::vector<Rat> operator*(const std::vector<Rat>& v) const;

  private:
    int size_ = 0;
    std::vector<Rat> a_;
};

enum class GenKind { H, H2, Yplus, Yminus, Zplus, Zminus, Q1plus, Q1minus, Q2plus, Q2minus, Mij };

struct GenName {
    GenKind kind;
    int i = 0;  // Y/Z index, or first M index
    int j = 0;  // second M index

    std::string str() const;
    friend bool operator==(const GenName&, const GenName&) = default;
};

enum class Subspace { NMinus, M, A, NPlus };

struct LieBasisElement {
    GenName name;
    RatMat matrix;
    int ad_H_weight;
    Subspace subspace;
};

class LieContext;

// Element of o(2,n-1), stored as coefficients over the context basis.
struct LieElt {
    const LieContext* ctx = nullptr;
    std::vector<Rat> c;

    bool is_zero() const;
    friend LieElt operator+(const LieElt& x, const LieElt& y);
    friend LieElt operator-(const LieElt& x, const LieElt& y);
    LieElt operator-() const;
    LieElt scaled(const Rat& s) const;
    friend bool operator==(const LieElt& x, const LieElt& y);
    RatMat matrix() const;
};

struct GroupElement {
    std::string name;
    RatMat matrix;
};

struct RelationCheck {
    std::string relation;
    bool pass;
};

// Exact matrix realization of g_n = o(2,n-1), n >= 4, with matrices of size
// (n+1)x(n+1) in coordinates (t1, t2, x1, x2, x3, ..., x_{n-1}).
// Basis order: n^- (Y1-..Y_{n-3}-, Q1-, Q2-), then m (Z+_j, Z-_j, H2, M_ij
// with i<j), then H, then n^+ (Y1+..Y_{n-3}+, Q1+, Q2+). The n^- block is
// exactly the ordered basis I_1..I_{n-1}.
class LieContext {
  public:
    explicit LieContext(int n);

    int n() const { return n_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    int matrix_size() const { return n_ + 1; }
    const std::vector<LieBasisElement>& basis() const { return basis_; }
    const RatMat& form_matrix() const { return form_; }

    int index_of(const GenName& g) const;  // -1 for M_ii and M_ji with j>i
    LieElt element(const GenName& g) const;
    LieElt zero() const;

    // Derived elements W1 = Q1+ - Q2+, W2 = Q1+ + Q2+, W3 = -(Q1- + Q2-),
    // W4 = Q2- - Q1-.
    LieElt w_element(int k) const;

    LieElt bracket(const LieElt& x, const LieElt& y) const;
    LieElt bracket(const GenName& x, const GenName& y) const;

    // Expresses an arbitrary matrix over the basis; throws if not in the span.
    LieElt decompose(const RatMat& m) const;

    // Structure constants as a sparse vector over the basis.
    const std::vector<std::pair<int, Rat>>& structure(int i, int j) const;

    GroupElement w1() const;
    GroupElement w2() const;
    GroupElement J() const;

    // wXw^{-1}; uses w^{-1} = G w^t G for form-preserving w.
    LieElt ad_group(const GroupElement& w, const LieElt& x) const;

    // Every appendix relation, instantiated over all valid indices.
    std::vector<RelationCheck> verify_bracket_table() const;

    // [[x,y],z] + [[y,z],x] + [[z,x],y] = 0 over all basis triples.
    bool verify_jacobi() const;
    // X^t G + G X = 0 for every basis matrix.
    bool verify_form_preservation() const;

    // Block top-left embedding g_n -> g_{n+1}; target must have n+1.
    LieElt include_into(const LieContext& target, const LieElt& x) const;
    GroupElement include_group(const LieContext& target, const GroupElement& g) const;

  private:
    RatMat gen_matrix(const GenName& g) const;
    void build_decomposer();

    int n_;
    RatMat form_;
    std::vector<LieBasisElement> basis_;
    std::map<std::string, int> index_;
    // RREF of the flattened basis matrix together with the transform taking
    // RREF-row coefficients back to basis coefficients.
    std::vector<std::vector<Rat>> rref_;
    std::vector<int> pivot_col_;
    std::vector<std::vector<Rat>> rref_to_basis_;
    mutable std::map<std::pair<int, int>, std::vector<std::pair<int, Rat>>> structure_;
};

}  // namespace adsfam
