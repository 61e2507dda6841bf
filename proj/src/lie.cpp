#include "adsfam/lie.hpp"

#include <stdexcept>

namespace adsfam {

RatMat operator+(const RatMat& x, const RatMat& y) {
    RatMat r(x.size_);
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
    return r;
}

RatMat operator-(const RatMat& x, const RatMat& y) {
    RatMat r(x.size_);
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
    return r;
}

RatMat RatMat::operator-() const {
    RatMat r(size_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
}

RatMat operator*(const RatMat& x, const RatMat& y) {
    RatMat r(x.size_);
    for (int i = 0; i < x.size_; ++i)
        for (int k = 0; k < x.size_; ++k) {
            const Rat& xv = x.at(i, k);
            if (xv == 0) continue;
            for (int j = 0; j < x.size_; ++j) {
                const Rat& yv = y.at(k, j);
                if (yv != 0) r.at(i, j) += xv * yv;
            }
        }
    return r;
}

RatMat RatMat::scaled(const Rat& s) const {
    RatMat r(size_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
    return r;
}

RatMat RatMat::transposed() const {
    RatMat r(size_);
    for (int i = 0; i < size_; ++i)
        for (int j = 0; j < size_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool RatMat::is_zero() const {
    for (const auto& v : a_)
        if (v != 0) return false;
    return true;
}

RatMat RatMat::identity(int size) {
    RatMat r(size);
    for (int i = 0; i < size; ++i) r.at(i, i) = 1;
    return r;
}

std::vector<Rat> RatMat::operator*(const std::vector<Rat>& v) const {
    std::vector<Rat> r(static_cast<size_t>(size_), Rat(0));
    for (int i = 0; i < size_; ++i)
        for (int j = 0; j < size_; ++j)
            if (at(i, j) != 0) r[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
    return r;
}

std::string GenName::str() const {
    switch (kind) {
        case GenKind::H: return "H";
        case GenKind::H2: return "H2";
        case GenKind::Yplus: return "Y+" + std::to_string(i);
        case GenKind::Yminus: return "Y-" + std::to_string(i);
        case GenKind::Zplus: return "Z+" + std::to_string(i);
        case GenKind::Zminus: return "Z-" + std::to_string(i);
        case GenKind::Q1plus: return "Q1+";
        case GenKind::Q1minus: return "Q1-";
        case GenKind::Q2plus: return "Q2+";
        case GenKind::Q2minus: return "Q2-";
        case GenKind::Mij: return "M" + std::to_string(i) + std::to_string(j);
    }
    return "?";
}

bool LieElt::is_zero() const {
    for (const auto& v : c)
        if (v != 0) return false;
    return true;
}

LieElt operator+(const LieElt& x, const LieElt& y) {
    LieElt r = x;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += y.c[i];
    return r;
}

LieElt operator-(const LieElt& x, const LieElt& y) {
    LieElt r = x;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= y.c[i];
    return r;
}

LieElt LieElt::operator-() const {
    LieElt r = *this;
    for (auto& v : r.c) v = -v;
    return r;
}

LieElt LieElt::scaled(const Rat& s) const {
    LieElt r = *this;
    for (auto& v : r.c) v *= s;
    return r;
}

bool operator==(const LieElt& x, const LieElt& y) { return x.ctx == y.ctx && x.c == y.c; }

RatMat LieElt::matrix() const {
    RatMat m(ctx->matrix_size());
    for (size_t k = 0; k < c.size(); ++k)
        if (c[k] != 0) m = m + ctx->basis()[k].matrix.scaled(c[k]);
    return m;
}

LieContext::LieContext(int n) : n_(n) {
    if (n < 4) throw std::invalid_argument("dimension too small: need n >= 4");
    int s = n + 1;
    form_ = RatMat(s);
    form_.at(0, 0) = -1;
    form_.at(1, 1) = -1;
    for (int i = 2; i < s; ++i) form_.at(i, i) = 1;

    auto add = [&](GenName g, int weight, Subspace sub) {
        index_[g.str()] = static_cast<int>(basis_.size());
        basis_.push_back({g, gen_matrix(g), weight, sub});
    };

    // n^-: I_1..I_{n-1}
    for (int j = 1; j <= n - 3; ++j) add({GenKind::Yminus, j}, -1, Subspace::NMinus);
    add({GenKind::Q1minus}, -1, Subspace::NMinus);
    add({GenKind::Q2minus}, -1, Subspace::NMinus);
    // m
    for (int j = 1; j <= n - 3; ++j) add({GenKind::Zplus, j}, 0, Subspace::M);
    for (int j = 1; j <= n - 3; ++j) add({GenKind::Zminus, j}, 0, Subspace::M);
    add({GenKind::H2}, 0, Subspace::M);
    for (int i = 1; i <= n - 3; ++i)
        for (int j = i + 1; j <= n - 3; ++j) add({GenKind::Mij, i, j}, 0, Subspace::M);
    // a
    add({GenKind::H}, 0, Subspace::A);
    // n^+
    for (int j = 1; j <= n - 3; ++j) add({GenKind::Yplus, j}, 1, Subspace::NPlus);
    add({GenKind::Q1plus}, 1, Subspace::NPlus);
    add({GenKind::Q2plus}, 1, Subspace::NPlus);

    if (dim() != n * (n + 1) / 2) throw std::logic_error("basis count mismatch");
    build_decomposer();
}

RatMat LieContext::gen_matrix(const GenName& g) const {
    int s = n_ + 1;
    RatMat m(s);
    auto col = [&](int j) { return 3 + j; };  // x_{j+2} coordinate, 1 <= j <= n-3
    switch (g.kind) {
        case GenKind::H:
            m.at(0, 3) = 1;
            m.at(3, 0) = 1;
            break;
        case GenKind::H2:
            m.at(1, 2) = 1;
            m.at(2, 1) = 1;
            break;
        case GenKind::Yplus:
            m.at(0, col(g.i)) = 1;
            m.at(3, col(g.i)) = 1;
            m.at(col(g.i), 0) = 1;
            m.at(col(g.i), 3) = -1;
            break;
        case GenKind::Yminus: return gen_matrix({GenKind::Yplus, g.i}).transposed();
        case GenKind::Zplus:
            m.at(1, col(g.i)) = 1;
            m.at(2, col(g.i)) = 1;
            m.at(col(g.i), 1) = 1;
            m.at(col(g.i), 2) = -1;
            break;
        case GenKind::Zminus: return gen_matrix({GenKind::Zplus, g.i}).transposed();
        case GenKind::Q1plus:
            // (W1 + W2)/2
            m.at(0, 1) = 1;
            m.at(1, 0) = -1;
            m.at(1, 3) = 1;
            m.at(3, 1) = 1;
            break;
        case GenKind::Q1minus: return gen_matrix({GenKind::Q1plus}).transposed();
        case GenKind::Q2plus:
            // (W2 - W1)/2
            m.at(0, 2) = 1;
            m.at(2, 0) = 1;
            m.at(2, 3) = -1;
            m.at(3, 2) = 1;
            break;
        case GenKind::Q2minus: return gen_matrix({GenKind::Q2plus}).transposed();
        case GenKind::Mij:
            m.at(col(g.i), col(g.j)) = 1;
            m.at(col(g.j), col(g.i)) = -1;
            break;
    }
    return m;
}

void LieContext::build_decomposer() {
    int s = matrix_size();
    size_t cols = static_cast<size_t>(s) * s;
    int d = dim();
    rref_.assign(static_cast<size_t>(d), std::vector<Rat>(cols, Rat(0)));
    rref_to_basis_.assign(static_cast<size_t>(d), std::vector<Rat>(static_cast<size_t>(d), Rat(0)));
    for (int k = 0; k < d; ++k) {
        for (int r = 0; r < s; ++r)
            for (int c = 0; c < s; ++c)
                rref_[k][static_cast<size_t>(r) * s + c] = basis_[k].matrix.at(r, c);
        rref_to_basis_[k][static_cast<size_t>(k)] = 1;
    }
    pivot_col_.assign(static_cast<size_t>(d), -1);
    int row = 0;
    for (size_t c = 0; c < cols && row < d; ++c) {
        int piv = -1;
        for (int r = row; r < d; ++r)
            if (rref_[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rref_[piv], rref_[row]);
        std::swap(rref_to_basis_[piv], rref_to_basis_[row]);
        Rat inv = Rat(1) / rref_[row][c];
        for (auto& v : rref_[row]) v *= inv;
        for (auto& v : rref_to_basis_[row]) v *= inv;
        for (int r = 0; r < d; ++r) {
            if (r == row || rref_[r][c] == 0) continue;
            Rat f = rref_[r][c];
            for (size_t cc = 0; cc < cols; ++cc) rref_[r][cc] -= f * rref_[row][cc];
            for (int cc = 0; cc < d; ++cc)
                rref_to_basis_[r][static_cast<size_t>(cc)] -=
                    f * rref_to_basis_[row][static_cast<size_t>(cc)];
        }
        pivot_col_[static_cast<size_t>(row)] = static_cast<int>(c);
        ++row;
    }
    if (row != d) throw std::logic_error("basis matrices are linearly dependent");
}

int LieContext::index_of(const GenName& g) const {
    auto it = index_.find(g.str());
    return it == index_.end() ? -1 : it->second;
}

LieElt LieContext::zero() const {
    return LieElt{this, std::vector<Rat>(static_cast<size_t>(dim()), Rat(0))};
}

LieElt LieContext::element(const GenName& g) const {
    LieElt e = zero();
    if (g.kind == GenKind::Mij) {
        if (g.i == g.j) return e;  // M_ii = 0
        if (g.i > g.j) {
            e.c[static_cast<size_t>(index_of({GenKind::Mij, g.j, g.i}))] = -1;
            return e;
        }
    }
    int idx = index_of(g);
    if (idx < 0) throw std::invalid_argument("unknown generator " + g.str());
    e.c[static_cast<size_t>(idx)] = 1;
    return e;
}

LieElt LieContext::w_element(int k) const {
    switch (k) {
        case 1: return element({GenKind::Q1plus}) - element({GenKind::Q2plus});
        case 2: return element({GenKind::Q1plus}) + element({GenKind::Q2plus});
        case 3: return (element({GenKind::Q1minus}) + element({GenKind::Q2minus})).scaled(-1);
        case 4: return element({GenKind::Q2minus}) - element({GenKind::Q1minus});
    }
    throw std::invalid_argument("w_element index must be 1..4");
}

LieElt LieContext::decompose(const RatMat& m) const {
    int s = matrix_size();
    size_t cols = static_cast<size_t>(s) * s;
    std::vector<Rat> y(cols);
    for (int r = 0; r < s; ++r)
        for (int c = 0; c < s; ++c) y[static_cast<size_t>(r) * s + c] = m.at(r, c);
    int d = dim();
    std::vector<Rat> cr(static_cast<size_t>(d), Rat(0));
    for (int k = 0; k < d; ++k) {
        size_t p = static_cast<size_t>(pivot_col_[static_cast<size_t>(k)]);
        Rat f = y[p];
        if (f == 0) continue;
        cr[static_cast<size_t>(k)] = f;
        for (size_t c = 0; c < cols; ++c) y[c] -= f * rref_[static_cast<size_t>(k)][c];
    }
    for (const auto& v : y)
        if (v != 0) throw std::domain_error("matrix is not in the span of the basis");
    LieElt e = zero();
    for (int k = 0; k < d; ++k)
        if (cr[static_cast<size_t>(k)] != 0)
            for (int j = 0; j < d; ++j)
                e.c[static_cast<size_t>(j)] +=
                    cr[static_cast<size_t>(k)] * rref_to_basis_[static_cast<size_t>(k)][static_cast<size_t>(j)];
    return e;
}

LieElt LieContext::bracket(const LieElt& x, const LieElt& y) const {
    if (x.ctx != this || y.ctx != this)
        throw std::invalid_argument("bracket of elements from different contexts");
    LieElt r = zero();
    for (size_t i = 0; i < x.c.size(); ++i) {
        if (x.c[i] == 0) continue;
        for (size_t j = 0; j < y.c.size(); ++j) {
            if (y.c[j] == 0) continue;
            for (const auto& [k, s] : structure(static_cast<int>(i), static_cast<int>(j)))
                r.c[static_cast<size_t>(k)] += x.c[i] * y.c[j] * s;
        }
    }
    return r;
}

LieElt LieContext::bracket(const GenName& x, const GenName& y) const {
    return bracket(element(x), element(y));
}

const std::vector<std::pair<int, Rat>>& LieContext::structure(int i, int j) const {
    auto key = std::make_pair(i, j);
    auto it = structure_.find(key);
    if (it != structure_.end()) return it->second;
    const RatMat& a = basis_[static_cast<size_t>(i)].matrix;
    const RatMat& b = basis_[static_cast<size_t>(j)].matrix;
    LieElt e = decompose(a * b - b * a);
    std::vector<std::pair<int, Rat>> sparse;
    for (size_t k = 0; k < e.c.size(); ++k)
        if (e.c[k] != 0) sparse.emplace_back(static_cast<int>(k), e.c[k]);
    return structure_.emplace(key, std::move(sparse)).first->second;
}

bool LieContext::verify_jacobi() const {
    int d = dim();
    for (int i = 0; i < d; ++i) {
        LieElt x = zero();
        x.c[static_cast<size_t>(i)] = 1;
        for (int j = 0; j < d; ++j) {
            LieElt y = zero();
            y.c[static_cast<size_t>(j)] = 1;
            LieElt xy = bracket(x, y);
            for (int k = 0; k < d; ++k) {
                LieElt z = zero();
                z.c[static_cast<size_t>(k)] = 1;
                LieElt sum = bracket(xy, z) + bracket(bracket(y, z), x) +
                             bracket(bracket(z, x), y);
                if (!sum.is_zero()) return false;
            }
        }
    }
    return true;
}

bool LieContext::verify_form_preservation() const {
    for (const auto& b : basis_)
        if (!(b.matrix.transposed() * form_ + form_ * b.matrix).is_zero()) return false;
    return true;
}

GroupElement LieContext::w1() const {
    RatMat m = RatMat::identity(matrix_size());
    m.at(1, 1) = -1;
    return {"w1", m};
}

GroupElement LieContext::w2() const {
    RatMat m = RatMat::identity(matrix_size());
    m.at(2, 2) = -1;
    return {"w2", m};
}

GroupElement LieContext::J() const {
    return {"J", RatMat::identity(matrix_size()).scaled(Rat(-1))};
}

LieElt LieContext::ad_group(const GroupElement& w, const LieElt& x) const {
    RatMat winv = form_ * w.matrix.transposed() * form_;
    return decompose(w.matrix * x.matrix() * winv);
}

LieElt LieContext::include_into(const LieContext& target, const LieElt& x) const {
    if (target.n() != n_ + 1) throw std::invalid_argument("include targets g_{n+1} only");
    RatMat big(target.matrix_size());
    RatMat small = x.matrix();
    for (int r = 0; r < matrix_size(); ++r)
        for (int c = 0; c < matrix_size(); ++c) big.at(r, c) = small.at(r, c);
    return target.decompose(big);
}

GroupElement LieContext::include_group(const LieContext& target, const GroupElement& g) const {
    if (target.n() != n_ + 1) throw std::invalid_argument("include targets g_{n+1} only");
    RatMat big = RatMat::identity(target.matrix_size());
    for (int r = 0; r < matrix_size(); ++r)
        for (int c = 0; c < matrix_size(); ++c) big.at(r, c) = g.matrix.at(r, c);
    return {"i(" + g.name + ")", big};
}

std::vector<RelationCheck> LieContext::verify_bracket_table() const {
    std::vector<RelationCheck> out;
    auto check = [&](const std::string& label, const LieElt& got, const LieElt& want) {
        out.push_back({label, got == want});
    };
    auto Y = [&](int sign, int j) {
        return element({sign > 0 ? GenKind::Yplus : GenKind::Yminus, j});
    };
    auto Z = [&](int sign, int j) {
        return element({sign > 0 ? GenKind::Zplus : GenKind::Zminus, j});
    };
    auto Q = [&](int which, int sign) {
        if (which == 1) return element({sign > 0 ? GenKind::Q1plus : GenKind::Q1minus});
        return element({sign > 0 ? GenKind::Q2plus : GenKind::Q2minus});
    };
    LieElt H = element({GenKind::H});
    LieElt H2 = element({GenKind::H2});
    auto M = [&](int i, int j) { return element({GenKind::Mij, i, j}); };
    int r = n_ - 3;

    for (int j = 1; j <= r; ++j) {
        std::string sj = std::to_string(j);
        check("[Q1+,Y+" + sj + "]=0", bracket(Q(1, +1), Y(+1, j)), zero());
        check("[Q1-,Y+" + sj + "]=Z+" + sj + "+Z-" + sj, bracket(Q(1, -1), Y(+1, j)),
              Z(+1, j) + Z(-1, j));
        check("[Q1+,Y-" + sj + "]=-Z+" + sj + "-Z-" + sj, bracket(Q(1, +1), Y(-1, j)),
              -(Z(+1, j) + Z(-1, j)));
        check("[Q1-,Y-" + sj + "]=0", bracket(Q(1, -1), Y(-1, j)), zero());
        check("[Q1+,Z+" + sj + "]=Y+" + sj, bracket(Q(1, +1), Z(+1, j)), Y(+1, j));
        check("[Q1-,Z+" + sj + "]=-Y-" + sj, bracket(Q(1, -1), Z(+1, j)), -Y(-1, j));
        check("[Q1+,Z-" + sj + "]=Y+" + sj, bracket(Q(1, +1), Z(-1, j)), Y(+1, j));
        check("[Q1-,Z-" + sj + "]=-Y-" + sj, bracket(Q(1, -1), Z(-1, j)), -Y(-1, j));
        check("[Q2+,Y+" + sj + "]=0", bracket(Q(2, +1), Y(+1, j)), zero());
        check("[Q2-,Y+" + sj + "]=Z+" + sj + "-Z-" + sj, bracket(Q(2, -1), Y(+1, j)),
              Z(+1, j) - Z(-1, j));
        check("[Q2+,Y-" + sj + "]=Z+" + sj + "-Z-" + sj, bracket(Q(2, +1), Y(-1, j)),
              Z(+1, j) - Z(-1, j));
        check("[Q2-,Y-" + sj + "]=0", bracket(Q(2, -1), Y(-1, j)), zero());
        check("[Q2+,Z+" + sj + "]=Y+" + sj, bracket(Q(2, +1), Z(+1, j)), Y(+1, j));
        check("[Q2-,Z+" + sj + "]=Y-" + sj, bracket(Q(2, -1), Z(+1, j)), Y(-1, j));
        check("[Q2+,Z-" + sj + "]=-Y+" + sj, bracket(Q(2, +1), Z(-1, j)), -Y(+1, j));
        check("[Q2-,Z-" + sj + "]=-Y-" + sj, bracket(Q(2, -1), Z(-1, j)), -Y(-1, j));
        check("[H,Y+" + sj + "]=Y+" + sj, bracket(H, Y(+1, j)), Y(+1, j));
        check("[H,Y-" + sj + "]=-Y-" + sj, bracket(H, Y(-1, j)), -Y(-1, j));
        check("[H2,Z+" + sj + "]=Z+" + sj, bracket(H2, Z(+1, j)), Z(+1, j));
        check("[H2,Z-" + sj + "]=-Z-" + sj, bracket(H2, Z(-1, j)), -Z(-1, j));
    }
    check("[Q1+,Q2+]=0", bracket(Q(1, +1), Q(2, +1)), zero());
    check("[Q1-,Q2-]=0", bracket(Q(1, -1), Q(2, -1)), zero());
    check("[Q1+,Q2-]=-2H2", bracket(Q(1, +1), Q(2, -1)), H2.scaled(-2));
    check("[Q1-,Q2+]=2H2", bracket(Q(1, -1), Q(2, +1)), H2.scaled(2));
    check("[Q1+,Q1-]=2H", bracket(Q(1, +1), Q(1, -1)), H.scaled(2));
    check("[Q2+,Q2-]=2H", bracket(Q(2, +1), Q(2, -1)), H.scaled(2));
    check("[H,Q1+]=Q1+", bracket(H, Q(1, +1)), Q(1, +1));
    check("[H,Q1-]=-Q1-", bracket(H, Q(1, -1)), -Q(1, -1));
    check("[H,Q2+]=Q2+", bracket(H, Q(2, +1)), Q(2, +1));
    check("[H,Q2-]=-Q2-", bracket(H, Q(2, -1)), -Q(2, -1));
    check("[H2,Q1+]=-Q2+", bracket(H2, Q(1, +1)), -Q(2, +1));
    check("[H2,Q1-]=Q2-", bracket(H2, Q(1, -1)), Q(2, -1));
    check("[H2,Q2+]=-Q1+", bracket(H2, Q(2, +1)), -Q(1, +1));
    check("[H2,Q2-]=Q1-", bracket(H2, Q(2, -1)), Q(1, -1));

    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j) {
            std::string si = std::to_string(i), sj = std::to_string(j);
            Rat d = (i == j) ? Rat(1) : Rat(0);
            check("[Y+" + si + ",Y-" + sj + "]=2d*H+2M" + si + sj, bracket(Y(+1, i), Y(-1, j)),
                  H.scaled(2 * d) + M(i, j).scaled(2));
            check("[Z+" + si + ",Z-" + sj + "]=2d*H2+2M" + si + sj, bracket(Z(+1, i), Z(-1, j)),
                  H2.scaled(2 * d) + M(i, j).scaled(2));
            check("[Y+" + si + ",Z+" + sj + "]=d*(Q1+-Q2+)", bracket(Y(+1, i), Z(+1, j)),
                  (Q(1, +1) - Q(2, +1)).scaled(d));
            check("[Y+" + si + ",Z-" + sj + "]=d*(Q1++Q2+)", bracket(Y(+1, i), Z(-1, j)),
                  (Q(1, +1) + Q(2, +1)).scaled(d));
            check("[Y-" + si + ",Z+" + sj + "]=d*(-Q1--Q2-)", bracket(Y(-1, i), Z(+1, j)),
                  (Q(1, -1) + Q(2, -1)).scaled(-d));
            check("[Y-" + si + ",Z-" + sj + "]=d*(-Q1-+Q2-)", bracket(Y(-1, i), Z(-1, j)),
                  (Q(2, -1) - Q(1, -1)).scaled(d));
        }

    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j) {
            if (i == j) continue;
            std::string sij = std::to_string(i) + std::to_string(j);
            check("[H,M" + sij + "]=0", bracket(H, M(i, j)), zero());
            check("[H2,M" + sij + "]=0", bracket(H2, M(i, j)), zero());
            for (int q = 1; q <= 2; ++q)
                for (int sgn : {+1, -1})
                    check("[Q" + std::to_string(q) + (sgn > 0 ? "+" : "-") + ",M" + sij + "]=0",
                          bracket(Q(q, sgn), M(i, j)), zero());
            for (int rr = 1; rr <= r; ++rr) {
                std::string srr = std::to_string(rr);
                Rat djr = (j == rr) ? Rat(1) : Rat(0);
                Rat dir = (i == rr) ? Rat(1) : Rat(0);
                for (int sgn : {+1, -1}) {
                    std::string sg = sgn > 0 ? "+" : "-";
                    check("[M" + sij + ",Y" + sg + srr + "]", bracket(M(i, j), Y(sgn, rr)),
                          Y(sgn, i).scaled(djr) - Y(sgn, j).scaled(dir));
                    check("[M" + sij + ",Z" + sg + srr + "]", bracket(M(i, j), Z(sgn, rr)),
                          Z(sgn, i).scaled(djr) - Z(sgn, j).scaled(dir));
                }
            }
        }
    return out;
}

}  // namespace adsfam
