#include "liekit/subspace.hpp"

#include <stdexcept>

namespace liekit {

Subspace Subspace::span(int ambient, const std::vector<Vec>& gens) {
    for (const auto& g : gens)
        if (static_cast<int>(g.size()) != ambient)
            throw std::invalid_argument("generator length mismatch");
    Mat M(static_cast<int>(gens.size()), ambient);
    for (int i = 0; i < static_cast<int>(gens.size()); ++i)
        M.set_row(i, gens[i]);
    rref_in_place(M);
    int d = 0;
    for (int i = 0; i < M.rows(); ++i) {
        bool zero = true;
        for (int j = 0; j < ambient; ++j)
            if (M.at(i, j) != 0) { zero = false; break; }
        if (zero) break;  // rref puts zero rows last
        ++d;
    }
    Subspace S(ambient);
    S.rows_ = Mat(d, ambient);
    for (int i = 0; i < d; ++i)
        S.rows_.set_row(i, M.row(i));
    return S;
}

Subspace Subspace::full(int ambient) {
    Subspace S(ambient);
    S.rows_ = Mat::identity(ambient);
    return S;
}

Vec Subspace::reduce(Vec v) const {
    if (static_cast<int>(v.size()) != ambient_)
        throw std::invalid_argument("vector length mismatch");
    for (int i = 0; i < rows_.rows(); ++i) {
        int p = -1;
        for (int j = 0; j < ambient_; ++j)
            if (rows_.at(i, j) != 0) { p = j; break; }
        if (p < 0 || v[p] == 0) continue;
        Rat f = v[p];  // leading entry is 1
        for (int j = p; j < ambient_; ++j)
            v[j] -= f * rows_.at(i, j);
    }
    return v;
}

bool Subspace::contains(const Vec& v) const {
    Vec r = reduce(v);
    for (const auto& x : r)
        if (x != 0) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    for (int i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_row(i))) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (ambient_ != other.ambient_)
        throw std::invalid_argument("ambient mismatch");
    std::vector<Vec> gens;
    for (int i = 0; i < dim(); ++i) gens.push_back(basis_row(i));
    for (int i = 0; i < other.dim(); ++i) gens.push_back(other.basis_row(i));
    return span(ambient_, gens);
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (ambient_ != other.ambient_)
        throw std::invalid_argument("ambient mismatch");
    // u*A = v*B  <=>  (u, v) in left nullspace of [A; -B]
    int ka = dim(), kb = other.dim();
    if (ka == 0 || kb == 0) return Subspace(ambient_);
    Mat stacked(ka + kb, ambient_);
    for (int i = 0; i < ka; ++i) stacked.set_row(i, basis_row(i));
    for (int i = 0; i < kb; ++i) {
        Vec r = other.basis_row(i);
        for (auto& x : r) x = -x;
        stacked.set_row(ka + i, r);
    }
    Subspace combos = left_nullspace(stacked);
    std::vector<Vec> gens;
    for (int i = 0; i < combos.dim(); ++i) {
        Vec y = combos.basis_row(i);
        Vec v(ambient_);
        for (int t = 0; t < ka; ++t) {
            if (y[t] == 0) continue;
            for (int j = 0; j < ambient_; ++j)
                v[j] += y[t] * rows_.at(t, j);
        }
        gens.push_back(std::move(v));
    }
    return span(ambient_, gens);
}

Subspace left_nullspace(const Mat& M) {
    int r = M.rows();
    if (r == 0) return Subspace(0);
    Mat T = M.transposed();
    auto piv = rref_in_place(T);
    std::vector<bool> is_piv(r, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<Vec> basis;
    for (int f = 0; f < r; ++f) {
        if (is_piv[f]) continue;
        Vec v(r);
        v[f] = 1;
        for (int i = 0; i < static_cast<int>(piv.size()); ++i)
            v[piv[i]] = -T.at(i, f);
        basis.push_back(std::move(v));
    }
    return Subspace::span(r, basis);
}

} // namespace liekit
