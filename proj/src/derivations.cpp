#include "liekit/derivations.hpp"

#include <algorithm>
#include <stdexcept>

namespace liekit {

std::optional<LeibnizFailure> leibniz_first_violation(const LieAlgebra& g, const Mat& D) {
    int n = g.dim();
    if (D.rows() != n || D.cols() != n)
        throw std::invalid_argument("dimension mismatch");
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            Vec lhs = mul(g.bracket_basis(a, b), D);
            Vec r1 = bracket(g, D.row(a), g.e(b + 1));
            Vec r2 = bracket(g, g.e(a + 1), D.row(b));
            bool bad = false;
            for (int i = 0; i < n; ++i) {
                lhs[i] -= r1[i] + r2[i];
                if (lhs[i] != 0) bad = true;
            }
            if (bad) return LeibnizFailure{a + 1, b + 1, lhs};
        }
    return std::nullopt;
}

bool is_derivation(const LieAlgebra& g, const Mat& D) {
    return !leibniz_first_violation(g, D).has_value();
}

DerivationSpace derivation_space(const LieAlgebra& g) {
    int n = g.dim();
    // unknown (i,k) -> column i*n+k of D, flattened row-major; one equation per
    // (a<b, c):  sum_k C^k_ab d_kc - sum_k d_ak C^c_kb - sum_k d_bk C^c_ak = 0
    std::vector<Vec> eqs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            Vec cab = g.bracket_basis(a, b);
            for (int c = 0; c < n; ++c) {
                Vec col(static_cast<size_t>(n) * n);
                for (int k = 0; k < n; ++k) {
                    if (cab[k] != 0) col[static_cast<size_t>(k) * n + c] += cab[k];
                    Rat ckb = g.bracket_basis(k, b)[c];
                    if (ckb != 0) col[static_cast<size_t>(a) * n + k] -= ckb;
                    Rat cak = g.bracket_basis(a, k)[c];
                    if (cak != 0) col[static_cast<size_t>(b) * n + k] -= cak;
                }
                bool nz = false;
                for (const auto& x : col)
                    if (x != 0) { nz = true; break; }
                if (nz) eqs.push_back(std::move(col));
            }
        }
    Mat E(n * n, static_cast<int>(eqs.size()));
    for (int u = 0; u < n * n; ++u)
        for (int e = 0; e < static_cast<int>(eqs.size()); ++e)
            E.at(u, e) = eqs[e][u];
    Subspace sol = left_nullspace(E);

    DerivationSpace ds;
    ds.algebra_dim = n;
    for (int i = 0; i < sol.dim(); ++i)
        ds.basis.push_back(Mat::unflatten(sol.basis_row(i), n));
    std::vector<Vec> ads;
    for (int a = 0; a < n; ++a)
        ads.push_back(ad(g, g.e(a + 1)).flatten());
    ds.inner = Subspace::span(n * n, ads);
    ds.inner_in_der_dim = ds.inner.intersect(sol).dim();
    ds.outer_dim = sol.dim() - ds.inner.dim();
    return ds;
}

std::vector<Mat> outer_derivation_representatives(const LieAlgebra& g,
                                                  const DerivationSpace& ds) {
    int n = g.dim();
    std::vector<Vec> flat;
    for (const auto& D : ds.basis) flat.push_back(D.flatten());
    Subspace der = Subspace::span(n * n, flat);
    Subspace cap = ds.inner.intersect(der);
    // extend a basis of cap to one of der; the added vectors represent Der mod inner
    std::vector<Mat> reps;
    Subspace cur = cap;
    for (const auto& D : ds.basis) {
        Vec f = D.flatten();
        if (!cur.contains(f)) {
            reps.push_back(D);
            std::vector<Vec> gens;
            for (int i = 0; i < cur.dim(); ++i) gens.push_back(cur.basis_row(i));
            gens.push_back(f);
            cur = Subspace::span(n * n, gens);
        }
    }
    return reps;
}

namespace {

struct ShapeChecker {
    int m, n;
    const Mat& D;
    std::optional<ShapeViolation> bad;

    ShapeChecker(int m_, const Mat& D_) : m(m_), n(2 * m_ + 1), D(D_) {}

    // 1-based accessor
    const Rat& d(int i, int j) { return D.at(i - 1, j - 1); }

    void expect(const std::string& name, int i, int j, const Rat& want) {
        if (bad) return;
        if (d(i, j) != want)
            bad = ShapeViolation{name, i, j, want, d(i, j)};
    }
};

} // namespace

std::variant<QDerivationShape, ShapeViolation> check_lemma1_shape(int m, const Mat& D) {
    int n = 2 * m + 1;
    if (m < 2) throw std::invalid_argument("m must be >= 2");
    if (D.rows() != n || D.cols() != n)
        throw std::invalid_argument("dimension mismatch with Q_{2m+1}");

    ShapeChecker ck(m, D);
    Rat alpha = ck.d(1, 1), beta = ck.d(2, 2);

    for (int i = 1; i <= n && !ck.bad; ++i)
        for (int j = 1; j < i; ++j)
            ck.expect("upper_triangular", i, j, Rat(0));
    ck.expect("d12_law", 1, 2, beta - alpha);
    for (int k = 3; k <= 2 * m; ++k)
        ck.expect("diag_law", k, k, Rat(k - 2) * alpha + beta);
    ck.expect("diag_law_last", n, n, Rat(2 * m - 2) * alpha + 2 * beta);
    for (int k = 1; k <= 2 * m; ++k)
        ck.expect("last_row_zero", n, k, Rat(0));
    for (int j = 3; j <= 2 * m; ++j)
        for (int k = j + 1; k <= 2 * m; ++k)
            ck.expect("row_shift", j, k, ck.d(2, k - j + 2));
    for (int t = 3; t <= m + 1; ++t)
        ck.expect("d2_low_vanish", 2, t, Rat(0));
    for (int s = m + 2; s <= 2 * m - 1; ++s)
        if (s % 2 == 1) ck.expect("d2_odd_vanish", 2, s, Rat(0));
    for (int j = 2; j <= m; ++j) {
        Rat sign = (j % 2 == 0) ? Rat(1) : Rat(-1);  // (-1)^j
        ck.expect("last_col_low", j + 1, n, ck.d(j, 2 * m) - sign * ck.d(1, 2 * m + 2 - j));
    }
    for (int j = m + 2; j <= 2 * m - 1; ++j) {
        Rat sign = (j % 2 == 0) ? Rat(1) : Rat(-1);
        ck.expect("last_col_high", j + 1, n, ck.d(j, 2 * m) + sign * ck.d(1, 2 * m + 2 - j));
    }
    ck.expect("m_plus_2_entry", m + 2, n, Rat(0));

    if (ck.bad) return *ck.bad;

    QDerivationShape s;
    s.m = m;
    s.alpha = alpha;
    s.beta = beta;
    s.a = ck.d(1, m + 1);
    s.b = ck.d(1, n) - ck.d(2, n);
    s.c = (m % 2 == 1) ? ck.d(1, m + 2) : ck.d(2, m + 2) - ck.d(1, m + 2);
    for (int k = m + 2; k <= 2 * m; ++k)
        if (k % 2 == 0) s.d[k] = ck.d(2, k);
    return s;
}

Mat realize_derivation_shape(const QDerivationShape& s, const std::map<int, Rat>& row1_gauge) {
    int m = s.m, n = 2 * m + 1;
    Mat D(n, n);
    auto e = [&](int i, int j) -> Rat& { return D.at(i - 1, j - 1); };
    e(1, 1) = s.alpha;
    e(2, 2) = s.beta;
    e(1, 2) = s.beta - s.alpha;
    for (int k = 3; k <= 2 * m; ++k) e(k, k) = Rat(k - 2) * s.alpha + s.beta;
    e(n, n) = Rat(2 * m - 2) * s.alpha + 2 * s.beta;
    e(1, m + 1) = s.a;
    e(1, n) = s.b;  // gauge: d_{2,2m+1} = 0
    if (m % 2 == 1) e(1, m + 2) = s.c;
    else e(2, m + 2) = s.c;  // gauge: d_{1,m+2} = 0
    for (const auto& [k, v] : s.d) {
        if (k < m + 2 || k > 2 * m || k % 2 != 0)
            throw std::invalid_argument("free d_k index out of range");
        e(2, k) = v;
    }
    for (const auto& [j, v] : row1_gauge) {
        if (j < 3 || j > 2 * m || j == m + 1 || j == m + 2)
            throw std::invalid_argument("row-1 gauge index out of range");
        e(1, j) += v;
    }
    // forced fills: row shift, then last column
    for (int j = 3; j <= 2 * m; ++j)
        for (int k = j + 1; k <= 2 * m; ++k)
            e(j, k) = e(2, k - j + 2);
    for (int j = 2; j <= m; ++j) {
        Rat sign = (j % 2 == 0) ? Rat(1) : Rat(-1);
        e(j + 1, n) = e(j, 2 * m) - sign * e(1, 2 * m + 2 - j);
    }
    for (int j = m + 2; j <= 2 * m - 1; ++j) {
        Rat sign = (j % 2 == 0) ? Rat(1) : Rat(-1);
        e(j + 1, n) = e(j, 2 * m) + sign * e(1, 2 * m + 2 - j);
    }
    e(m + 2, n) = 0;
    return D;
}

NilIndependence nil_independent(const std::vector<Mat>& Ds, bool require_triangular) {
    if (Ds.empty()) return {true, {}};
    int n = Ds.front().rows();
    for (const auto& D : Ds) {
        if (!D.is_square() || D.rows() != n)
            throw std::invalid_argument("dimension mismatch");
        if (require_triangular && !D.is_upper_triangular())
            throw std::invalid_argument("nil_independent requires upper-triangular input");
    }
    int t = static_cast<int>(Ds.size());
    Mat diags(t, n);
    for (int i = 0; i < t; ++i)
        diags.set_row(i, Ds[i].diagonal());
    Subspace ker = left_nullspace(diags);
    if (ker.dim() == 0) return {true, {}};
    return {false, ker.basis_row(0)};
}

Mat conjugate(const Mat& D, const Mat& A) {
    return inverse(A) * D * A;
}

Mat shift_by_inner(const LieAlgebra& g, const Mat& D, const Vec& coeffs) {
    return D + ad(g, coeffs);
}

std::variant<Mat, CompletionInfeasible>
complete_derivation(const LieAlgebra& g, const std::map<std::pair<int, int>, Rat>& pins) {
    DerivationSpace ds = derivation_space(g);
    int k = static_cast<int>(ds.basis.size());
    // coordinates x over the Der basis; pins give affine rows [coeffs | rhs]
    Mat sys(static_cast<int>(pins.size()), k + 1);
    int r = 0;
    for (const auto& [ij, val] : pins) {
        auto [i, j] = ij;
        for (int t = 0; t < k; ++t)
            sys.at(r, t) = ds.basis[t].at(i - 1, j - 1);
        sys.at(r, k) = val;
        ++r;
    }
    auto piv = rref_in_place(sys);
    for (int row = 0; row < sys.rows(); ++row) {
        bool lead_in_rhs = false;
        for (int c = 0; c < k + 1; ++c) {
            if (sys.at(row, c) == 0) continue;
            lead_in_rhs = (c == k);
            break;
        }
        if (lead_in_rhs)
            return CompletionInfeasible{"pinned entries admit no derivation"};
    }
    Vec x(k);
    for (int row = 0; row < static_cast<int>(piv.size()); ++row)
        if (piv[row] < k) x[piv[row]] = sys.at(row, k);  // free coordinates stay zero
    Mat D(g.dim(), g.dim());
    for (int t = 0; t < k; ++t)
        if (x[t] != 0) D += x[t] * ds.basis[t];
    // the particular solution must reproduce every pin exactly
    for (const auto& [ij, val] : pins)
        if (D.at(ij.first - 1, ij.second - 1) != val)
            return CompletionInfeasible{"pinned entries admit no derivation"};
    return D;
}

} // namespace liekit
