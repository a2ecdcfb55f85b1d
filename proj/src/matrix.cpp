#include "liekit/matrix.hpp"

#include <stdexcept>

namespace liekit {

Mat::Mat(std::initializer_list<std::initializer_list<Rat>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    a_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_)
            throw std::invalid_argument("ragged initializer");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

Mat Mat::identity(int n) {
    Mat I(n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

Vec Mat::row(int i) const {
    return Vec(a_.begin() + static_cast<size_t>(i) * cols_,
               a_.begin() + static_cast<size_t>(i + 1) * cols_);
}

void Mat::set_row(int i, const Vec& v) {
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("row length mismatch");
    std::copy(v.begin(), v.end(), a_.begin() + static_cast<size_t>(i) * cols_);
}

bool Mat::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

bool Mat::is_upper_triangular() const {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < i && j < cols_; ++j)
            if (at(i, j) != 0) return false;
    return true;
}

Vec Mat::diagonal() const {
    int n = std::min(rows_, cols_);
    Vec d(n);
    for (int i = 0; i < n; ++i) d[i] = at(i, i);
    return d;
}

Mat Mat::transposed() const {
    Mat T(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            T.at(j, i) = at(i, j);
    return T;
}

Mat Mat::unflatten(const Vec& v, int n) {
    if (static_cast<int>(v.size()) != n * n)
        throw std::invalid_argument("flatten length mismatch");
    Mat M(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            M.at(i, j) = v[static_cast<size_t>(i) * n + j];
    return M;
}

Mat& Mat::operator+=(const Mat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("dimension mismatch");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

Mat& Mat::operator-=(const Mat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("dimension mismatch");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols_ != y.rows_)
        throw std::invalid_argument("dimension mismatch");
    Mat z(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
        for (int k = 0; k < x.cols_; ++k) {
            const Rat& xik = x.at(i, k);
            if (xik == 0) continue;
            for (int j = 0; j < y.cols_; ++j)
                z.at(i, j) += xik * y.at(k, j);
        }
    return z;
}

Mat operator*(const Rat& c, Mat x) {
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j)
            x.at(i, j) *= c;
    return x;
}

Vec mul(const Vec& x, const Mat& M) {
    if (static_cast<int>(x.size()) != M.rows())
        throw std::invalid_argument("dimension mismatch");
    Vec y(M.cols());
    for (int i = 0; i < M.rows(); ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < M.cols(); ++j)
            y[j] += x[i] * M.at(i, j);
    }
    return y;
}

Mat commutator(const Mat& A, const Mat& B) {
    if (!A.is_square() || !B.is_square() || A.rows() != B.rows())
        throw std::invalid_argument("commutator needs equal square matrices");
    return A * B - B * A;
}

std::vector<int> rref_in_place(Mat& M) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < M.cols() && r < M.rows(); ++c) {
        int pr = -1;
        for (int i = r; i < M.rows(); ++i)
            if (M.at(i, c) != 0) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < M.cols(); ++j)
                std::swap(M.at(r, j), M.at(pr, j));
        Rat inv = Rat(1) / M.at(r, c);
        for (int j = c; j < M.cols(); ++j) M.at(r, j) *= inv;
        for (int i = 0; i < M.rows(); ++i) {
            if (i == r || M.at(i, c) == 0) continue;
            Rat f = M.at(i, c);
            for (int j = c; j < M.cols(); ++j)
                M.at(i, j) -= f * M.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(Mat M) {
    return static_cast<int>(rref_in_place(M).size());
}

bool is_nilpotent_matrix(const Mat& M) {
    if (!M.is_square())
        throw std::invalid_argument("nilpotency is for square matrices");
    Mat P = M;
    for (int k = 1; k <= M.rows(); ++k) {
        if (P.is_zero()) return true;
        P = P * M;
    }
    return P.is_zero();
}

Mat inverse(const Mat& A) {
    if (!A.is_square()) throw std::invalid_argument("inverse of non-square matrix");
    int n = A.rows();
    Mat W(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) W.at(i, j) = A.at(i, j);
        W.at(i, n + i) = 1;
    }
    auto piv = rref_in_place(W);
    if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1)
        throw SingularMatrixError();
    Mat B(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            B.at(i, j) = W.at(i, n + j);
    return B;
}

bool is_invertible(const Mat& A) {
    return A.is_square() && rank(A) == A.rows();
}

Mat exp_nilpotent(const Mat& N) {
    if (!is_nilpotent_matrix(N))
        throw std::domain_error("exp_nilpotent: input is not nilpotent");
    int n = N.rows();
    Mat R = Mat::identity(n);
    Mat P = Mat::identity(n);
    Rat fact(1);
    for (int k = 1; k <= n; ++k) {
        P = P * N;
        if (P.is_zero()) break;
        fact *= k;
        R += Rat(Rat(1) / fact) * P;
    }
    return R;
}

std::vector<Rat> char_poly(const Mat& M) {
    if (!M.is_square()) throw std::invalid_argument("char_poly of non-square matrix");
    int n = M.rows();
    // Faddeev-LeVerrier: c[0]=1 leading; M_1 = M, c_k = -tr(M_k)/k, M_{k+1} = M(M_k + c_k I)
    std::vector<Rat> c(n + 1);
    c[0] = 1;
    Mat Mk = M;
    for (int k = 1; k <= n; ++k) {
        Rat tr(0);
        for (int i = 0; i < n; ++i) tr += Mk.at(i, i);
        c[k] = -tr / Rat(k);
        if (k < n) {
            Mat A = Mk;
            for (int i = 0; i < n; ++i) A.at(i, i) += c[k];
            Mk = M * A;
        }
    }
    return c;
}

} // namespace liekit
