#ifndef LIEKIT_MATRIX_HPP
#define LIEKIT_MATRIX_HPP

#include "liekit/rational.hpp"

#include <initializer_list>
#include <vector>

namespace liekit {

using Vec = std::vector<Rat>;

/*
 * Dense rational matrix.  Row-vector convention throughout the project:
 * a linear map sends the row vector x to x*M, so row i of M is the image
 * of basis vector i.  Composition "f then g" is the product F*G.
 *
 * Desk scale (dims <= ~40): no sparsity, no pivoting heuristics beyond
 * the deterministic rule (first nonzero column, smallest row index).
 */
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
    Mat(std::initializer_list<std::initializer_list<Rat>> rows);

    static Mat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    Vec row(int i) const;
    void set_row(int i, const Vec& v);

    bool is_zero() const;
    bool is_upper_triangular() const;
    Vec diagonal() const;
    Mat transposed() const;

    Vec flatten() const { Vec v(a_.begin(), a_.end()); return v; }
    static Mat unflatten(const Vec& v, int n);

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    Mat& operator+=(const Mat& o);
    Mat& operator-=(const Mat& o);
    friend Mat operator+(Mat x, const Mat& y) { x += y; return x; }
    friend Mat operator-(Mat x, const Mat& y) { x -= y; return x; }
    friend Mat operator*(const Mat& x, const Mat& y);
    friend Mat operator*(const Rat& c, Mat x);

private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

// row vector times matrix
Vec mul(const Vec& x, const Mat& M);

// AB - BA; throws std::invalid_argument on dimension mismatch
Mat commutator(const Mat& A, const Mat& B);

// In-place reduced row echelon form (leading entries 1, zeros above and
// below).  Deterministic pivoting.  Returns pivot column indices.
std::vector<int> rref_in_place(Mat& M);

int rank(Mat M);

// true iff M^n = 0 for n = dim (square input required)
bool is_nilpotent_matrix(const Mat& M);

struct SingularMatrixError : std::domain_error {
    SingularMatrixError() : std::domain_error("matrix is singular") {}
};

Mat inverse(const Mat& A);
bool is_invertible(const Mat& A);

// exp(N) as the terminating sum for nilpotent N; throws std::domain_error otherwise
Mat exp_nilpotent(const Mat& N);

// Coefficients of det(tI - M), degree n down to 0 (Faddeev-LeVerrier).
// Test oracle for nilpotency: nilpotent iff all but the leading coefficient vanish.
std::vector<Rat> char_poly(const Mat& M);

} // namespace liekit

#endif
