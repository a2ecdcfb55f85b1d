#ifndef LIEKIT_SUBSPACE_HPP
#define LIEKIT_SUBSPACE_HPP

#include "liekit/matrix.hpp"

namespace liekit {

/*
 * Coordinate subspace held as its canonical reduced row echelon basis
 * (leading entries 1, no zero rows).  Canonical form makes equality a
 * bit-exact comparison.
 */
class Subspace {
public:
    explicit Subspace(int ambient) : ambient_(ambient), rows_(0, ambient) {}

    static Subspace span(int ambient, const std::vector<Vec>& gens);
    static Subspace full(int ambient);

    int ambient() const { return ambient_; }
    int dim() const { return rows_.rows(); }
    const Mat& basis() const { return rows_; }
    Vec basis_row(int i) const { return rows_.row(i); }

    // residual of v after reduction against the canonical rows
    Vec reduce(Vec v) const;
    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
    }

private:
    int ambient_;
    Mat rows_;
};

// {x : x M = 0}, canonical basis (row-vector convention)
Subspace left_nullspace(const Mat& M);

} // namespace liekit

#endif
