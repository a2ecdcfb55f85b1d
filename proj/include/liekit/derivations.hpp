#ifndef LIEKIT_DERIVATIONS_HPP
#define LIEKIT_DERIVATIONS_HPP

#include "liekit/lie.hpp"

#include <variant>

namespace liekit {

struct LeibnizFailure {
    int a, b;    // 1-based basis pair
    Vec defect;  // D[ea,eb] - [D ea, eb] - [ea, D eb]
};

std::optional<LeibnizFailure> leibniz_first_violation(const LieAlgebra& g, const Mat& D);
bool is_derivation(const LieAlgebra& g, const Mat& D);

/*
 * Full solution space of the Leibniz system, solved over the n^2 matrix
 * entries with one linear equation per (a<b, c) triple.  `inner` is the
 * span of the flattened ad(e_a) inside the n^2-dimensional matrix space;
 * outer_dim follows the bookkeeping dim(basis) - dim(inner).  For honest
 * diagnostics on tensors where some ad(e_a) fail Leibniz, inner_in_der_dim
 * records dim(inner intersect span(basis)).
 */
struct DerivationSpace {
    int algebra_dim = 0;
    std::vector<Mat> basis;   // canonical (RREF of flattened solution space)
    Subspace inner;           // span of flattened ad(e_a)
    int inner_in_der_dim = 0;
    int outer_dim = 0;
};

DerivationSpace derivation_space(const LieAlgebra& g);

// Representatives spanning a complement of (inner ∩ Der) inside Der.
std::vector<Mat> outer_derivation_representatives(const LieAlgebra& g,
                                                  const DerivationSpace& ds);

/*
 * Lemma-1 shape of a derivation of Q_{2m+1}: upper triangular, diagonal
 * d_kk = (k-2)a+b (3<=k<=2m), d_{n,n} = (2m-2)a+2b, d12 = b-a, plus the
 * row-shift and last-column laws.  The checker enforces the derived
 * constraint list (not a pixel-match of the paper-style display) and
 * extracts the named free entries.
 */
struct QDerivationShape {
    int m = 0;
    Rat alpha, beta;
    Rat a;  // d_{1,m+1}
    Rat b;  // d_{1,2m+1} - d_{2,2m+1}
    Rat c;  // d_{1,m+2} (m odd) / d_{2,m+2} - d_{1,m+2} (m even)
    std::map<int, Rat> d;  // d_{2,k} for even k in [m+2, 2m]
};

struct ShapeViolation {
    std::string constraint;  // name of the first violated law
    int i = 0, j = 0;        // offending entry (1-based), when applicable
    Rat expected, actual;
};

// Requires D to be a derivation of build_Q(m); throws std::invalid_argument otherwise.
std::variant<QDerivationShape, ShapeViolation> check_lemma1_shape(int m, const Mat& D);

// Build the derivation with the given named parameters (and optional extra
// row-1 gauge entries d_{1,j}); inverse of the shape extraction up to gauge.
Mat realize_derivation_shape(const QDerivationShape& s,
                             const std::map<int, Rat>& row1_gauge = {});

struct NilIndependence {
    bool independent = false;
    Vec witness;  // nontrivial combination with nilpotent value when dependent
};

// Triangular criterion: a combination of simultaneously upper-triangular
// matrices is nilpotent iff its diagonal vanishes.  Non-triangular input is
// rejected (std::invalid_argument) when require_triangular is set.
NilIndependence nil_independent(const std::vector<Mat>& Ds, bool require_triangular = true);

// sigma D sigma^{-1} in the row convention: A^{-1} * D * A.  Throws on singular A.
Mat conjugate(const Mat& D, const Mat& A);

// D + ad(sum coeffs_a e_a)
Mat shift_by_inner(const LieAlgebra& g, const Mat& D, const Vec& coeffs);

/*
 * Affine completion: the unique-up-to-gauge derivation whose entries match
 * `pins` ((i,j) 1-based -> value), with every genuinely free leftover
 * parameter set to zero (deterministic RREF particular solution).  Returns
 * the infeasible pin set when no derivation satisfies the pins.
 */
struct CompletionInfeasible {
    std::string detail;
};

std::variant<Mat, CompletionInfeasible>
complete_derivation(const LieAlgebra& g, const std::map<std::pair<int, int>, Rat>& pins);

} // namespace liekit

#endif
