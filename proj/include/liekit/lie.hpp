#ifndef LIEKIT_LIE_HPP
#define LIEKIT_LIE_HPP

#include "liekit/subspace.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace liekit {

/*
 * Structure-constant algebra on an ordered basis: the tensor stores only
 * a < b entries (antisymmetry supplies the rest), indices 0-based in
 * memory, 1-based in every report and file format.
 *
 * Construction does not force the Jacobi identity -- jacobi_first_violation
 * reports the first failing triple as a value, and make_checked() is the
 * constructor that rejects non-Lie tensors.  Series, centers and brackets
 * are well-defined for any antisymmetric tensor, so the verifier can still
 * dissect a broken candidate algebra instead of refusing to look at it.
 */
class LieAlgebra {
public:
    // tensor: (a,b) with a<b  ->  sorted list of (c, coeff), coeffs nonzero
    using Tensor = std::map<std::pair<int, int>, std::vector<std::pair<int, Rat>>>;

    LieAlgebra(int dim, std::vector<std::string> basis_names, Tensor tensor);
    LieAlgebra(int dim, Tensor tensor);  // default names e1..en

    int dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return names_; }
    const Tensor& tensor() const { return tensor_; }

    // [e_a, e_b] for 0-based a, b (any order; antisymmetry applied)
    Vec bracket_basis(int a, int b) const;

    Vec e(int i_one_based) const;

private:
    int dim_;
    std::vector<std::string> names_;
    Tensor tensor_;
};

struct JacobiFailure {
    int a, b, c;  // 1-based triple
    Vec defect;   // value of the cyclic sum
};

struct NonLieTensorError : std::domain_error {
    JacobiFailure failure;
    explicit NonLieTensorError(JacobiFailure f);
};

// Constructor that enforces Jacobi; throws NonLieTensorError otherwise.
LieAlgebra make_checked(int dim, LieAlgebra::Tensor tensor,
                        std::vector<std::string> names = {});

Vec bracket(const LieAlgebra& g, const Vec& x, const Vec& y);

std::optional<JacobiFailure> jacobi_first_violation(const LieAlgebra& g);
bool jacobi_holds(const LieAlgebra& g);

// matrix of y -> [x, y]; row b = [x, e_b]
Mat ad(const LieAlgebra& g, const Vec& x);

// span{ [a, b] : a in A, b in B }
Subspace bracket_subspaces(const LieAlgebra& g, const Subspace& A, const Subspace& B);

// g = S_0 >= S_1 >= ... until stabilization (last entry reported even if nonzero)
std::vector<Subspace> derived_series(const LieAlgebra& g);
std::vector<Subspace> lower_central_series(const LieAlgebra& g);

bool is_solvable(const LieAlgebra& g);
bool is_nilpotent(const LieAlgebra& g);
// smallest k with g^k = 0; nullopt if not nilpotent
std::optional<int> nilindex(const LieAlgebra& g);

Subspace center(const LieAlgebra& g);

bool is_ideal(const LieAlgebra& g, const Subspace& S);

// Transport the tensor under the invertible basis change f_a = sum P[a][k] e_k.
LieAlgebra change_basis(const LieAlgebra& g, const Mat& P);

// --- file format ---
// { "dim": n, "basis": ["e1",...],
//   "brackets": [ {"a":1,"b":2,"out":[{"c":3,"coeff":"1"}]}, ... ] }
// a<b entries only, sorted by (a,b,c), canonical scalar strings.
nlohmann::ordered_json algebra_to_json(const LieAlgebra& g);
LieAlgebra algebra_from_json(const nlohmann::json& j);

} // namespace liekit

#endif
