#include "liekit/lie.hpp"

#include <algorithm>
#include <stdexcept>

namespace liekit {

LieAlgebra::LieAlgebra(int dim, std::vector<std::string> basis_names, Tensor tensor)
    : dim_(dim), names_(std::move(basis_names)), tensor_(std::move(tensor)) {
    if (dim_ <= 0) throw std::invalid_argument("dimension must be positive");
    if (names_.empty()) {
        names_.reserve(dim_);
        for (int i = 1; i <= dim_; ++i) names_.push_back("e" + std::to_string(i));
    }
    if (static_cast<int>(names_.size()) != dim_)
        throw std::invalid_argument("basis name count mismatch");
    for (auto& [ab, out] : tensor_) {
        auto [a, b] = ab;
        if (a < 0 || b >= dim_ || a >= b)
            throw std::invalid_argument("tensor key out of range or not a<b");
        std::sort(out.begin(), out.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        int prev = -1;
        for (auto& [c, v] : out) {
            if (c < 0 || c >= dim_) throw std::invalid_argument("tensor target out of range");
            if (c == prev) throw std::invalid_argument("duplicate target in tensor entry");
            if (v == 0) throw std::invalid_argument("zero coefficient stored in tensor");
            prev = c;
        }
    }
    // drop empty entries so equal algebras have equal tensors
    for (auto it = tensor_.begin(); it != tensor_.end();)
        it = it->second.empty() ? tensor_.erase(it) : std::next(it);
}

LieAlgebra::LieAlgebra(int dim, Tensor tensor)
    : LieAlgebra(dim, {}, std::move(tensor)) {}

Vec LieAlgebra::bracket_basis(int a, int b) const {
    Vec out(dim_);
    if (a == b) return out;
    bool flip = a > b;
    if (flip) std::swap(a, b);
    auto it = tensor_.find({a, b});
    if (it == tensor_.end()) return out;
    for (const auto& [c, v] : it->second)
        out[c] = flip ? Rat(-v) : v;
    return out;
}

Vec LieAlgebra::e(int i) const {
    Vec v(dim_);
    v[i - 1] = 1;
    return v;
}

NonLieTensorError::NonLieTensorError(JacobiFailure f)
    : std::domain_error("Jacobi identity fails at triple (" + std::to_string(f.a) + "," +
                        std::to_string(f.b) + "," + std::to_string(f.c) + ")"),
      failure(std::move(f)) {}

LieAlgebra make_checked(int dim, LieAlgebra::Tensor tensor, std::vector<std::string> names) {
    LieAlgebra g(dim, std::move(names), std::move(tensor));
    if (auto bad = jacobi_first_violation(g))
        throw NonLieTensorError(*bad);
    return g;
}

Vec bracket(const LieAlgebra& g, const Vec& x, const Vec& y) {
    int n = g.dim();
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
        throw std::invalid_argument("vector length mismatch");
    Vec out(n);
    for (const auto& [ab, terms] : g.tensor()) {
        auto [a, b] = ab;
        Rat f = x[a] * y[b] - x[b] * y[a];
        if (f == 0) continue;
        for (const auto& [c, v] : terms)
            out[c] += f * v;
    }
    return out;
}

std::optional<JacobiFailure> jacobi_first_violation(const LieAlgebra& g) {
    int n = g.dim();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                Vec ea = g.bracket_basis(b, c);
                Vec s = bracket(g, g.e(a + 1), ea);
                Vec eb = g.bracket_basis(c, a);
                Vec t = bracket(g, g.e(b + 1), eb);
                Vec ec = g.bracket_basis(a, b);
                Vec u = bracket(g, g.e(c + 1), ec);
                bool bad = false;
                for (int i = 0; i < n; ++i) {
                    s[i] += t[i] + u[i];
                    if (s[i] != 0) bad = true;
                }
                if (bad) return JacobiFailure{a + 1, b + 1, c + 1, s};
            }
    return std::nullopt;
}

bool jacobi_holds(const LieAlgebra& g) {
    return !jacobi_first_violation(g).has_value();
}

Mat ad(const LieAlgebra& g, const Vec& x) {
    int n = g.dim();
    if (static_cast<int>(x.size()) != n)
        throw std::invalid_argument("vector length mismatch");
    Mat M(n, n);
    for (int b = 0; b < n; ++b)
        M.set_row(b, bracket(g, x, g.e(b + 1)));
    return M;
}

Subspace bracket_subspaces(const LieAlgebra& g, const Subspace& A, const Subspace& B) {
    std::vector<Vec> gens;
    for (int i = 0; i < A.dim(); ++i)
        for (int j = 0; j < B.dim(); ++j)
            gens.push_back(bracket(g, A.basis_row(i), B.basis_row(j)));
    return Subspace::span(g.dim(), gens);
}

namespace {

std::vector<Subspace> series(const LieAlgebra& g, bool lower_central) {
    Subspace full = Subspace::full(g.dim());
    std::vector<Subspace> out{full};
    // dims strictly decrease until stabilization; dim+1 iterations as a hard cap
    for (int step = 0; step <= g.dim(); ++step) {
        const Subspace& cur = out.back();
        Subspace next = lower_central ? bracket_subspaces(g, full, cur)
                                      : bracket_subspaces(g, cur, cur);
        if (next == cur) break;
        out.push_back(next);
        if (next.dim() == 0) break;
    }
    return out;
}

} // namespace

std::vector<Subspace> derived_series(const LieAlgebra& g) { return series(g, false); }
std::vector<Subspace> lower_central_series(const LieAlgebra& g) { return series(g, true); }

bool is_solvable(const LieAlgebra& g) {
    return derived_series(g).back().dim() == 0;
}

bool is_nilpotent(const LieAlgebra& g) {
    return lower_central_series(g).back().dim() == 0;
}

std::optional<int> nilindex(const LieAlgebra& g) {
    auto s = lower_central_series(g);
    if (s.back().dim() != 0) return std::nullopt;
    return static_cast<int>(s.size()) - 1;
}

Subspace center(const LieAlgebra& g) {
    // x -> flatten(ad x) is linear; stack the basis images and take the kernel
    int n = g.dim();
    Mat stacked(n, n * n);
    for (int a = 0; a < n; ++a)
        stacked.set_row(a, ad(g, g.e(a + 1)).flatten());
    return left_nullspace(stacked);
}

bool is_ideal(const LieAlgebra& g, const Subspace& S) {
    if (S.ambient() != g.dim())
        throw std::invalid_argument("ambient mismatch");
    for (int a = 0; a < g.dim(); ++a)
        for (int i = 0; i < S.dim(); ++i)
            if (!S.contains(bracket(g, g.e(a + 1), S.basis_row(i))))
                return false;
    return true;
}

LieAlgebra change_basis(const LieAlgebra& g, const Mat& P) {
    int n = g.dim();
    if (P.rows() != n || P.cols() != n)
        throw std::invalid_argument("dimension mismatch");
    Mat Pinv = inverse(P);
    LieAlgebra::Tensor t;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            Vec v = mul(bracket(g, P.row(a), P.row(b)), Pinv);
            std::vector<std::pair<int, Rat>> terms;
            for (int c = 0; c < n; ++c)
                if (v[c] != 0) terms.emplace_back(c, v[c]);
            if (!terms.empty()) t[{a, b}] = std::move(terms);
        }
    return LieAlgebra(n, g.basis_names(), std::move(t));
}

nlohmann::ordered_json algebra_to_json(const LieAlgebra& g) {
    nlohmann::ordered_json j;
    j["dim"] = g.dim();
    j["basis"] = g.basis_names();
    nlohmann::ordered_json brackets = nlohmann::ordered_json::array();
    for (const auto& [ab, terms] : g.tensor()) {  // map ordering = sorted by (a,b)
        nlohmann::ordered_json entry;
        entry["a"] = ab.first + 1;
        entry["b"] = ab.second + 1;
        nlohmann::ordered_json out = nlohmann::ordered_json::array();
        for (const auto& [c, v] : terms)  // sorted by c
            out.push_back({{"c", c + 1}, {"coeff", rat_to_string(v)}});
        entry["out"] = std::move(out);
        brackets.push_back(std::move(entry));
    }
    j["brackets"] = std::move(brackets);
    return j;
}

LieAlgebra algebra_from_json(const nlohmann::json& j) {
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw std::invalid_argument("algebra json: missing integer 'dim'");
    int n = j["dim"].get<int>();
    std::vector<std::string> names;
    if (j.contains("basis")) names = j["basis"].get<std::vector<std::string>>();
    LieAlgebra::Tensor t;
    if (j.contains("brackets")) {
        for (const auto& entry : j["brackets"]) {
            int a = entry.at("a").get<int>() - 1;
            int b = entry.at("b").get<int>() - 1;
            std::vector<std::pair<int, Rat>> terms;
            for (const auto& o : entry.at("out")) {
                Rat v = rat_from_string(o.at("coeff").get<std::string>());
                if (v != 0) terms.emplace_back(o.at("c").get<int>() - 1, v);
            }
            if (a >= b) throw std::invalid_argument("algebra json: bracket entries need a<b");
            auto& slot = t[{a, b}];
            for (auto& term : terms) {
                auto it = std::find_if(slot.begin(), slot.end(),
                                       [&](const auto& p) { return p.first == term.first; });
                if (it != slot.end()) throw std::invalid_argument("algebra json: duplicate (a,b,c)");
                slot.push_back(term);
            }
        }
    }
    return LieAlgebra(n, std::move(names), std::move(t));
}

} // namespace liekit
