// Concrete object and morphism types for three categories of linear
// algebra data, with validators.
//
//   - CObject: a space V with subspaces A1, A2, B1, B2 such that every
//     A_i (+) B_j = V. Morphisms are maps phi with phi(A_i) in X_i and
//     phi(B_i) in Y_i.
//   - A2Object: spaces E-, E0, E+ with maps delta-+: E-+ -> E0 and
//     gamma-+: E0 -> E-+ satisfying gamma_- delta_- = 1, gamma_+ delta_+ = 1,
//     and gamma_- delta_+, gamma_+ delta_- invertible. Morphisms are triples
//     making the four squares against the structure maps commute.
//   - A1Object: a pair of maps u: N -> M, v: M -> N with 1 - uv invertible.
//
// Validators return violation lists instead of throwing, so a batch caller
// can display every failure at once. The empty list means valid. All types
// are plain immutable values; object equality is data equality (canonical
// subspace bases make this exact).
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "equicat/matrix.hpp"
#include "equicat/subspace.hpp"

namespace equicat {

struct Violation {
    std::string where;
    std::string what;

    std::string str() const { return where + ": " + what; }
};

using Violations = std::vector<Violation>;

// ---------------------------------------------------------------------------
// Object and morphism data

struct CObject {
    std::size_t ambient;
    Subspace a1, a2, b1, b2;

    static CObject zero() {
        return {0, Subspace(0), Subspace(0), Subspace(0), Subspace(0)};
    }

    friend bool operator==(const CObject&, const CObject&) = default;
};

struct CMorphism {
    CObject source;
    CObject target;
    LinearMap map;  // source.ambient -> target.ambient

    friend bool operator==(const CMorphism&, const CMorphism&) = default;
};

struct A2Object {
    LinearMap delta_minus;  // E- -> E0
    LinearMap gamma_minus;  // E0 -> E-
    LinearMap delta_plus;   // E+ -> E0
    LinearMap gamma_plus;   // E0 -> E+

    std::size_t n_minus() const { return delta_minus.cols(); }
    std::size_t n_zero() const { return delta_minus.rows(); }
    std::size_t n_plus() const { return delta_plus.cols(); }

    friend bool operator==(const A2Object&, const A2Object&) = default;
};

struct A2Morphism {
    A2Object source;
    A2Object target;
    LinearMap e_minus;
    LinearMap e_zero;
    LinearMap e_plus;

    friend bool operator==(const A2Morphism&, const A2Morphism&) = default;
};

struct A1Object {
    LinearMap u;  // N -> M
    LinearMap v;  // M -> N

    std::size_t dim_m() const { return u.rows(); }
    std::size_t dim_n() const { return u.cols(); }

    friend bool operator==(const A1Object&, const A1Object&) = default;
};

// ---------------------------------------------------------------------------
// Validators

inline Violations validate_c_object(const CObject& x) {
    Violations out;
    const Subspace* subs[4] = {&x.a1, &x.a2, &x.b1, &x.b2};
    const char* names[4] = {"a1", "a2", "b1", "b2"};
    for (int i = 0; i < 4; ++i)
        if (subs[i]->ambient_dim() != x.ambient)
            out.push_back({names[i], "ambient dimension " + std::to_string(subs[i]->ambient_dim()) +
                                         " does not match " + std::to_string(x.ambient)});
    if (!out.empty()) return out;

    const Subspace* a[2] = {&x.a1, &x.a2};
    const Subspace* b[2] = {&x.b1, &x.b2};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            std::string pair = "a" + std::to_string(i + 1) + "+b" + std::to_string(j + 1);
            std::size_t inter = subspace_intersection(*a[i], *b[j]).dim();
            std::size_t dim_sum = a[i]->dim() + b[j]->dim();
            if (inter != 0)
                out.push_back({pair, "intersection nonzero (dimension " + std::to_string(inter) + ")"});
            else if (dim_sum != x.ambient)
                out.push_back({pair, "dimensions short (" + std::to_string(dim_sum) + " of " +
                                         std::to_string(x.ambient) + ")"});
        }
    return out;
}

inline Violations validate_c_morphism(const CMorphism& f) {
    Violations out;
    for (const auto& v : validate_c_object(f.source)) out.push_back({"source." + v.where, v.what});
    for (const auto& v : validate_c_object(f.target)) out.push_back({"target." + v.where, v.what});
    if (f.map.cols() != f.source.ambient || f.map.rows() != f.target.ambient) {
        out.push_back({"map", "shape " + f.map.shape_str() + " does not map ambient " +
                                  std::to_string(f.source.ambient) + " to ambient " +
                                  std::to_string(f.target.ambient)});
        return out;
    }
    if (!out.empty()) return out;

    const Subspace* src[4] = {&f.source.a1, &f.source.a2, &f.source.b1, &f.source.b2};
    const Subspace* tgt[4] = {&f.target.a1, &f.target.a2, &f.target.b1, &f.target.b2};
    const char* names[4] = {"a1", "a2", "b1", "b2"};
    for (int i = 0; i < 4; ++i)
        if (!try_solve(tgt[i]->basis(), f.map * src[i]->basis()))
            out.push_back({names[i], std::string("image of source ") + names[i] +
                                         " not contained in target " + names[i]});
    return out;
}

inline Violations validate_a2_object(const A2Object& e) {
    Violations out;
    std::size_t nm = e.n_minus(), n0 = e.n_zero(), np = e.n_plus();
    if (e.gamma_minus.rows() != nm || e.gamma_minus.cols() != n0)
        out.push_back({"gamma_minus", "shape " + e.gamma_minus.shape_str() + ", expected " +
                                          std::to_string(nm) + "x" + std::to_string(n0)});
    if (e.delta_plus.rows() != n0)
        out.push_back({"delta_plus", "codomain dimension " + std::to_string(e.delta_plus.rows()) +
                                         " does not match " + std::to_string(n0)});
    if (e.gamma_plus.rows() != np || e.gamma_plus.cols() != n0)
        out.push_back({"gamma_plus", "shape " + e.gamma_plus.shape_str() + ", expected " +
                                         std::to_string(np) + "x" + std::to_string(n0)});
    if (!out.empty()) return out;

    if (e.gamma_minus * e.delta_minus != Matrix::identity(nm))
        out.push_back({"gamma_minus.delta_minus", "not the identity"});
    if (e.gamma_plus * e.delta_plus != Matrix::identity(np))
        out.push_back({"gamma_plus.delta_plus", "not the identity"});
    if (!is_invertible(e.gamma_minus * e.delta_plus))
        out.push_back({"gamma_minus.delta_plus", "not invertible"});
    if (!is_invertible(e.gamma_plus * e.delta_minus))
        out.push_back({"gamma_plus.delta_minus", "not invertible"});
    return out;
}

inline Violations validate_a2_morphism(const A2Morphism& f) {
    Violations out;
    for (const auto& v : validate_a2_object(f.source)) out.push_back({"source." + v.where, v.what});
    for (const auto& v : validate_a2_object(f.target)) out.push_back({"target." + v.where, v.what});

    const LinearMap* comps[3] = {&f.e_minus, &f.e_zero, &f.e_plus};
    const char* names[3] = {"e_minus", "e_zero", "e_plus"};
    std::size_t src_dims[3] = {f.source.n_minus(), f.source.n_zero(), f.source.n_plus()};
    std::size_t tgt_dims[3] = {f.target.n_minus(), f.target.n_zero(), f.target.n_plus()};
    bool shape_ok = true;
    for (int i = 0; i < 3; ++i)
        if (comps[i]->rows() != tgt_dims[i] || comps[i]->cols() != src_dims[i]) {
            out.push_back({names[i], "shape " + comps[i]->shape_str() + ", expected " +
                                         std::to_string(tgt_dims[i]) + "x" +
                                         std::to_string(src_dims[i])});
            shape_ok = false;
        }
    if (!shape_ok || !out.empty()) return out;

    // The four commuting squares against the structure maps.
    if (f.target.delta_minus * f.e_minus != f.e_zero * f.source.delta_minus)
        out.push_back({"square eta_minus", "eta_minus . e_minus != e_zero . delta_minus"});
    if (f.target.gamma_plus * f.e_zero != f.e_plus * f.source.gamma_plus)
        out.push_back({"square xi_plus", "xi_plus . e_zero != e_plus . gamma_plus"});
    if (f.target.gamma_minus * f.e_zero != f.e_minus * f.source.gamma_minus)
        out.push_back({"square xi_minus", "xi_minus . e_zero != e_minus . gamma_minus"});
    if (f.target.delta_plus * f.e_plus != f.e_zero * f.source.delta_plus)
        out.push_back({"square eta_plus", "eta_plus . e_plus != e_zero . delta_plus"});
    return out;
}

inline Violations validate_a1_object(const A1Object& o) {
    Violations out;
    if (o.v.rows() != o.u.cols() || o.v.cols() != o.u.rows()) {
        out.push_back({"v", "shape " + o.v.shape_str() + " is not composable with u (" +
                                o.u.shape_str() + ")"});
        return out;
    }
    if (!is_invertible(Matrix::identity(o.dim_m()) - o.u * o.v))
        out.push_back({"1-uv", "not invertible"});
    return out;
}

// ---------------------------------------------------------------------------
// Category structure

inline CMorphism identity_c(const CObject& x) {
    return {x, x, Matrix::identity(x.ambient)};
}

inline CMorphism compose(const CMorphism& g, const CMorphism& f) {
    if (!(f.target == g.source))
        throw std::invalid_argument("compose: middle objects differ");
    return {f.source, g.target, g.map * f.map};
}

inline A2Morphism identity_a2(const A2Object& e) {
    return {e, e, Matrix::identity(e.n_minus()), Matrix::identity(e.n_zero()),
            Matrix::identity(e.n_plus())};
}

inline A2Morphism compose(const A2Morphism& g, const A2Morphism& f) {
    if (!(f.target == g.source))
        throw std::invalid_argument("compose: middle objects differ");
    return {f.source, g.target, g.e_minus * f.e_minus, g.e_zero * f.e_zero, g.e_plus * f.e_plus};
}

// ---------------------------------------------------------------------------
// Direct sums (the categories are additive; sums are the main source of
// structurally valid non-identity morphisms)

struct CDirectSum {
    CObject object;
    CMorphism include_left, include_right;
    CMorphism project_left, project_right;
};

inline CDirectSum direct_sum_c(const CObject& x, const CObject& y) {
    std::size_t nx = x.ambient, ny = y.ambient;
    CObject sum{nx + ny,
                Subspace(nx + ny, block_diag(x.a1.basis(), y.a1.basis())),
                Subspace(nx + ny, block_diag(x.a2.basis(), y.a2.basis())),
                Subspace(nx + ny, block_diag(x.b1.basis(), y.b1.basis())),
                Subspace(nx + ny, block_diag(x.b2.basis(), y.b2.basis()))};
    Matrix incl_x = vstack(Matrix::identity(nx), Matrix(ny, nx));
    Matrix incl_y = vstack(Matrix(nx, ny), Matrix::identity(ny));
    return {sum,
            {x, sum, incl_x},
            {y, sum, incl_y},
            {sum, x, incl_x.transpose()},
            {sum, y, incl_y.transpose()}};
}

struct A2DirectSum {
    A2Object object;
    A2Morphism include_left, include_right;
    A2Morphism project_left, project_right;
};

inline A2DirectSum direct_sum_a2(const A2Object& x, const A2Object& y) {
    A2Object sum{block_diag(x.delta_minus, y.delta_minus),
                 block_diag(x.gamma_minus, y.gamma_minus),
                 block_diag(x.delta_plus, y.delta_plus),
                 block_diag(x.gamma_plus, y.gamma_plus)};
    auto incl = [](std::size_t nx, std::size_t ny) {
        return vstack(Matrix::identity(nx), Matrix(ny, nx));
    };
    Matrix im = incl(x.n_minus(), y.n_minus());
    Matrix i0 = incl(x.n_zero(), y.n_zero());
    Matrix ip = incl(x.n_plus(), y.n_plus());
    auto incl2 = [](std::size_t nx, std::size_t ny) {
        return vstack(Matrix(nx, ny), Matrix::identity(ny));
    };
    Matrix jm = incl2(x.n_minus(), y.n_minus());
    Matrix j0 = incl2(x.n_zero(), y.n_zero());
    Matrix jp = incl2(x.n_plus(), y.n_plus());
    return {sum,
            {x, sum, im, i0, ip},
            {y, sum, jm, j0, jp},
            {sum, x, im.transpose(), i0.transpose(), ip.transpose()},
            {sum, y, jm.transpose(), j0.transpose(), jp.transpose()}};
}

}  // namespace equicat
