// Subspaces of a coordinate space, held in a canonical form so that
// subspace equality is equality of basis grids.
//
// The canonical representative is the reduced column echelon form (RCEF)
// of any spanning matrix: the transpose of the RREF of the transpose, with
// zero columns dropped. Leading entries are 1, sit in strictly increasing
// rows from left to right, and are the only nonzero entries in their rows.
// RCEF is unique per column span, which is what lets the category layer
// check object equality as plain data equality.
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>

#include "equicat/matrix.hpp"

namespace equicat {

struct RcefResult {
    Matrix canonical;
    std::size_t rank;
};

/// Reduced column echelon form with zero columns dropped; `rank` is the
/// dimension of the column span.
inline RcefResult rcef(const Matrix& m) {
    Matrix work = m.transpose();
    auto pivots = detail::rref_in_place(work);
    // Nonzero rows of the RREF are exactly the first pivots.size() rows.
    Matrix basis = work.row_block(0, pivots.size()).transpose();
    return {std::move(basis), pivots.size()};
}

class Subspace {
public:
    /// The zero subspace of the given ambient space.
    explicit Subspace(std::size_t ambient_dim)
        : ambient_(ambient_dim), basis_(ambient_dim, 0) {}

    /// Span of the columns of `spanning`. Any spanning set is accepted;
    /// dependent columns are dropped by canonicalization.
    Subspace(std::size_t ambient_dim, const Matrix& spanning) : ambient_(ambient_dim) {
        if (spanning.rows() != ambient_dim)
            throw std::invalid_argument("Subspace: spanning matrix has wrong ambient dimension");
        basis_ = rcef(spanning).canonical;
    }

    static Subspace full(std::size_t ambient_dim) {
        return Subspace(ambient_dim, Matrix::identity(ambient_dim));
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.cols(); }
    const Matrix& basis() const { return basis_; }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    std::size_t ambient_;
    Matrix basis_;
};

/// Kernel of f as a canonical subspace of the domain.
inline Subspace kernel_basis(const LinearMap& f) {
    Matrix work = f;
    auto pivots = detail::rref_in_place(work);
    // One generator per free column: set that coordinate to 1 and read the
    // pivot coordinates off the reduced rows.
    std::size_t n = f.cols();
    Matrix gen(n, n - pivots.size());
    std::size_t k = 0;
    std::size_t next_pivot = 0;
    for (std::size_t col = 0; col < n; ++col) {
        if (next_pivot < pivots.size() && pivots[next_pivot] == col) {
            ++next_pivot;
            continue;
        }
        gen.at(col, k) = Rational(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) gen.at(pivots[i], k) = -work.at(i, col);
        ++k;
    }
    return Subspace(n, gen);
}

/// Column span of f as a canonical subspace of the codomain.
inline Subspace image_basis(const LinearMap& f) {
    return Subspace(f.rows(), f);
}

inline void require_same_ambient(const Subspace& a, const Subspace& b, const char* op) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument(std::string(op) + ": ambient dimension mismatch");
}

inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b, "subspace_sum");
    return Subspace(a.ambient_dim(), hstack(a.basis(), b.basis()));
}

/// Intersection via the kernel of [basis_a | -basis_b]: a kernel vector
/// (x; y) satisfies basis_a*x = basis_b*y, and those common values are
/// exactly the intersection. The first-block coordinates are pushed
/// through basis_a.
inline Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b, "subspace_intersection");
    Subspace pair_kernel = kernel_basis(hstack(a.basis(), -b.basis()));
    Matrix x_coords = pair_kernel.basis().row_block(0, a.dim());
    return Subspace(a.ambient_dim(), a.basis() * x_coords);
}

inline bool is_direct_sum(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b, "is_direct_sum");
    return a.dim() + b.dim() == a.ambient_dim() && subspace_intersection(a, b).dim() == 0;
}

/// True iff t is contained in s, decided by solvability of
/// s.basis * X = t.basis.
inline bool contains(const Subspace& s, const Subspace& t) {
    require_same_ambient(s, t, "contains");
    return try_solve(s.basis(), t.basis()).has_value();
}

/// The projection V = a (+) b -> a, written in the coordinates of a's
/// canonical basis: solve [basis_a | basis_b] * X = I and keep the top
/// dim(a) rows. Satisfies p * basis_a = I and p * basis_b = 0.
inline LinearMap projection_along(const Subspace& a, const Subspace& b) {
    if (!is_direct_sum(a, b))
        throw std::invalid_argument("projection_along: subspaces are not a direct sum");
    Matrix change = inverse(hstack(a.basis(), b.basis()));
    return change.row_block(0, a.dim());
}

/// Rewrites f, whose image must lie in s, as a map into s's coordinates:
/// the unique g with s.basis * g = f.
inline LinearMap coordinates_in(const Subspace& s, const LinearMap& f) {
    if (f.rows() != s.ambient_dim())
        throw std::invalid_argument("coordinates_in: codomain does not match ambient space");
    auto g = try_solve(s.basis(), f);
    if (!g) throw std::invalid_argument("coordinates_in: image not contained in subspace");
    return *g;
}

}  // namespace equicat
