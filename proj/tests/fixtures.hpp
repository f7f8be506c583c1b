// Shared hand-computed fixtures for the test suite.
#pragma once

#include "equicat/categories.hpp"
#include "equicat/matrix.hpp"
#include "equicat/subspace.hpp"

namespace equicat::testing {

inline Rational q(long n, long d = 1) { return Rational(n, d); }

/// The plane with A1 the x-axis, A2 the diagonal, B1 the y-axis, B2 the
/// antidiagonal. Every pairwise A/B sum is direct; the two splittings are
/// in general position.
inline CObject worked_plane() {
    return {2,
            Subspace(2, Matrix{{q(1)}, {q(0)}}),
            Subspace(2, Matrix{{q(1)}, {q(1)}}),
            Subspace(2, Matrix{{q(0)}, {q(1)}}),
            Subspace(2, Matrix{{q(1)}, {q(-1)}})};
}

/// The triple the worked plane maps to: inclusions of the two lines with
/// the projections along the complementary B's.
inline A2Object worked_plane_triple() {
    return {Matrix{{q(1)}, {q(0)}},      // delta_minus
            Matrix{{q(1), q(0)}},        // gamma_minus
            Matrix{{q(1)}, {q(1)}},      // delta_plus
            Matrix{{q(1, 2), q(1, 2)}}}; // gamma_plus
}

/// An aligned object (A2 = A1, B2 = B1) in dimension 3.
inline CObject aligned_3d() {
    Matrix a{{q(1), q(0)}, {q(0), q(1)}, {q(0), q(0)}};
    Matrix b{{q(0)}, {q(0)}, {q(1)}};
    return {3, Subspace(3, a), Subspace(3, a), Subspace(3, b), Subspace(3, b)};
}

}  // namespace equicat::testing
