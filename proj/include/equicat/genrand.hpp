// Seeded generation of valid objects and morphisms for property testing.
//
// The generator is built on splitmix64, a 64-bit mixing PRNG defined by
// fixed constants (Steele, Lea, Flood, "Fast splittable pseudorandom number
// generators"), so identical seeds produce bit-identical streams on every
// platform. No OS entropy is ever read.
//
// Validity is structural, not statistical: objects are assembled so that
// the defining conditions hold by construction, except for one direct-sum
// condition in the quadruple case which is rejection-sampled (see
// random_c_object). Every emitted value passes its validator.
#pragma once

#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <utility>

#include "equicat/categories.hpp"
#include "equicat/functors.hpp"
#include "equicat/matrix.hpp"

namespace equicat {

struct GenConfig {
    std::uint64_t seed = 0;
    std::size_t max_ambient_dim = 6;
    long entry_bound = 3;
    std::size_t retry_limit = 64;
};

/// Thrown when rejection sampling exceeds the configured retry limit,
/// which signals an improbably degenerate streak; the caller reseeds.
struct RetryLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    /// Independent stream for sample `index` of a run seeded with `seed`;
    /// lets batch runs evaluate samples in any order or in parallel while
    /// staying reproducible.
    static Rng substream(std::uint64_t seed, std::uint64_t index) {
        return Rng(mix64(seed ^ mix64(index + 1)));
    }

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform-ish value in [0, n). The modulo bias is irrelevant at the
    /// tiny ranges used here and keeps the stream platform-independent.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("Rng::below: empty range");
        return next() % n;
    }

    long int_in(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

inline Rng make_rng(const GenConfig& cfg) { return Rng(cfg.seed); }

inline Matrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng, long bound) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = Rational(rng.int_in(-bound, bound));
    return m;
}

/// Invertible n x n map, built as a product U * L of a unit upper- and a
/// unit lower-triangular matrix with bounded random entries. Determinant 1
/// by construction, so no rejection is needed.
inline LinearMap random_invertible(std::size_t n, Rng& rng, const GenConfig& cfg) {
    Matrix upper = Matrix::identity(n);
    Matrix lower = Matrix::identity(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r + 1; c < n; ++c) {
            upper.at(r, c) = Rational(rng.int_in(-cfg.entry_bound, cfg.entry_bound));
            lower.at(c, r) = Rational(rng.int_in(-cfg.entry_bound, cfg.entry_bound));
        }
    return upper * lower;
}

/// Valid quadruple object. A1 and B1 split the columns of a random
/// invertible matrix, so A1 (+) B1 = V by construction. A2 is the graph
/// {a + R a} of a random map R: A1 -> B1, which is automatically a
/// complement of B1, and B2 the graph of a random S: B1 -> A1, a
/// complement of A1. Only A2 (+) B2 = V can fail, and that is rejection
/// sampled by redrawing R and S.
inline CObject random_c_object(Rng& rng, const GenConfig& cfg) {
    if (cfg.retry_limit == 0) throw std::invalid_argument("GenConfig: retry_limit must be >= 1");
    std::size_t n = rng.below(cfg.max_ambient_dim + 1);
    std::size_t k = rng.below(n + 1);
    Matrix m = random_invertible(n, rng, cfg);
    Matrix a1_cols = m.columns(0, k);
    Matrix b1_cols = m.columns(k, n - k);
    for (std::size_t attempt = 0; attempt < cfg.retry_limit; ++attempt) {
        Matrix graph_r = random_matrix(n - k, k, rng, cfg.entry_bound);
        Matrix graph_s = random_matrix(k, n - k, rng, cfg.entry_bound);
        Matrix a2_cols = m * vstack(Matrix::identity(k), graph_r);
        Matrix b2_cols = m * vstack(graph_s, Matrix::identity(n - k));
        if (rank(hstack(a2_cols, b2_cols)) == n)
            return {n, Subspace(n, a1_cols), Subspace(n, a2_cols),
                    Subspace(n, b1_cols), Subspace(n, b2_cols)};
    }
    throw RetryLimitError("random_c_object: retry limit exceeded");
}

/// Valid triple object: the image of a random quadruple under S, conjugated
/// by random invertible changes of basis on each of the three spaces. The
/// conjugation preserves all four defining conditions and moves the object
/// off the literal image of S.
inline A2Object random_a2_object(Rng& rng, const GenConfig& cfg) {
    A2Object e = s_on_object(random_c_object(rng, cfg));
    Matrix q_minus = random_invertible(e.n_minus(), rng, cfg);
    Matrix q_zero = random_invertible(e.n_zero(), rng, cfg);
    Matrix q_plus = random_invertible(e.n_plus(), rng, cfg);
    return {q_zero * e.delta_minus * inverse(q_minus),
            q_minus * e.gamma_minus * inverse(q_zero),
            q_zero * e.delta_plus * inverse(q_plus),
            q_plus * e.gamma_plus * inverse(q_zero)};
}

// Morphism generation avoids solving simultaneous containment constraints
// (infeasible by blind sampling); every branch is correct by construction.
// The branch mix is fixed: of 8 equally weighted tickets,
//   0-1 scalar multiple of an identity,
//   2-3 direct-sum inclusion,
//   4-5 direct-sum projection,
//   6   composite of two nested inclusions,
//   7   composite scalar . inclusion.
inline CMorphism random_c_morphism(Rng& rng, const GenConfig& cfg) {
    std::uint64_t ticket = rng.below(8);
    if (ticket < 2) {
        CObject x = random_c_object(rng, cfg);
        Rational c(rng.int_in(-cfg.entry_bound, cfg.entry_bound));
        return {x, x, c * Matrix::identity(x.ambient)};
    }
    CObject x = random_c_object(rng, cfg);
    CObject y = random_c_object(rng, cfg);
    CDirectSum ds = direct_sum_c(x, y);
    bool left = rng.below(2) == 0;
    if (ticket < 4) return left ? ds.include_left : ds.include_right;
    if (ticket < 6) return left ? ds.project_left : ds.project_right;
    if (ticket == 6) {
        CObject z = random_c_object(rng, cfg);
        CDirectSum outer = direct_sum_c(ds.object, z);
        return compose(outer.include_left, ds.include_left);
    }
    Rational c(rng.int_in(-cfg.entry_bound, cfg.entry_bound));
    CMorphism scale{ds.object, ds.object, c * Matrix::identity(ds.object.ambient)};
    return compose(scale, ds.include_left);
}

// Same ticket scheme as random_c_morphism, except tickets 2-3 draw the
// image of a random quadruple morphism under S.
inline A2Morphism random_a2_morphism(Rng& rng, const GenConfig& cfg) {
    std::uint64_t ticket = rng.below(8);
    if (ticket < 2) {
        A2Object e = random_a2_object(rng, cfg);
        Rational c(rng.int_in(-cfg.entry_bound, cfg.entry_bound));
        return {e, e, c * Matrix::identity(e.n_minus()), c * Matrix::identity(e.n_zero()),
                c * Matrix::identity(e.n_plus())};
    }
    if (ticket < 4) return s_on_morphism(random_c_morphism(rng, cfg));
    A2Object x = random_a2_object(rng, cfg);
    A2Object y = random_a2_object(rng, cfg);
    A2DirectSum ds = direct_sum_a2(x, y);
    bool left = rng.below(2) == 0;
    if (ticket < 6) return left ? ds.include_left : ds.include_right;
    if (ticket == 6) return left ? ds.project_left : ds.project_right;
    Rational c(rng.int_in(-cfg.entry_bound, cfg.entry_bound));
    A2Morphism scale{ds.object, ds.object, c * Matrix::identity(ds.object.n_minus()),
                     c * Matrix::identity(ds.object.n_zero()),
                     c * Matrix::identity(ds.object.n_plus())};
    return compose(scale, ds.include_left);
}

/// Composable pair (f, g) with g applied after f, for functor-law checks.
inline std::pair<CMorphism, CMorphism> random_composable_c_pair(Rng& rng, const GenConfig& cfg) {
    std::uint64_t ticket = rng.below(4);
    if (ticket == 0) {
        CObject x = random_c_object(rng, cfg);
        Rational c1(rng.int_in(-cfg.entry_bound, cfg.entry_bound));
        Rational c2(rng.int_in(-cfg.entry_bound, cfg.entry_bound));
        CMorphism f{x, x, c1 * Matrix::identity(x.ambient)};
        CMorphism g{x, x, c2 * Matrix::identity(x.ambient)};
        return {f, g};
    }
    CObject x = random_c_object(rng, cfg);
    CObject y = random_c_object(rng, cfg);
    CDirectSum inner = direct_sum_c(x, y);
    if (ticket == 1) {
        CObject z = random_c_object(rng, cfg);
        CDirectSum outer = direct_sum_c(inner.object, z);
        return {inner.include_left, outer.include_left};
    }
    if (ticket == 2) return {inner.include_left, inner.project_left};
    Rational c(rng.int_in(-cfg.entry_bound, cfg.entry_bound));
    CMorphism scale{x, x, c * Matrix::identity(x.ambient)};
    return {scale, inner.include_left};
}

inline std::pair<A2Morphism, A2Morphism> random_composable_a2_pair(Rng& rng,
                                                                   const GenConfig& cfg) {
    std::uint64_t ticket = rng.below(4);
    if (ticket == 0) {
        auto [f, g] = random_composable_c_pair(rng, cfg);
        return {s_on_morphism(f), s_on_morphism(g)};
    }
    if (ticket == 1) {
        A2Object e = random_a2_object(rng, cfg);
        Rational c1(rng.int_in(-cfg.entry_bound, cfg.entry_bound));
        Rational c2(rng.int_in(-cfg.entry_bound, cfg.entry_bound));
        A2Morphism f{e, e, c1 * Matrix::identity(e.n_minus()), c1 * Matrix::identity(e.n_zero()),
                     c1 * Matrix::identity(e.n_plus())};
        A2Morphism g{e, e, c2 * Matrix::identity(e.n_minus()), c2 * Matrix::identity(e.n_zero()),
                     c2 * Matrix::identity(e.n_plus())};
        return {f, g};
    }
    A2Object x = random_a2_object(rng, cfg);
    A2Object y = random_a2_object(rng, cfg);
    A2DirectSum ds = direct_sum_a2(x, y);
    if (ticket == 2) return {ds.include_left, ds.project_left};
    Rational c(rng.int_in(-cfg.entry_bound, cfg.entry_bound));
    A2Morphism scale{x, x, c * Matrix::identity(x.n_minus()), c * Matrix::identity(x.n_zero()),
                     c * Matrix::identity(x.n_plus())};
    return {scale, ds.include_left};
}

}  // namespace equicat
