// The two functors between the subspace-quadruple category and the triple
// category, the natural isomorphism witnessing that their composite is
// isomorphic to the identity, and certification helpers that machine-check
// those facts on concrete data.
//
// S sends (V, A1, A2, B1, B2) to the triple (A1, V, A2): the abstract
// spaces E-, E+ are realized as coordinate spaces on the canonical bases of
// A1 and A2, so delta_- and delta_+ are literally the basis matrices and
// gamma_-, gamma_+ the projections along B1, B2. T sends a triple to
// (E0, im delta_-, im delta_+, ker gamma_-, ker gamma_+). With canonical
// subspace bases this makes T(S(x)) = x hold on the nose as data equality,
// not merely up to isomorphism.
//
// Certification never throws on a failed check: every fact being certified
// is reported through a NaturalityCertificate so batch runs can keep going.
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>

#include "equicat/categories.hpp"
#include "equicat/matrix.hpp"
#include "equicat/subspace.hpp"

namespace equicat {

namespace detail {

template <typename Validator, typename Candidate>
void require_valid(const char* who, Validator validate, const Candidate& c) {
    Violations v = validate(c);
    if (!v.empty())
        throw std::invalid_argument(std::string(who) + ": invalid input: " + v.front().str());
}

}  // namespace detail

// ---------------------------------------------------------------------------
// The functor S

inline A2Object s_on_object(const CObject& x) {
    detail::require_valid("s_on_object", validate_c_object, x);
    return {x.a1.basis(), projection_along(x.a1, x.b1),
            x.a2.basis(), projection_along(x.a2, x.b2)};
}

inline A2Morphism s_on_morphism(const CMorphism& f) {
    detail::require_valid("s_on_morphism", validate_c_morphism, f);
    // Components (phi restricted to A1, phi, phi restricted to A2), the
    // restrictions written in the canonical coordinates of the target
    // subspaces.
    return {s_on_object(f.source), s_on_object(f.target),
            coordinates_in(f.target.a1, f.map * f.source.a1.basis()),
            f.map,
            coordinates_in(f.target.a2, f.map * f.source.a2.basis())};
}

// ---------------------------------------------------------------------------
// The functor T

inline CObject t_on_object(const A2Object& e) {
    detail::require_valid("t_on_object", validate_a2_object, e);
    return {e.n_zero(),
            image_basis(e.delta_minus), image_basis(e.delta_plus),
            kernel_basis(e.gamma_minus), kernel_basis(e.gamma_plus)};
}

inline CMorphism t_on_morphism(const A2Morphism& f) {
    detail::require_valid("t_on_morphism", validate_a2_morphism, f);
    return {t_on_object(f.source), t_on_object(f.target), f.e_zero};
}

// ---------------------------------------------------------------------------
// The natural isomorphism Id -> ST and its inverse

/// Component of M at e: the triple (delta_-, 1, delta_+) with the outer
/// maps rewritten in the canonical coordinates of their images.
inline A2Morphism nat_iso_M(const A2Object& e) {
    detail::require_valid("nat_iso_M", validate_a2_object, e);
    A2Object st = s_on_object(t_on_object(e));
    return {e, st,
            coordinates_in(image_basis(e.delta_minus), e.delta_minus),
            Matrix::identity(e.n_zero()),
            coordinates_in(image_basis(e.delta_plus), e.delta_plus)};
}

/// Component of the inverse at e: (gamma_-, 1, gamma_+) restricted to the
/// image subspaces, i.e. precomposed with their canonical bases.
inline A2Morphism nat_iso_M_inv(const A2Object& e) {
    detail::require_valid("nat_iso_M_inv", validate_a2_object, e);
    A2Object st = s_on_object(t_on_object(e));
    return {st, e,
            e.gamma_minus * image_basis(e.delta_minus).basis(),
            Matrix::identity(e.n_zero()),
            e.gamma_plus * image_basis(e.delta_plus).basis()};
}

// ---------------------------------------------------------------------------
// Certification

struct NaturalityCertificate {
    Violations object_violations;
    Violations morphism_violations;

    bool certified() const { return object_violations.empty() && morphism_violations.empty(); }

    Violations all() const {
        Violations v = object_violations;
        v.insert(v.end(), morphism_violations.begin(), morphism_violations.end());
        return v;
    }
};

/// Checks that T(S(x)) is x as literal data, and that T(S(f)) = f for each
/// supplied morphism.
inline NaturalityCertificate certify_ts_identity(const CObject& x,
                                                 std::span<const CMorphism> morphisms = {}) {
    NaturalityCertificate cert;
    if (Violations v = validate_c_object(x); !v.empty()) {
        for (auto& viol : v) cert.object_violations.push_back({"input." + viol.where, viol.what});
        return cert;
    }
    if (!(t_on_object(s_on_object(x)) == x))
        cert.object_violations.push_back({"ts-object", "T(S(x)) differs from x"});
    for (std::size_t i = 0; i < morphisms.size(); ++i) {
        const CMorphism& f = morphisms[i];
        std::string where = "ts-morphism[" + std::to_string(i) + "]";
        if (Violations v = validate_c_morphism(f); !v.empty()) {
            cert.morphism_violations.push_back({where, "input invalid: " + v.front().str()});
            continue;
        }
        if (!(t_on_morphism(s_on_morphism(f)) == f))
            cert.morphism_violations.push_back({where, "T(S(f)) differs from f"});
    }
    return cert;
}

/// Checks that M(e) and its inverse are valid morphisms and compose to
/// identities in both orders.
inline NaturalityCertificate certify_st_isomorphism(const A2Object& e) {
    NaturalityCertificate cert;
    if (Violations v = validate_a2_object(e); !v.empty()) {
        for (auto& viol : v) cert.object_violations.push_back({"input." + viol.where, viol.what});
        return cert;
    }
    A2Morphism m = nat_iso_M(e);
    A2Morphism m_inv = nat_iso_M_inv(e);
    for (auto& viol : validate_a2_morphism(m))
        cert.object_violations.push_back({"M." + viol.where, viol.what});
    for (auto& viol : validate_a2_morphism(m_inv))
        cert.object_violations.push_back({"M_inv." + viol.where, viol.what});
    if (!(compose(m_inv, m) == identity_a2(e)))
        cert.object_violations.push_back({"M_inv.M", "composite is not the identity on e"});
    if (!(compose(m, m_inv) == identity_a2(m.target)))
        cert.object_violations.push_back({"M.M_inv", "composite is not the identity on ST(e)"});
    return cert;
}

/// Checks the naturality square for f: ST(f) . M(source) = M(target) . f,
/// componentwise and exactly.
inline NaturalityCertificate certify_naturality(const A2Morphism& f) {
    NaturalityCertificate cert;
    if (Violations v = validate_a2_morphism(f); !v.empty()) {
        for (auto& viol : v) cert.morphism_violations.push_back({"input." + viol.where, viol.what});
        return cert;
    }
    A2Morphism left = compose(s_on_morphism(t_on_morphism(f)), nat_iso_M(f.source));
    A2Morphism right = compose(nat_iso_M(f.target), f);
    if (left.e_minus != right.e_minus)
        cert.morphism_violations.push_back({"naturality.e_minus", "square does not commute"});
    if (left.e_zero != right.e_zero)
        cert.morphism_violations.push_back({"naturality.e_zero", "square does not commute"});
    if (left.e_plus != right.e_plus)
        cert.morphism_violations.push_back({"naturality.e_plus", "square does not commute"});
    return cert;
}

/// Checks the functor laws on composable pairs, given as (f, g) with g
/// applied after f: S and T preserve composition and identities exactly.
inline NaturalityCertificate certify_functoriality(
    std::span<const std::pair<CMorphism, CMorphism>> c_pairs,
    std::span<const std::pair<A2Morphism, A2Morphism>> a2_pairs = {}) {
    NaturalityCertificate cert;
    for (std::size_t i = 0; i < c_pairs.size(); ++i) {
        const auto& [f, g] = c_pairs[i];
        std::string where = "S[" + std::to_string(i) + "]";
        if (!(f.target == g.source)) {
            cert.morphism_violations.push_back({where, "pair is not composable"});
            continue;
        }
        if (Violations v = validate_c_morphism(f); !v.empty()) {
            cert.morphism_violations.push_back({where, "f invalid: " + v.front().str()});
            continue;
        }
        if (Violations v = validate_c_morphism(g); !v.empty()) {
            cert.morphism_violations.push_back({where, "g invalid: " + v.front().str()});
            continue;
        }
        if (!(s_on_morphism(compose(g, f)) == compose(s_on_morphism(g), s_on_morphism(f))))
            cert.morphism_violations.push_back({where, "S(g.f) differs from S(g).S(f)"});
        if (!(s_on_morphism(identity_c(f.source)) == identity_a2(s_on_object(f.source))))
            cert.morphism_violations.push_back({where, "S(id) differs from id"});
    }
    for (std::size_t i = 0; i < a2_pairs.size(); ++i) {
        const auto& [f, g] = a2_pairs[i];
        std::string where = "T[" + std::to_string(i) + "]";
        if (!(f.target == g.source)) {
            cert.morphism_violations.push_back({where, "pair is not composable"});
            continue;
        }
        if (Violations v = validate_a2_morphism(f); !v.empty()) {
            cert.morphism_violations.push_back({where, "f invalid: " + v.front().str()});
            continue;
        }
        if (Violations v = validate_a2_morphism(g); !v.empty()) {
            cert.morphism_violations.push_back({where, "g invalid: " + v.front().str()});
            continue;
        }
        if (!(t_on_morphism(compose(g, f)) == compose(t_on_morphism(g), t_on_morphism(f))))
            cert.morphism_violations.push_back({where, "T(g.f) differs from T(g).T(f)"});
        if (!(t_on_morphism(identity_a2(f.source)) == identity_c(t_on_object(f.source))))
            cert.morphism_violations.push_back({where, "T(id) differs from id"});
    }
    return cert;
}

}  // namespace equicat
