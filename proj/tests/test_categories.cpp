#include <catch2/catch_amalgamated.hpp>

#include "equicat/categories.hpp"
#include "fixtures.hpp"

using namespace equicat;
using equicat::testing::aligned_3d;
using equicat::testing::q;
using equicat::testing::worked_plane;
using equicat::testing::worked_plane_triple;

namespace {
bool mentions(const Violations& v, const std::string& where) {
    for (const auto& viol : v)
        if (viol.where == where) return true;
    return false;
}
}  // namespace

TEST_CASE("valid quadruple objects") {
    CHECK(validate_c_object(worked_plane()).empty());
    CHECK(validate_c_object(aligned_3d()).empty());
    CHECK(validate_c_object(CObject::zero()).empty());
}

TEST_CASE("quadruple violations are reported per pair") {
    CObject x = worked_plane();
    x.b2 = x.a2;  // now A2 and B2 coincide
    Violations v = validate_c_object(x);
    CHECK(mentions(v, "a2+b2"));
    CHECK_FALSE(mentions(v, "a1+b1"));
    CHECK(v.front().what.find("intersection nonzero") != std::string::npos);

    CObject shorty = worked_plane();
    shorty.a1 = Subspace(2);  // dims 0 + 1 < 2 on both a1 pairs
    Violations w = validate_c_object(shorty);
    CHECK(mentions(w, "a1+b1"));
    CHECK(mentions(w, "a1+b2"));
    CHECK(w.front().what.find("dimensions short") != std::string::npos);

    CObject mismatched = worked_plane();
    mismatched.a1 = Subspace(3);
    Violations m = validate_c_object(mismatched);
    REQUIRE_FALSE(m.empty());
    CHECK(mentions(m, "a1"));
}

TEST_CASE("morphism validation") {
    CObject x = worked_plane();
    CHECK(validate_c_morphism(identity_c(x)).empty());

    // The zero map is always a morphism.
    CHECK(validate_c_morphism({x, aligned_3d(), Matrix(3, 2)}).empty());

    // Scalar maps preserve every subspace.
    CHECK(validate_c_morphism({x, x, q(-7) * Matrix::identity(2)}).empty());

    // A rotation moves A1 off itself.
    Matrix rot{{q(0), q(-1)}, {q(1), q(0)}};
    Violations v = validate_c_morphism({x, x, rot});
    CHECK(mentions(v, "a1"));

    // Shape mismatch is flagged before containment.
    Violations w = validate_c_morphism({x, x, Matrix(3, 2)});
    REQUIRE(w.size() == 1);
    CHECK(w.front().where == "map");

    // Violations inside endpoint objects are prefixed.
    CObject bad = x;
    bad.b2 = bad.a2;
    Violations inner = validate_c_morphism({bad, x, Matrix::identity(2)});
    CHECK(mentions(inner, "source.a2+b2"));
}

TEST_CASE("valid triple objects") {
    CHECK(validate_a2_object(worked_plane_triple()).empty());

    // Zero-dimensional corner: everything empty.
    A2Object empty{Matrix(0, 0), Matrix(0, 0), Matrix(0, 0), Matrix(0, 0)};
    CHECK(validate_a2_object(empty).empty());

    // E- = E+ = 0 with E0 nontrivial: cross composites are empty products.
    A2Object only_middle{Matrix(2, 0), Matrix(0, 2), Matrix(2, 0), Matrix(0, 2)};
    CHECK(validate_a2_object(only_middle).empty());
}

TEST_CASE("triple violations") {
    A2Object e = worked_plane_triple();
    e.gamma_minus = q(2) * e.gamma_minus;
    Violations v = validate_a2_object(e);
    CHECK(mentions(v, "gamma_minus.delta_minus"));

    A2Object cross = worked_plane_triple();
    cross.delta_plus = Matrix{{q(1)}, {q(0)}};  // now delta_plus = delta_minus
    // gamma_plus . delta_plus = [1/2] stays invertible, but the identity
    // condition fails.
    Violations w = validate_a2_object(cross);
    CHECK(mentions(w, "gamma_plus.delta_plus"));

    // Cross composite gamma_minus . delta_plus lands on zero: invertibility
    // violation.
    A2Object degenerate{Matrix{{q(1)}, {q(0)}}, Matrix{{q(1), q(0)}},
                        Matrix{{q(0)}, {q(1)}}, Matrix{{q(0), q(1)}}};
    Violations d = validate_a2_object(degenerate);
    CHECK(mentions(d, "gamma_minus.delta_plus"));
    CHECK(mentions(d, "gamma_plus.delta_minus"));

    A2Object misshaped = worked_plane_triple();
    misshaped.gamma_plus = Matrix(3, 3);
    CHECK(mentions(validate_a2_object(misshaped), "gamma_plus"));
}

TEST_CASE("triple morphism validation") {
    A2Object e = worked_plane_triple();
    CHECK(validate_a2_morphism(identity_a2(e)).empty());

    // Breaking one component breaks exactly the squares it sits in.
    A2Morphism f = identity_a2(e);
    f.e_zero = q(2) * f.e_zero;
    Violations v = validate_a2_morphism(f);
    CHECK(mentions(v, "square eta_minus"));
    CHECK(mentions(v, "square xi_plus"));

    A2Morphism shape = identity_a2(e);
    shape.e_minus = Matrix(2, 2);
    Violations w = validate_a2_morphism(shape);
    CHECK(mentions(w, "e_minus"));
}

TEST_CASE("pair objects") {
    // u = v = [1]: 1 - uv = 0, not invertible.
    CHECK(mentions(validate_a1_object({Matrix{{q(1)}}, Matrix{{q(1)}}}), "1-uv"));
    // u = [1], v = [2]: 1 - uv = -1, fine.
    CHECK(validate_a1_object({Matrix{{q(1)}}, Matrix{{q(2)}}}).empty());
    // Zero maps of any compatible shape are fine.
    CHECK(validate_a1_object({Matrix(2, 3), Matrix(3, 2)}).empty());
    // Incomposable shapes.
    CHECK(mentions(validate_a1_object({Matrix(2, 3), Matrix(2, 3)}), "v"));
    // Empty spaces: 1 - uv is the empty matrix, invertible vacuously.
    CHECK(validate_a1_object({Matrix(0, 0), Matrix(0, 0)}).empty());
}

TEST_CASE("composition and identities") {
    CObject x = worked_plane();
    CMorphism two{x, x, q(2) * Matrix::identity(2)};
    CMorphism three{x, x, q(3) * Matrix::identity(2)};
    CHECK(compose(two, three).map == q(6) * Matrix::identity(2));
    CHECK(compose(two, identity_c(x)) == two);
    CHECK(compose(identity_c(x), two) == two);
    CHECK_THROWS_AS(compose(two, CMorphism{x, aligned_3d(), Matrix(3, 2)}),
                    std::invalid_argument);

    A2Object e = worked_plane_triple();
    A2Morphism s{e, e, q(2) * Matrix::identity(1), q(2) * Matrix::identity(2),
                 q(2) * Matrix::identity(1)};
    CHECK(compose(s, identity_a2(e)) == s);
    CHECK(compose(identity_a2(e), s) == s);
}

TEST_CASE("direct sums produce valid objects and morphisms") {
    CDirectSum ds = direct_sum_c(worked_plane(), aligned_3d());
    CHECK(ds.object.ambient == 5);
    CHECK(validate_c_object(ds.object).empty());
    CHECK(validate_c_morphism(ds.include_left).empty());
    CHECK(validate_c_morphism(ds.include_right).empty());
    CHECK(validate_c_morphism(ds.project_left).empty());
    CHECK(validate_c_morphism(ds.project_right).empty());
    // Projection retracts the inclusion.
    CHECK(compose(ds.project_left, ds.include_left) == identity_c(worked_plane()));

    A2DirectSum da = direct_sum_a2(worked_plane_triple(), worked_plane_triple());
    CHECK(da.object.n_zero() == 4);
    CHECK(validate_a2_object(da.object).empty());
    CHECK(validate_a2_morphism(da.include_left).empty());
    CHECK(validate_a2_morphism(da.include_right).empty());
    CHECK(validate_a2_morphism(da.project_left).empty());
    CHECK(validate_a2_morphism(da.project_right).empty());
    CHECK(compose(da.project_right, da.include_right) == identity_a2(worked_plane_triple()));

    // Summing with the zero object changes nothing up to the evident data.
    CDirectSum zs = direct_sum_c(worked_plane(), CObject::zero());
    CHECK(zs.object == worked_plane());
}
