#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "equicat/genrand.hpp"

using namespace equicat;

TEST_CASE("identical seeds give identical streams") {
    Rng a(123), b(123);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());

    GenConfig cfg;
    cfg.seed = 7;
    Rng r1 = make_rng(cfg), r2 = make_rng(cfg);
    for (int i = 0; i < 20; ++i) {
        CHECK(random_c_object(r1, cfg) == random_c_object(r2, cfg));
        CHECK(random_a2_object(r1, cfg) == random_a2_object(r2, cfg));
    }
}

TEST_CASE("different seeds diverge") {
    Rng a(1), b(2);
    bool differ = false;
    for (int i = 0; i < 10; ++i) differ = differ || a.next() != b.next();
    CHECK(differ);
}

TEST_CASE("substreams are reproducible and pairwise distinct") {
    CHECK(Rng::substream(42, 0).next() == Rng::substream(42, 0).next());
    std::set<std::uint64_t> firsts;
    for (std::uint64_t i = 0; i < 100; ++i) firsts.insert(Rng::substream(42, i).next());
    CHECK(firsts.size() == 100);
}

TEST_CASE("bounded draws") {
    Rng rng(99);
    for (int i = 0; i < 1000; ++i) {
        auto v = rng.below(7);
        CHECK(v < 7);
        long x = rng.int_in(-3, 3);
        CHECK(x >= -3);
        CHECK(x <= 3);
    }
    CHECK(rng.below(1) == 0);
    CHECK_THROWS_AS(rng.below(0), std::invalid_argument);
}

TEST_CASE("random_invertible is unimodular") {
    GenConfig cfg;
    Rng rng(5);
    for (std::size_t n = 0; n <= 6; ++n) {
        Matrix m = random_invertible(n, rng, cfg);
        CHECK(m.rows() == n);
        CHECK(det(m) == Rational(1));
    }
}

TEST_CASE("generated objects always validate") {
    GenConfig cfg;
    Rng rng(2024);
    for (int i = 0; i < 200; ++i) {
        CObject x = random_c_object(rng, cfg);
        CHECK(x.ambient <= cfg.max_ambient_dim);
        REQUIRE(validate_c_object(x).empty());
    }
    for (int i = 0; i < 200; ++i) REQUIRE(validate_a2_object(random_a2_object(rng, cfg)).empty());
}

TEST_CASE("generated morphisms always validate") {
    GenConfig cfg;
    Rng rng(777);
    for (int i = 0; i < 100; ++i) REQUIRE(validate_c_morphism(random_c_morphism(rng, cfg)).empty());
    for (int i = 0; i < 100; ++i)
        REQUIRE(validate_a2_morphism(random_a2_morphism(rng, cfg)).empty());
}

TEST_CASE("composable pairs compose") {
    GenConfig cfg;
    Rng rng(31);
    for (int i = 0; i < 100; ++i) {
        auto [f, g] = random_composable_c_pair(rng, cfg);
        CHECK(f.target == g.source);
        CHECK(validate_c_morphism(compose(g, f)).empty());
    }
    for (int i = 0; i < 100; ++i) {
        auto [f, g] = random_composable_a2_pair(rng, cfg);
        CHECK(f.target == g.source);
        CHECK(validate_a2_morphism(compose(g, f)).empty());
    }
}

TEST_CASE("the generator covers every ambient dimension and split") {
    GenConfig cfg;
    Rng rng(42);
    std::set<std::size_t> dims;
    std::set<std::size_t> splits;  // dim(A1) across draws
    for (int i = 0; i < 500; ++i) {
        CObject x = random_c_object(rng, cfg);
        dims.insert(x.ambient);
        splits.insert(x.a1.dim());
    }
    for (std::size_t k = 0; k <= 6; ++k) {
        CHECK(dims.count(k) == 1);
        CHECK(splits.count(k) == 1);
    }
}

TEST_CASE("config knobs are respected") {
    GenConfig small;
    small.max_ambient_dim = 2;
    Rng rng(8);
    for (int i = 0; i < 50; ++i) CHECK(random_c_object(rng, small).ambient <= 2);

    GenConfig zero_retry;
    zero_retry.retry_limit = 0;
    Rng r2(1);
    CHECK_THROWS_AS(random_c_object(r2, zero_retry), std::invalid_argument);

    // entry_bound = 0 forces the aligned case A2 = A1, B2 = B1.
    GenConfig aligned;
    aligned.entry_bound = 0;
    Rng r3(12);
    for (int i = 0; i < 30; ++i) {
        CObject x = random_c_object(r3, aligned);
        CHECK(x.a2 == x.a1);
        CHECK(x.b2 == x.b1);
    }
}
