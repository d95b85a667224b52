#include <doctest.h>

#include "ncx/random.hpp"

using namespace ncx;

TEST_CASE("hom spaces between small mu blocks") {
    const Field q = Field::rationals();
    // k in degree 0 into k -> k in degrees 0,1: f^0 must land in ker d = 0
    CHECK(chainmap_space_dim(mu(3, 1, 0, 1, q), mu(3, 2, 1, 1, q)) == 0);
    // k in degree 1 into k -> k in degrees 0,1: f^1 is free
    CHECK(chainmap_space_dim(mu(3, 1, 1, 1, q), mu(3, 2, 1, 1, q)) == 1);
    // k -> k in degrees 0,1 onto k in degree 0: f^0 free, f^1 = 0
    CHECK(chainmap_space_dim(mu(3, 2, 1, 1, q), mu(3, 1, 0, 1, q)) == 1);
    for (int N = 2; N <= 5; ++N) {
        for (int r = 1; r <= N; ++r) {
            CHECK(chainmap_space_dim(mu(N, r, 0, 1, q), mu(N, r, 0, 1, q)) == 1);
            CHECK(chainmap_space_dim(mu(N, r, 0, 2, q), mu(N, r, 0, 1, q)) == 2);
        }
    }
}

TEST_CASE("mu_N is contractible and mu_r is not for r < N") {
    for (const Field& field : {Field::rationals(), Field::prime(5)}) {
        for (int N = 2; N <= 5; ++N) {
            NComplex p = mu(N, N, 1, 2, field);
            auto s = null_homotopy_witness(ChainMap::identity(p));
            REQUIRE(s.has_value());
            CHECK(apply_homotopy(p, p, *s) == ChainMap::identity(p));
            CHECK(homK_dim(p, p) == 0);
            for (int r = 1; r < N; ++r) {
                CHECK_FALSE(is_contractible(mu(N, r, 1, 1, field)));
                CHECK(homK_dim(mu(N, r, 1, 1, field), mu(N, r, 1, 1, field)) == 1);
            }
        }
    }
}

TEST_CASE("classical case: the homotopy operator is ds + sd") {
    const Field q = Field::rationals();
    NComplex x = mu(2, 2, 1, 1, q);
    HomotopyWitness s;
    s.min_degree = 1;
    s.maps = {Matrix::from_ints(q, 1, 1, {1})};  // s^1 : X^1 -> X^0
    ChainMap h = apply_homotopy(x, x, s);
    CHECK(h == ChainMap::identity(x));
}

TEST_CASE("stopping the homotopy sum one term early loses contractibility") {
    const Field q = Field::rationals();
    for (int N = 2; N <= 5; ++N) {
        NComplex p = mu(N, N, 0, 1, q);
        CHECK(homotopy_image_dim(p, p) == 1);
        CHECK_FALSE(printed_sum_reaches(ChainMap::identity(p)));
    }
}

TEST_CASE("powers of d on opposite sides give the same null-homotopic maps") {
    Rng rng(9);
    for (int k = 0; k < 40; ++k) {
        GeneratorParams p;
        p.N = 2 + k % 4;
        p.field = k % 2 ? Field::prime(5) : Field::rationals();
        p.max_dim = 3;
        p.window = 5;
        NComplex x = generate_random(p, rng).complex;
        NComplex y = generate_random(p, rng).complex;
        CHECK(mirrored_homotopy_image_dim(x, y) == homotopy_image_dim(x, y));
    }
}

TEST_CASE("random null-homotopic maps get a witness") {
    Rng rng(13);
    for (int k = 0; k < 40; ++k) {
        GeneratorParams p;
        p.N = 2 + k % 4;
        p.field = k % 2 ? Field::prime(5) : Field::rationals();
        p.max_dim = 3;
        p.window = 5;
        NComplex x = generate_random(p, rng).complex;
        NComplex y = generate_random(p, rng).complex;
        ChainMap f = random_null_homotopic(x, y, rng);
        CHECK_FALSE(validate_map(f));
        auto s = null_homotopy_witness(f);
        REQUIRE(s.has_value());
        CHECK(apply_homotopy(x, y, *s) == f);
        for (const auto& g : chain_map_basis(x, y)) CHECK_FALSE(validate_map(g));
    }
}

TEST_CASE("chain map checks report the failing degree") {
    const Field q = Field::rationals();
    NComplex x = mu(3, 2, 1, 1, q);
    ChainMap f(x, x);
    f.set(0, Matrix::from_ints(q, 1, 1, {1}));
    auto e = validate_map(f);
    REQUIRE(e.has_value());
    CHECK(e->kind == ErrorKind::CommutationFailure);
    CHECK(e->degree == 0);
    f.set(1, Matrix::from_ints(q, 1, 1, {1}));
    CHECK_FALSE(validate_map(f));
    CHECK_THROWS_AS(f.set(1, Matrix::from_ints(q, 1, 2, {1, 1})), Error);
}

TEST_CASE("hom in K against an acyclic complex vanishes") {
    Rng rng(31);
    for (int k = 0; k < 30; ++k) {
        GeneratorParams p;
        p.N = 2 + k % 4;
        p.max_dim = 3;
        p.window = 5;
        NComplex x = generate_random(p, rng).complex;
        NComplex a = direct_sum(mu(p.N, p.N, 1, 1, p.field), mu(p.N, p.N, 3, 2, p.field));
        a = random_isomorphism(a, rng).target();
        CHECK(homK_dim(x, a) == 0);
        CHECK(homK_dim(a, x) == 0);
    }
}
