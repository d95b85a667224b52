#include <doctest.h>

#include "ncx/random.hpp"
#include "oracles.hpp"

using namespace ncx;

namespace {

HomologyTable as_table(const oracle::Table& t) { return HomologyTable(t.begin(), t.end()); }

}  // namespace

TEST_CASE("mu blocks have the closed-form homology table") {
    for (const Field& field : {Field::rationals(), Field::prime(5)}) {
        for (int N = 2; N <= 5; ++N) {
            for (int r = 1; r <= N; ++r) {
                for (int s = -2; s <= 3; ++s) {
                    for (std::size_t m : {1u, 2u}) {
                        NComplex x = mu(N, r, s, m, field);
                        CHECK_FALSE(validate(x));
                        CHECK(homology_table(x) == as_table(oracle::mu_table(N, r, s, m)));
                    }
                }
            }
        }
    }
}

TEST_CASE("mu_2^1 with N = 3") {
    NComplex x = mu(3, 2, 1, 1, Field::rationals());
    CHECK(x.lo() == 0);
    CHECK(x.hi() == 1);
    CHECK(homology_table(x) == HomologyTable{{{0, 2}, 1}, {{1, 1}, 1}});
}

TEST_CASE("mu_N is acyclic") {
    for (int N = 2; N <= 5; ++N) CHECK(homology_table(mu(N, N, 0, 2, Field::rationals())).empty());
}

TEST_CASE("homology over F_5 matches brute-force counting") {
    Rng rng(17);
    for (int k = 0; k < 40; ++k) {
        GeneratorParams p;
        p.N = 2 + k % 4;
        p.field = Field::prime(5);
        p.max_dim = 2;
        p.window = 4;
        NComplex x = generate_random(p, rng).complex;
        CHECK(homology_table(x) == as_table(oracle::homology_table(x, 5)));
    }
}

TEST_CASE("validation finds the first failing window") {
    const Field q = Field::rationals();
    // d^1 d^0 = 1 on k -> k -> k, fine for N = 3, not for N = 2
    NComplex x(2, q, 0, {1, 1, 1}, {Matrix::from_ints(q, 1, 1, {1}), Matrix::from_ints(q, 1, 1, {1})});
    auto e = validate(x);
    REQUIRE(e.has_value());
    CHECK(e->kind == ErrorKind::NPowerNonzero);
    CHECK(e->degree == 0);
    CHECK_THROWS_AS(require_valid(x), Error);
    NComplex y(3, q, 0, {1, 1, 1}, {Matrix::from_ints(q, 1, 1, {1}), Matrix::from_ints(q, 1, 1, {1})});
    CHECK_FALSE(validate(y));
    CHECK_THROWS_AS(NComplex(3, q, 0, {1, 2}, {Matrix::from_ints(q, 1, 1, {1})}), Error);
    CHECK_THROWS_AS(NComplex(3, q, 0, {1, 1}, {}), Error);
}

TEST_CASE("zero degrees at the ends are trimmed") {
    const Field q = Field::rationals();
    NComplex x(3, q, -2, {0, 1, 0}, {Matrix(q, 1, 0), Matrix(q, 0, 1)});
    CHECK(x.lo() == -1);
    CHECK(x.hi() == -1);
    CHECK(x == mu(3, 1, -1, 1, q));
    CHECK(NComplex(3, q, 5, {0, 0}, {Matrix(q, 0, 0)}).is_zero());
}

TEST_CASE("shift and direct sum act on tables") {
    Rng rng(2);
    for (int k = 0; k < 20; ++k) {
        GeneratorParams p;
        p.N = 2 + k % 4;
        NComplex x = generate_random(p, rng).complex;
        NComplex y = generate_random(p, rng).complex;
        CHECK(homology_table(theta_shift(x, 3)) == shift_table(homology_table(x), -3));
        CHECK(homology_table(direct_sum(x, y)) == add_tables(homology_table(x), homology_table(y)));
    }
}

TEST_CASE("cycles and boundaries nest") {
    Rng rng(23);
    for (int k = 0; k < 20; ++k) {
        GeneratorParams p;
        p.N = 3 + k % 3;
        NComplex x = generate_random(p, rng).complex;
        for (int i = x.lo(); i <= x.hi(); ++i) {
            for (int r = 1; r < p.N; ++r) {
                CHECK(cycles(x, i, r + 1).contains(cycles(x, i, r)));
                CHECK(boundaries(x, i, r).contains(boundaries(x, i, r + 1)));
                CHECK(cycles(x, i, r).contains(boundaries(x, i, p.N - r)));
            }
        }
    }
}

TEST_CASE("smart truncations of a mu block") {
    const Field q = Field::rationals();
    // μ_3^2 with N = 3: k -> k -> k in degrees 0..2
    NComplex x = mu(3, 3, 2, 1, q);
    CHECK(sigma_le(x, 1).is_zero());  // Z^0_(2) = ker d^2 = 0, Z^1_(1) = 0
    CHECK(sigma_le(x, 2) == x);
    NComplex y = mu(3, 2, 1, 1, q);
    CHECK(sigma_le(y, 1) == y);
    CHECK(sigma_le(y, 0).is_zero());
    CHECK(tau_le(x, 1) == mu(3, 2, 1, 1, q));
    CHECK(tau_ge(x, 1) == mu(3, 2, 2, 1, q));
    CHECK_FALSE(validate(sigma_ge(x, 0)));
}
