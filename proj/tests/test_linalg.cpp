#include <doctest.h>

#include "ncx/random.hpp"
#include "oracles.hpp"

using namespace ncx;

TEST_CASE("rational scalars parse only in lowest terms") {
    const Field q = Field::rationals();
    CHECK(q.parse("1/2") == mpq_class(1, 2));
    CHECK(q.parse("-3") == mpq_class(-3));
    CHECK(q.parse("0") == mpq_class(0));
    CHECK(q.format(q.parse("-3/2")) == "-3/2");
    for (const char* bad : {"2/4", "-0", "+1", "01", "1/1", "1/-2", " 1", "1.5", "", "1/0", "NaN", "inf", "1e3", "0/3"}) {
        CHECK_THROWS_AS(q.parse(bad), Error);
    }
}

TEST_CASE("prime field scalars are residues") {
    const Field f = Field::prime(5);
    CHECK(f.parse("4") == 4);
    CHECK_THROWS_AS(f.parse("5"), Error);
    CHECK_THROWS_AS(f.parse("-1"), Error);
    CHECK_THROWS_AS(f.parse("1/2"), Error);
    CHECK(f.reduce(mpq_class(-1)) == 4);
    CHECK(f.reduce(mpq_class(1, 2)) == 3);  // 2 * 3 = 6 = 1
    CHECK(f.inverse(mpq_class(2)) == 3);
    CHECK_THROWS_AS(Field::prime(6), Error);
    CHECK(Field::prime(2147483647).characteristic() == 2147483647u);
}

TEST_CASE("rank of small hand-computed matrices") {
    const Field q = Field::rationals();
    CHECK(rank(Matrix::from_ints(q, 2, 2, {1, 2, 2, 4})) == 1);
    CHECK(rank(Matrix::from_ints(q, 3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9})) == 2);
    CHECK(rank(Matrix::from_ints(q, 2, 3, {0, 0, 0, 0, 0, 0})) == 0);
    // singular mod 5 only: det = 5
    Matrix m = Matrix::from_ints(q, 2, 2, {1, 2, 3, 11});
    CHECK(rank(m) == 2);
    CHECK(rank(Matrix::from_ints(Field::prime(5), 2, 2, {1, 2, 3, 11})) == 1);
}

TEST_CASE("rank over F_5 agrees with counting the column span") {
    Rng rng(3);
    const Field f = Field::prime(5);
    for (int k = 0; k < 60; ++k) {
        const auto rows = static_cast<std::size_t>(1 + k % 4);
        const auto cols = static_cast<std::size_t>(1 + (k / 4) % 4);
        Matrix m = random_matrix(f, rows, cols, rng);
        if (k % 3 == 0 && rows > 1) m = random_matrix(f, rows, 1, rng) * random_matrix(f, 1, cols, rng);
        CHECK(rank(m) == oracle::rank(m, 5));
    }
}

TEST_CASE("kernel, image, solve and inverse are consistent") {
    Rng rng(5);
    for (const Field& field : {Field::rationals(), Field::prime(5)}) {
        for (int k = 0; k < 40; ++k) {
            Matrix m = random_matrix(field, static_cast<std::size_t>(1 + k % 4), static_cast<std::size_t>(1 + (k / 4) % 5), rng);
            Subspace ker = kernel_basis(m);
            Subspace im = image_basis(m);
            CHECK((m * ker.basis()).is_zero());
            CHECK(ker.dim() + rank(m) == m.cols());
            CHECK(im.dim() == rank(m));
            CHECK(im.contains(m));
            Matrix b = m * random_matrix(field, m.cols(), 2, rng);
            auto x = solve(m, b);
            REQUIRE(x.has_value());
            CHECK(m * *x == b);
            Matrix a = random_invertible(field, 3, rng);
            CHECK(a * inverse(a) == Matrix::identity(field, 3));
        }
    }
    const Field q = Field::rationals();
    CHECK_FALSE(solve(Matrix::from_ints(q, 2, 1, {1, 1}), Matrix::from_ints(q, 2, 1, {1, 2})).has_value());
}

TEST_CASE("quotient projection kills the subspace and splits") {
    const Field q = Field::rationals();
    Subspace s = Subspace::span(Matrix::from_ints(q, 3, 1, {1, 1, 0}));
    Quotient quo = quotient(3, s);
    CHECK(quo.dim == 2);
    CHECK((quo.projection * s.basis()).is_zero());
    CHECK(quo.projection * quo.section == Matrix::identity(q, 2));
}

TEST_CASE("subspaces compare by span") {
    const Field q = Field::rationals();
    CHECK(Subspace::span(Matrix::from_ints(q, 2, 2, {1, 2, 1, 2})) == Subspace::span(Matrix::from_ints(q, 2, 1, {3, 3})));
    CHECK(Subspace::span(Matrix::from_ints(q, 2, 1, {1, 0})) != Subspace::span(Matrix::from_ints(q, 2, 1, {0, 1})));
}
