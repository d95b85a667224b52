#include <doctest.h>

#include "ncx/qis.hpp"
#include "ncx/random.hpp"

using namespace ncx;

namespace {

GeneratedComplex sample(int N, Rng& rng, std::size_t max_dim = 3, int window = 6) {
    GeneratorParams p;
    p.N = N;
    p.max_dim = max_dim;
    p.window = window;
    return generate_random(p, rng);
}

}  // namespace

TEST_CASE("induced d maps on a mu block") {
    const Field q = Field::rationals();
    // μ_2^1, N = 3: d : H^0_(2) -> H^1_(1) is an isomorphism
    NComplex x = mu(3, 2, 1, 1, q);
    Matrix m = induced_d_map(x, 0, 2, 1, 1);
    CHECK(m.rows() == 1);
    CHECK(m.cols() == 1);
    CHECK(rank(m) == 1);
}

TEST_CASE("les_single rejects illegal amplitudes") {
    NComplex x = mu(3, 1, 0, 1, Field::rationals());
    CHECK_THROWS_AS(les_single(x, 1, 2), Error);
    CHECK_THROWS_AS(les_single(x, 0, 1), Error);
    CHECK(les_single(x, 1, 1).exact());
}

TEST_CASE("les_single is exact and visits every nonzero group") {
    Rng rng(61);
    for (int k = 0; k < 30; ++k) {
        const int N = 3 + k % 3;
        NComplex x = sample(N, rng).complex;
        for (int l = 1; l < N; ++l) {
            for (int m = 1; l + m < N; ++m) {
                ExactnessReport r = les_single(x, l, m);
                CHECK(r.exact());
                CHECK(r.failures() == 0);
            }
        }
    }
}

TEST_CASE("connecting map of the cone sequence of mu_1 -> mu_2") {
    const Field q = Field::rationals();
    // 0 -> μ_1^1 -> μ_2^1 -> μ_1^0 -> 0 with N = 3
    NComplex x = mu(3, 1, 1, 1, q);
    NComplex y = mu(3, 2, 1, 1, q);
    NComplex z = mu(3, 1, 0, 1, q);
    ChainMap alpha(x, y, 1, {Matrix::from_ints(q, 1, 1, {1})});
    ChainMap beta(y, z, 0, {Matrix::from_ints(q, 1, 1, {1})});
    ShortExactSeq ses{alpha, beta};
    CHECK_FALSE(check_exact(ses));
    CHECK(les_ses_check(ses).exact());
    // ∂ : H^0_(1)(Z) -> H^1_(2)(X) is an isomorphism k -> k
    Matrix c = connecting(ses, 0, 1);
    CHECK(c.rows() == 1);
    CHECK(c.cols() == 1);
    CHECK(rank(c) == 1);
}

TEST_CASE("qis and acyclicity on small examples") {
    const Field q = Field::rationals();
    for (int N = 2; N <= 5; ++N) {
        NComplex p = mu(N, N, N - 1, 1, q);
        CHECK(acyclic(p));
        CHECK(is_qis(ChainMap(p, NComplex(N, q))));
        CHECK_FALSE(acyclic(mu(N, 1, 0, 1, q)));
        CHECK_FALSE(is_qis(ChainMap(mu(N, 1, 0, 1, q), NComplex(N, q))));
        CHECK(is_qis(ChainMap::identity(mu(N, 1, 0, 1, q))));
    }
}

TEST_CASE("exact squares") {
    const Field q = Field::rationals();
    // k -1-> k, k -1-> k, identities everywhere: exact
    Matrix one = Matrix::from_ints(q, 1, 1, {1});
    CHECK(is_exact_square({one, one, one, one}));
    CHECK(is_pullback_square({one, one, one, one}));
    // A = B = D = 0, E = k: a pull-back that is not a push-out
    Matrix empty(q, 0, 0), into(q, 1, 0);
    CHECK(is_pullback_square({empty, empty, into, into}));
    CHECK_FALSE(is_exact_square({empty, empty, into, into}));
    // non-commutative
    Matrix two = Matrix::from_ints(q, 1, 1, {2});
    CHECK_THROWS_AS(is_exact_square({one, one, one, two}), Error);
    // pasting composes the horizontal maps
    ExactSquare s{one, one, one, one};
    ExactSquare p = paste(s, s);
    CHECK(p.f == one);
    CHECK(is_exact_square(p));
}

TEST_CASE("elementary morphisms: identity u gives a quasi-isomorphism, zero u does not") {
    const Field q = Field::rationals();
    for (int N = 2; N <= 5; ++N) {
        NComplex x = mu(N, N - 1, 2, 1, q);
        Elmap02Report a = verify_elmap02(x, Matrix::identity(q, 1), 2);
        CHECK(a.qis);
        CHECK(a.equivalent);
        Elmap02Report b = verify_elmap02(x, Matrix(q, 1, 1), 2);
        CHECK_FALSE(b.qis);
        CHECK(b.equivalent);
        CHECK(b.all_pullbacks);
        ElementaryMorphism e = elementary(x, Matrix(q, 1, 1), 2);
        CHECK(e.squares.size() == static_cast<std::size_t>(N - 1));
    }
}

TEST_CASE("elementary morphisms on random complexes") {
    Rng rng(67);
    std::size_t qis = 0, not_qis = 0;
    for (int k = 0; k < 40; ++k) {
        const int N = 2 + k % 4;
        NComplex x = sample(N, rng).complex;
        const int i = x.lo() + static_cast<int>(rng() % static_cast<std::uint64_t>(x.hi() - x.lo() + 1));
        Matrix u = k % 2 ? random_matrix(x.field(), x.dim(i), 2, rng) : Matrix(x.field(), x.dim(i), 1);
        Elmap02Report r = verify_elmap02(x, u, i);
        CHECK(r.equivalent);
        CHECK(r.pullback2_holds);
        (r.qis ? qis : not_qis)++;
    }
    CHECK(qis > 0);
    CHECK(not_qis > 0);
}

TEST_CASE("truncation precondition and quasi-isomorphism") {
    const Field q = Field::rationals();
    NComplex x = direct_sum(mu(3, 1, 0, 1, q), mu(3, 3, 4, 1, q));
    CHECK(trunc_qis_check(x, 1));
    CHECK_THROWS_AS(trunc_qis_check(x, 0), Error);
}
