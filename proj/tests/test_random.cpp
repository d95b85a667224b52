#include <doctest.h>

#include "ncx/random.hpp"
#include "oracles.hpp"

using namespace ncx;

TEST_CASE("generator is deterministic for a fixed seed") {
    GeneratorParams p;
    p.N = 4;
    p.field = Field::prime(5);
    Rng a(1234), b(1234);
    for (int k = 0; k < 10; ++k) {
        GeneratedComplex x = generate_random(p, a);
        GeneratedComplex y = generate_random(p, b);
        CHECK(x.complex == y.complex);
        CHECK(x.blocks.size() == y.blocks.size());
    }
}

TEST_CASE("generated complexes are valid, bounded and carry their table") {
    Rng rng(97);
    for (int k = 0; k < 200; ++k) {
        GeneratorParams p;
        p.N = 2 + k % 4;
        p.field = (k / 4) % 2 ? Field::prime(5) : Field::rationals();
        p.window = 1 + k % 8;
        p.min_degree = -2;
        GeneratedComplex g = generate_random(p, rng);
        CHECK_FALSE(validate(g.complex));
        for (std::size_t d : g.complex.dims()) CHECK(d <= p.max_dim);
        if (!g.complex.is_zero()) {
            CHECK(g.complex.lo() >= p.min_degree);
            CHECK(g.complex.hi() < p.min_degree + p.window);
        }
        oracle::Table expected;
        for (const auto& b : g.blocks) {
            for (const auto& [key, m] : oracle::mu_table(p.N, b.r, b.s, b.m)) expected[key] += m;
        }
        CHECK(homology_table(g.complex) == HomologyTable(expected.begin(), expected.end()));
    }
}

TEST_CASE("random short exact sequences are exact") {
    Rng rng(101);
    for (int k = 0; k < 30; ++k) {
        GeneratorParams p;
        p.N = 2 + k % 4;
        NComplex w = generate_random(p, rng).complex;
        NComplex y = generate_random(p, rng).complex;
        CHECK_FALSE(check_exact(random_ses(w, y, rng)));
    }
}
