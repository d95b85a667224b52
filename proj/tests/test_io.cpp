#include <doctest.h>

#include "ncx/io.hpp"

using namespace ncx;

namespace {

GeneratedComplex sample(int N, const Field& field, Rng& rng) {
    GeneratorParams p;
    p.N = N;
    p.field = field;
    return generate_random(p, rng);
}

}  // namespace

TEST_CASE("complexes, maps and sequences round-trip") {
    Rng rng(89);
    for (int k = 0; k < 40; ++k) {
        const int N = 2 + k % 4;
        const Field field = k % 2 ? Field::prime(5) : Field::rationals();
        NComplex x = sample(N, field, rng).complex;
        NComplex y = sample(N, field, rng).complex;
        CHECK(ncomplex_from_json(Json::parse(to_json(x).dump())) == x);
        ChainMap f = random_chain_map(x, y, rng);
        CHECK(chainmap_from_json(Json::parse(to_json(f).dump())) == f);
        ShortExactSeq ses = random_ses(x, y, rng);
        ShortExactSeq back = ses_from_json(Json::parse(to_json(ses).dump()));
        CHECK(back.alpha == ses.alpha);
        CHECK(back.beta == ses.beta);
        MorObject m = mor_homology(x, 1);
        CHECK(mor_from_json(Json::parse(to_json(m).dump()), field) == m);
    }
}

TEST_CASE("the documented example parses") {
    Json j = Json::parse(R"({"N": 3, "field": {"kind": "Q"}, "min_degree": -1, "dims": [1, 2, 1],
        "diffs": [[["1/2"], ["0"]], [["0", "1"]]]})");
    NComplex x = ncomplex_from_json(j);
    CHECK(x.lo() == -1);
    CHECK(x.dim(0) == 2);
    CHECK(x.d(-1).at(0, 0) == mpq_class(1, 2));
    CHECK_FALSE(validate(x));
}

TEST_CASE("parser rejects malformed input with a location") {
    auto reject = [](const char* text, const char* where) {
        try {
            ncomplex_from_json(Json::parse(text));
            FAIL("accepted " << text);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::ParseError);
            CHECK(std::string(e.what()).find(where) != std::string::npos);
        }
    };
    reject(R"({"N": 3, "field": {"kind": "Q"}, "min_degree": 0, "dims": [1, 1], "diffs": [[["2/4"]]]})", "$.diffs[0][0][0]");
    reject(R"({"N": 3, "field": {"kind": "Q"}, "min_degree": 0, "dims": [1, 1], "diffs": [[[1]]]})", "$.diffs[0][0][0]");
    reject(R"({"N": 3, "field": {"kind": "Q"}, "min_degree": 0, "dims": [1, 1], "diffs": [[["-0"]]]})", "$.diffs[0][0][0]");
    reject(R"({"N": 3, "field": {"kind": "Q"}, "min_degree": 0, "dims": [1, 1], "diffs": [[["NaN"]]]})", "$.diffs[0][0][0]");
    reject(R"({"N": 3, "field": {"kind": "Fp", "p": 5}, "min_degree": 0, "dims": [1, 1], "diffs": [[["7"]]]})", "$.diffs[0][0][0]");
    reject(R"({"N": 3, "field": {"kind": "Fp", "p": 6}, "min_degree": 0, "dims": [], "diffs": []})", "$.field.p");
    reject(R"({"N": 3, "field": {"kind": "Q"}, "min_degree": 0, "dims": [1, 2], "diffs": [[["1"]]]})", "$.diffs[0]");
    reject(R"({"N": 3, "field": {"kind": "Q"}, "min_degree": 0, "dims": [1, 1]})", "diffs");
    reject(R"({"N": 1, "field": {"kind": "Q"}, "min_degree": 0, "dims": [], "diffs": []})", "$.N");
    reject(R"({"N": 3, "field": {"kind": "R"}, "min_degree": 0, "dims": [], "diffs": []})", "$.field.kind");
    reject(R"({"N": 3, "field": {"kind": "Q"}, "min_degree": 0.5, "dims": [], "diffs": []})", "$.min_degree");
    reject(R"({"N": 3, "field": {"kind": "Q"}, "min_degree": 0, "dims": [-1], "diffs": []})", "$.dims[0]");
}

TEST_CASE("field flags") {
    CHECK(field_from_flag("q") == Field::rationals());
    CHECK(field_from_flag("fp:5") == Field::prime(5));
    CHECK_THROWS_AS(field_from_flag("fp:4"), Error);
    CHECK_THROWS_AS(field_from_flag("fp:5x"), Error);
    CHECK_THROWS_AS(field_from_flag("r"), Error);
}

TEST_CASE("cone output carries the block sidecar") {
    const Field q = Field::rationals();
    NComplex a = mu(3, 2, 1, 1, q);
    Triangle t = cone(ChainMap::identity(a));
    Json j = to_json(BlockComplex{t.c, t.blocks});
    REQUIRE(j.contains("blocks"));
    CHECK(j["blocks"].size() == t.blocks.size());
    CHECK(j["blocks"][0][0] == t.blocks[0].degree);
    CHECK(ncomplex_from_json(j) == t.c);
}

TEST_CASE("homology tables serialize in ascending order") {
    Json j = to_json(homology_table(mu(3, 2, 1, 1, Field::rationals())));
    REQUIRE(j.size() == 2);
    CHECK(j[0]["degree"] == 0);
    CHECK(j[0]["amplitude"] == 2);
    CHECK(j[1]["degree"] == 1);
    CHECK(j[1]["amplitude"] == 1);
}
