#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ncx/homotopy.hpp"
#include "ncx/triangles.hpp"

namespace ncx {

using Rng = std::mt19937_64;

/// One hidden summand μ_r^s k^m of a generated complex.
struct MuBlock {
    int r;
    int s;
    std::size_t m;
};

struct GeneratorParams {
    int N = 3;
    Field field = Field::rationals();
    std::size_t max_dim = 4;
    int window = 8;
    int min_degree = 0;
    /// Upper bound on the number of μ blocks drawn.
    int max_blocks = 6;
};

struct GeneratedComplex {
    NComplex complex;
    std::vector<MuBlock> blocks;
};

mpq_class random_scalar(const Field& field, Rng& rng);
Matrix random_matrix(const Field& field, std::size_t rows, std::size_t cols, Rng& rng);
/// L * U * D with unitriangular L, U and a nonzero diagonal D.
Matrix random_invertible(const Field& field, std::size_t n, Rng& rng);

/// Direct sum of random μ_t^s blocks inside the window, conjugated degreewise
/// by random invertible matrices.
GeneratedComplex generate_random(const GeneratorParams& params, Rng& rng);

/// Degreewise change of basis X^i -> X^i via the given invertible matrices;
/// returns the transported complex and the isomorphism X -> result.
ChainMap random_isomorphism(const NComplex& x, Rng& rng);

/// Random element of Hom_{C_N}(X, Y).
ChainMap random_chain_map(const NComplex& x, const NComplex& y, Rng& rng);

/// Random null-homotopic map X -> Y built from a random witness.
ChainMap random_null_homotopic(const NComplex& x, const NComplex& y, Rng& rng);

/// 0 -> im(h) -> Y -> Y/im(h) -> 0 for a random chain map h : W -> Y.
ShortExactSeq random_ses(const NComplex& w, const NComplex& y, Rng& rng);

}  // namespace ncx
