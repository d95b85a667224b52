#pragma once

#include <vector>

#include "ncx/homotopy.hpp"

namespace ncx {

/// Summand X^{source_degree} placed in degree `degree` of a block complex.
/// Within one degree, blocks are listed in matrix order.
struct BlockTag {
    int degree;
    int source_degree;
};
using BlockTags = std::vector<BlockTag>;

struct BlockComplex {
    NComplex complex;
    BlockTags blocks;
};

/// (ΣX)^m = X^{m+1} ⊕ ... ⊕ X^{m+N-1}; the last row of d is (-d^{N-1}, ..., -d).
BlockComplex suspend(const NComplex& x);
/// (Σ^{-1}X)^m = X^{m-N+1} ⊕ ... ⊕ X^{m-1}; the first column of d is (-d, ..., -d^{N-1}).
BlockComplex cosuspend(const NComplex& x);
/// P(X)^m = X^{m-N+1} ⊕ ... ⊕ X^m.
BlockComplex pcover_complex(const NComplex& x);
/// I(X)^m = X^m ⊕ ... ⊕ X^{m+N-1}.
BlockComplex ihull_complex(const NComplex& x);

ChainMap suspend_map(const ChainMap& f);
ChainMap cosuspend_map(const ChainMap& f);
/// (Θ^t f)^i = f^{i+t}.
ChainMap theta_map(const ChainMap& f, int t);

struct PCover {
    BlockComplex p;
    ChainMap epsilon;  // Σ^{-1}X -> P(X)
    ChainMap rho;      // P(X) -> X
};
PCover pcover(const NComplex& x);

struct IHull {
    BlockComplex i;
    ChainMap sigma_epsilon;  // X -> I(X)
    ChainMap sigma_rho;      // I(X) -> ΣX
};
IHull ihull(const NComplex& x);

/// A -f-> B -u-> C(f) -v-> ΣA, with ψ_f : I(A) -> C(f) from the push-out.
struct Triangle {
    NComplex a, b, c;
    ChainMap f, u, v;
    ChainMap psi;
    BlockTags blocks;  // C(f): B^m first, then A^{m+1}, ..., A^{m+N-1}
};

/// C(f)^m = B^m ⊕ A^{m+1} ⊕ ... ⊕ A^{m+N-1}.
Triangle cone(const ChainMap& f);

/// φ_X : ΣX -> Θ^N Σ^{-1}X, φ^m lower unitriangular with blocks d^{t-c}.
ChainMap sigma2_theta_iso(const NComplex& x);

/// Degreewise-exact 0 -> X -a-> Y -b-> Z -> 0.
struct ShortExactSeq {
    ChainMap alpha;
    ChainMap beta;
};

/// First degree where the sequence fails to be exact, if any (maps are also
/// checked to be chain maps).
std::optional<MapError> check_exact(const ShortExactSeq& ses);

struct EmbeddedTriangle {
    Triangle triangle;
    ChainMap comparison;  // s : C(alpha) -> Z, s^m = (beta^m, 0, ..., 0)
};

/// Throws NotExact if the sequence is not degreewise exact.
EmbeddedTriangle embed_ses_as_triangle(const ShortExactSeq& ses);

/// f : X -> Y factors as g o e for some chain map g : W -> Y.
bool factors_through_source(const ChainMap& f, const ChainMap& e);
/// f : X -> Y factors as p o g for some chain map g : X -> W.
bool factors_through_target(const ChainMap& f, const ChainMap& p);

}  // namespace ncx
