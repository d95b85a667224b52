#pragma once

#include <string>
#include <vector>

#include "ncx/triangles.hpp"

namespace ncx {

/// H^i_{(r)}(f) in the chosen homology bases of source and target.
Matrix induced_homology_map(const ChainMap& f, int i, int r);

/// Class map H^n_{(a)}(X) -> H^{n+p}_{(b)}(X) induced by d^p (p = 0 is the
/// cycle inclusion). Throws Internal if cycles or boundaries are not preserved.
Matrix induced_d_map(const NComplex& x, int n, int a, int p, int b);

/// All H^i_{(r)} vanish; cross-checked against induced_d_surjective.
bool acyclic(const NComplex& x);
/// All induced maps invertible; cross-checked against acyclic(C(f)).
bool is_qis(const ChainMap& f);

struct ExactnessNode {
    int degree;
    int amplitude;
    std::string object;
    std::size_t dim;
    std::size_t rank_in;
    std::size_t dim_ker_out;
    bool exact;
};

struct ExactnessReport {
    std::vector<ExactnessNode> nodes;
    bool exact() const;
    std::size_t failures() const;
};

/// H^i_{(m)} -> H^i_{(l+m)} -> H^{i+m}_{(l)} -> H^{i+m}_{(N-m)} -> H^{i+l+m}_{(N-l-m)} -> H^{i+l+m}_{(N-l)} -> H^{i+N}_{(m)} -> ...
ExactnessReport les_single(const NComplex& x, int l, int m);

/// ∂ : H^i_{(r)}(Z) -> H^{i+r}_{(N-r)}(X).
Matrix connecting(const ShortExactSeq& ses, int i, int r);

/// ... -> H^i_{(r)}(X) -> H^i_{(r)}(Y) -> H^i_{(r)}(Z) -> H^{i+r}_{(N-r)}(X) -> ... -> H^{i+N}_{(r)}(X) -> ...
ExactnessReport les_ses_check(const ShortExactSeq& ses);

/// A -f-> B, A -x-> D, B -y-> E, D -g-> E with y f = g x.
struct ExactSquare {
    Matrix f;
    Matrix x;
    Matrix y;
    Matrix g;
};

/// Throws NotCommutative.
bool is_exact_square(const ExactSquare& sq);
/// 0 -> A -> B ⊕ D -> E exact.
bool is_pullback_square(const ExactSquare& sq);
/// Horizontal pasting: left then right (left.y == right.x).
ExactSquare paste(const ExactSquare& left, const ExactSquare& right);

struct ElementaryMorphism {
    NComplex complex;  // X(u, i)
    ChainMap p;        // p(u, i) : X(u, i) -> X
    std::vector<ExactSquare> squares;  // (E^{i-N+1}), ..., (E^{i-1})
    ExactSquare composite;
};

/// Iterated pull-back along u : k^m -> X^i.
ElementaryMorphism elementary(const NComplex& x, const Matrix& u, int i);

struct Elmap02Report {
    bool qis;
    std::vector<bool> squares_exact;
    bool all_squares_exact;
    bool composite_exact;
    bool all_pullbacks;
    bool equivalent;
    bool pullback2_holds;
};

Elmap02Report verify_elmap02(const NComplex& x, const Matrix& u, int i);

/// Canonical injection σ_{<=n}X -> X is a quasi-isomorphism; throws
/// PreconditionFailed unless H^i_{(r)}(X) = 0 for i >= n.
bool trunc_qis_check(const NComplex& x, int n);

}  // namespace ncx
