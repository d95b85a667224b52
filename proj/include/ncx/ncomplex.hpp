#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ncx/linalg.hpp"

namespace ncx {

/// A finitely supported N-complex of finite-dimensional vector spaces:
/// X^i = k^{dims[i - min_degree]}, d^i : X^i -> X^{i+1}.
///
/// Values are kept normalized: leading and trailing zero-dimensional degrees
/// are trimmed, and the zero complex has an empty window at degree 0.
class NComplex {
public:
    NComplex(int N, Field field) : N_(N), field_(field) {}
    /// Takes ownership of the raw data; checks shapes (DimensionMismatch) but
    /// not the d^N = 0 condition, see validate().
    NComplex(int N, Field field, int min_degree, std::vector<std::size_t> dims, std::vector<Matrix> diffs);

    int N() const { return N_; }
    const Field& field() const { return field_; }
    bool is_zero() const { return dims_.empty(); }
    /// Support window [lo, hi]; meaningless when is_zero().
    int lo() const { return min_degree_; }
    int hi() const { return min_degree_ + static_cast<int>(dims_.size()) - 1; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    const std::vector<Matrix>& diffs() const { return diffs_; }
    std::size_t total_dim() const;

    std::size_t dim(int i) const;
    /// d^i as a dim(i+1) x dim(i) matrix (empty/zero outside the window).
    Matrix d(int i) const;
    /// d^{i+r-1} ... d^i; r = 0 gives the identity on X^i.
    Matrix power(int i, int r) const;

    friend bool operator==(const NComplex& a, const NComplex& b);
    friend bool operator!=(const NComplex& a, const NComplex& b) { return !(a == b); }

private:
    void normalize();

    int N_;
    Field field_;
    int min_degree_ = 0;
    std::vector<std::size_t> dims_;
    std::vector<Matrix> diffs_;
};

struct ValidationError {
    ErrorKind kind;
    int degree;
    std::string message;
};

/// Checks every window of N consecutive differentials meeting the support.
std::optional<ValidationError> validate(const NComplex& x);
/// Throws Error if validate() fails.
void require_valid(const NComplex& x);

/// mu_r^s k^m: k^m in degrees s-r+1..s joined by identities.
NComplex mu(int N, int r, int s, std::size_t m, Field field);

/// Theta^t: result^i = X^{i+t}.
NComplex theta_shift(const NComplex& x, int t);

NComplex direct_sum(const NComplex& x, const NComplex& y);

/// Z^i_{(r)} = Ker d^{r} out of X^i, 1 <= r <= N (Z_{(N)} is all of X^i).
Subspace cycles(const NComplex& x, int i, int r);
/// B^i_{(r)} = Im d^{r} into X^i, 1 <= r <= N.
Subspace boundaries(const NComplex& x, int i, int r);

/// C^i_{(r)} = X^i / B^i_{(r)}.
struct CokGroup {
    std::size_t dim = 0;
    Matrix projection;
    Matrix section;
};
CokGroup cok(const NComplex& x, int i, int r);

/// H^i_{(r)} = Z^i_{(r)} / B^i_{(N-r)} for 1 <= r <= N-1.
///
/// `projection` acts on Z-coordinates (the pivot rows of cycles.basis());
/// `representatives` are cycles in X^i whose classes form the chosen basis.
struct HomologyGroup {
    int degree = 0;
    int amplitude = 0;
    Subspace cycles;
    Subspace boundaries;
    std::size_t dim = 0;
    Matrix projection;
    Matrix representatives;

    /// Class coordinates of vectors (columns) that are cycles.
    Matrix classes_of(const Matrix& cycle_vectors) const;
};

HomologyGroup homology(const NComplex& x, int i, int r);

/// Nonzero dims of H^i_{(r)}, keyed by (degree, amplitude).
using HomologyTable = std::map<std::pair<int, int>, std::size_t>;
HomologyTable homology_table(const NComplex& x);
HomologyTable add_tables(const HomologyTable& a, const HomologyTable& b);
HomologyTable shift_table(const HomologyTable& t, int degree_offset);

/// Brutal truncations.
NComplex tau_le(const NComplex& x, int n);
NComplex tau_ge(const NComplex& x, int n);

/// Subcomplex spanned degreewise by `spaces` (indexed from `lo`), which must be
/// stable under d. Differentials are written in the spaces' echelon bases.
NComplex subcomplex(const NComplex& x, int lo, const std::vector<Subspace>& spaces);
/// X / S for a d-stable family S, in quotient() coordinates.
NComplex quotient_complex(const NComplex& x, int lo, const std::vector<Subspace>& spaces);

/// Degreewise subspaces (from x.lo()) cutting out sigma_{<=n} X inside X.
std::vector<Subspace> sigma_le_spaces(const NComplex& x, int n);
/// Degreewise subspaces (from x.lo()) whose quotient is sigma_{>=n} X.
std::vector<Subspace> sigma_ge_spaces(const NComplex& x, int n);

/// Smart truncation: ... -> X^{n-N+1} -> Z^{n-N+2}_{(N-1)} -> ... -> Z^n_{(1)} -> 0.
NComplex sigma_le(const NComplex& x, int n);
/// Smart truncation: 0 -> C^{n-N+2}_{(1)} -> ... -> C^n_{(N-1)} -> X^{n+1} -> ...
NComplex sigma_ge(const NComplex& x, int n);

}  // namespace ncx
