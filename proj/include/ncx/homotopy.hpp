#pragma once

#include <optional>
#include <vector>

#include "ncx/ncomplex.hpp"

namespace ncx {

/// A degreewise family f^i : X^i -> Y^i. Degrees outside [lo, lo+maps.size())
/// carry the zero map.
class ChainMap {
public:
    ChainMap(NComplex source, NComplex target);
    ChainMap(NComplex source, NComplex target, int min_degree, std::vector<Matrix> maps);

    static ChainMap identity(const NComplex& x);
    static ChainMap zero(const NComplex& source, const NComplex& target) { return ChainMap(source, target); }

    const NComplex& source() const { return source_; }
    const NComplex& target() const { return target_; }
    /// f^i, always shaped dim target^i x dim source^i.
    Matrix at(int i) const;
    void set(int i, Matrix map);

    /// Degree range where both ends can be nonzero.
    int lo() const;
    int hi() const;

    ChainMap operator-() const;
    ChainMap scaled(const mpq_class& factor) const;
    friend ChainMap operator+(const ChainMap& f, const ChainMap& g);
    friend ChainMap operator-(const ChainMap& f, const ChainMap& g);
    friend bool operator==(const ChainMap& f, const ChainMap& g);
    friend bool operator!=(const ChainMap& f, const ChainMap& g) { return !(f == g); }

private:
    NComplex source_;
    NComplex target_;
    int min_degree_ = 0;
    std::vector<Matrix> maps_;
};

struct MapError {
    ErrorKind kind;
    int degree;
    std::string message;
};

std::optional<MapError> validate_map(const ChainMap& f);
void require_valid_map(const ChainMap& f);

/// g o f.
ChainMap compose(const ChainMap& g, const ChainMap& f);

/// s^i : X^i -> Y^{i-N+1}, indexed by the source degree i.
struct HomotopyWitness {
    int min_degree = 0;
    std::vector<Matrix> maps;
};

/// f^i = sum_{j=1}^{N} d_Y^{N-j} s^{i+j-1} d_X^{j-1}.
ChainMap apply_homotopy(const NComplex& source, const NComplex& target, const HomotopyWitness& s);

std::optional<HomotopyWitness> null_homotopy_witness(const ChainMap& f);
bool is_null_homotopic(const ChainMap& f);

/// Basis (as chain maps) of Hom_{C_N}(X, Y).
std::vector<ChainMap> chain_map_basis(const NComplex& x, const NComplex& y);
std::size_t chainmap_space_dim(const NComplex& x, const NComplex& y);
/// dim Hom_{K_N}(X, Y) = dim Hom_{C_N}(X, Y) - dim(null-homotopic maps).
std::size_t homK_dim(const NComplex& x, const NComplex& y);

/// Dimension of the null-homotopic subspace with the powers of d placed on the
/// opposite sides (s -> sum_j d_Y^{j-1} s d_X^{N-j}).
std::size_t mirrored_homotopy_image_dim(const NComplex& x, const NComplex& y);
std::size_t homotopy_image_dim(const NComplex& x, const NComplex& y);
/// f = sum_{j=1}^{N-1} d^{N-j} s d^{j-1} has a solution s (the d^0 s d^{N-1} term dropped).
bool printed_sum_reaches(const ChainMap& f);

/// Identity null-homotopic.
bool is_contractible(const NComplex& x);
/// Over a field: every induced d : Z^n_{(r)} -> Z^{n+1}_{(r-1)} (2 <= r <= N) is onto.
bool induced_d_surjective(const NComplex& x);

/// Canonical injection sigma_{<=n} X -> X.
ChainMap sigma_le_inclusion(const NComplex& x, int n);
/// Canonical projection X -> sigma_{>=n} X.
ChainMap sigma_ge_projection(const NComplex& x, int n);

}  // namespace ncx
