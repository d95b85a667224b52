#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncx/qis.hpp"
#include "ncx/random.hpp"

namespace ncx {

/// X^1 -> X^2 -> ... -> X^{N-1}; maps[j] : component j -> component j+1.
struct MorObject {
    Field field = Field::rationals();
    std::vector<std::size_t> dims;
    std::vector<Matrix> maps;

    bool is_zero() const;
    friend bool operator==(const MorObject& a, const MorObject& b);
    friend bool operator!=(const MorObject& a, const MorObject& b) { return !(a == b); }
};

struct MorMorphism {
    std::vector<Matrix> components;
};

/// Checks sizes of the maps.
void require_valid_mor(const MorObject& m);
/// f^{j+1} a_X^j = a_Y^j f^j for every j.
bool ladder_commutes(const MorObject& source, const MorObject& target, const MorMorphism& f);
bool is_componentwise_iso(const MorMorphism& f);
MorMorphism compose(const MorMorphism& g, const MorMorphism& f);

/// (degree, amplitude) of component t (0-based) of H^j(GX):
/// j = 2i gives H^{iN+t+1}_{(N-t-1)}, j = 2i+1 gives H^{(i+1)N}_{(t+1)}.
std::pair<int, int> mor_slot(int N, int j, int t);
/// Range of j whose MorObject can be nonzero for complexes supported in [lo, hi].
std::pair<int, int> mor_window(int N, int lo, int hi);

MorObject mor_homology(const NComplex& x, int j);
MorMorphism mor_induced(const ChainMap& f, int j);
/// Every mor_induced(f, j) is a componentwise isomorphism.
bool qis_via_mor(const ChainMap& f);

/// How often each nonzero H^i_{(r)}(X) occurs in a MorObject slot.
struct CoverageReport {
    std::map<std::pair<int, int>, int> hits;
    std::vector<std::pair<int, int>> uncovered;
    std::vector<std::pair<int, int>> repeated;
    bool complete() const { return uncovered.empty() && repeated.empty(); }
};
CoverageReport mor_coverage(const NComplex& x);

/// homK_dim(μ_r^{i+r-1}k, X) == dim H^i_{(r)}(X).
struct NhnResult {
    std::size_t hom_dim;
    std::size_t homology_dim;
    bool equal() const { return hom_dim == homology_dim; }
};
NhnResult nhn_check(const NComplex& x, int i, int r);

/// Multiset of μ_r^s k^m summands read off from ranks of powers of d.
std::vector<MuBlock> mu_decomposition(const NComplex& x);
/// Summands with r < N, merged and sorted.
std::vector<MuBlock> homotopy_class(const NComplex& x);
NComplex mu_sum(int N, const Field& field, const std::vector<MuBlock>& blocks);

/// Σ^j applied one step at a time, reducing to μ summands between steps.
std::vector<MuBlock> suspend_class(int N, const Field& field, std::vector<MuBlock> blocks, int j);

struct MuClass {
    int r;
    int s;
    friend bool operator==(const MuClass& a, const MuClass& b) { return a.r == b.r && a.s == b.s; }
};
/// Printed exponents: μ_{N-r}^{(1-j)N/2-r-1} (j odd), μ_r^{(2-j)N/2-1} (j even).
MuClass sigma_mu_class_printed(int j, int r, int N);
/// Odd j corrected to μ_{N-r}^{(3-j)N/2-r-1}.
MuClass sigma_mu_class(int j, int r, int N);
/// Σ^j μ_r^{N-1}k computed by suspension; empty if not a single μ summand.
std::optional<MuClass> sigma_mu_class_computed(int j, int r, int N, const Field& field);

struct Smcatcp2Item {
    std::string statement;
    int r;            // amplitude for (3), 0 otherwise
    int theta;        // exponent t in the printed Θ^t C
    bool printed;     // holds with Θ^t
    bool negated;     // holds with Θ^{-t}
};
struct Smcatcp2Report {
    int N;
    int i;
    std::vector<Smcatcp2Item> items;
    bool printed_holds() const;
    bool negated_holds() const;
};
/// Checks (1) Θ^{iN}C ≃ Σ^{1-2i}μ_{N-1}^{N-1}C, (2) Θ^{iN-1}C ≃ Σ^{2-2i}μ_1^{N-1}C and
/// (3) cone(Σ^{2-2i}(μ_{r-1}^{N-1}C -> μ_r^{N-1}C)) ≃ Θ^{iN-r}C, with C = k^c in degree 0.
Smcatcp2Report smcatcp2_check(std::size_t c, int N, int i, const Field& field);

/// Object of Mor^{sm}_{N-1} placed in degrees 1..N-1.
NComplex mor_to_ncomplex(const MorObject& m, int N);
/// dims of C_t with X ≅ ⊕ μ_t^{N-1}C_t; requires every map injective.
std::vector<std::size_t> smcat_decomposition(const MorObject& m, int N);

}  // namespace ncx
