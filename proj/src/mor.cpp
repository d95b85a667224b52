#include "ncx/mor.hpp"

#include <algorithm>

namespace ncx {

namespace {

int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

bool MorObject::is_zero() const {
    return std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 0; });
}

bool operator==(const MorObject& a, const MorObject& b) { return a.field == b.field && a.dims == b.dims && a.maps == b.maps; }

void require_valid_mor(const MorObject& m) {
    if (m.dims.empty() ? !m.maps.empty() : m.maps.size() + 1 != m.dims.size()) {
        throw Error(ErrorKind::DimensionMismatch, "a MorObject with n components needs n-1 maps");
    }
    for (std::size_t k = 0; k < m.maps.size(); ++k) {
        if (m.maps[k].rows() != m.dims[k + 1] || m.maps[k].cols() != m.dims[k]) {
            throw Error(ErrorKind::DimensionMismatch, "MorObject map " + std::to_string(k) + " has the wrong shape");
        }
        if (m.maps[k].field() != m.field) throw Error(ErrorKind::FieldMismatch, "MorObject map over the wrong field");
    }
}

bool ladder_commutes(const MorObject& source, const MorObject& target, const MorMorphism& f) {
    if (f.components.size() != source.dims.size() || source.dims.size() != target.dims.size()) return false;
    for (std::size_t k = 0; k < source.maps.size(); ++k) {
        if (f.components[k + 1] * source.maps[k] != target.maps[k] * f.components[k]) return false;
    }
    return true;
}

bool is_componentwise_iso(const MorMorphism& f) {
    return std::all_of(f.components.begin(), f.components.end(), [](const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); });
}

MorMorphism compose(const MorMorphism& g, const MorMorphism& f) {
    if (g.components.size() != f.components.size()) throw Error(ErrorKind::CompositionMismatch, "MorMorphism lengths differ");
    MorMorphism h;
    for (std::size_t k = 0; k < f.components.size(); ++k) h.components.push_back(g.components[k] * f.components[k]);
    return h;
}

std::pair<int, int> mor_slot(int N, int j, int t) {
    const int i = floor_div(j, 2);
    if (j - 2 * i == 0) return {i * N + t + 1, N - t - 1};
    return {(i + 1) * N, t + 1};
}

std::pair<int, int> mor_window(int N, int lo, int hi) { return {2 * floor_div(lo, N) - 3, 2 * floor_div(hi, N) + 3}; }

MorObject mor_homology(const NComplex& x, int j) {
    const int N = x.N();
    MorObject m;
    m.field = x.field();
    const int power = j % 2 == 0 ? 1 : 0;
    for (int t = 0; t < N - 1; ++t) {
        auto [n, a] = mor_slot(N, j, t);
        m.dims.push_back(homology(x, n, a).dim);
        if (t > 0) {
            auto [pn, pa] = mor_slot(N, j, t - 1);
            m.maps.push_back(induced_d_map(x, pn, pa, power, a));
        }
    }
    return m;
}

MorMorphism mor_induced(const ChainMap& f, int j) {
    const int N = f.source().N();
    MorMorphism g;
    for (int t = 0; t < N - 1; ++t) {
        auto [n, a] = mor_slot(N, j, t);
        g.components.push_back(induced_homology_map(f, n, a));
    }
    if (!ladder_commutes(mor_homology(f.source(), j), mor_homology(f.target(), j), g)) {
        throw Error(ErrorKind::Internal, "induced MorMorphism does not commute", j);
    }
    return g;
}

namespace {

std::pair<int, int> joint_support(const NComplex& x, const NComplex& y) {
    if (x.is_zero()) return y.is_zero() ? std::make_pair(0, -1) : std::make_pair(y.lo(), y.hi());
    if (y.is_zero()) return {x.lo(), x.hi()};
    return {std::min(x.lo(), y.lo()), std::max(x.hi(), y.hi())};
}

}  // namespace

bool qis_via_mor(const ChainMap& f) {
    require_valid_map(f);
    auto [lo, hi] = joint_support(f.source(), f.target());
    if (hi < lo) return true;
    auto [jlo, jhi] = mor_window(f.source().N(), lo, hi);
    for (int j = jlo; j <= jhi; ++j) {
        if (!is_componentwise_iso(mor_induced(f, j))) return false;
    }
    return true;
}

CoverageReport mor_coverage(const NComplex& x) {
    CoverageReport report;
    const int N = x.N();
    HomologyTable table = homology_table(x);
    if (table.empty()) return report;
    auto [jlo, jhi] = mor_window(N, x.lo(), x.hi());
    for (const auto& entry : table) report.hits[entry.first] = 0;
    for (int j = jlo; j <= jhi; ++j) {
        for (int t = 0; t < N - 1; ++t) {
            auto it = report.hits.find(mor_slot(N, j, t));
            if (it != report.hits.end()) ++it->second;
        }
    }
    for (const auto& [key, count] : report.hits) {
        if (count == 0) report.uncovered.push_back(key);
        if (count > 1) report.repeated.push_back(key);
    }
    return report;
}

NhnResult nhn_check(const NComplex& x, int i, int r) {
    if (r < 1 || r >= x.N()) throw Error(ErrorKind::InvalidAmplitude, "nhn_check: amplitude outside 1..N-1", i, r);
    return NhnResult{homK_dim(mu(x.N(), r, i + r - 1, 1, x.field()), x), homology(x, i, r).dim};
}

std::vector<MuBlock> mu_decomposition(const NComplex& x) {
    std::vector<MuBlock> blocks;
    if (x.is_zero()) return blocks;
    const int N = x.N();
    std::map<std::pair<int, int>, long> cache;
    auto rho = [&](int a, int b) -> long {
        if (b - a >= N || a < x.lo() || b > x.hi()) return 0;
        auto it = cache.find({a, b});
        if (it != cache.end()) return it->second;
        const long value = static_cast<long>(rank(x.power(a, b - a)));
        cache[{a, b}] = value;
        return value;
    };
    for (int a = x.lo(); a <= x.hi(); ++a) {
        for (int b = a; b <= std::min(x.hi(), a + N - 1); ++b) {
            const long mult = rho(a, b) - rho(a - 1, b) - rho(a, b + 1) + rho(a - 1, b + 1);
            if (mult < 0) throw Error(ErrorKind::Internal, "negative interval multiplicity", a);
            if (mult > 0) blocks.push_back({b - a + 1, b, static_cast<std::size_t>(mult)});
        }
    }
    return blocks;
}

std::vector<MuBlock> homotopy_class(const NComplex& x) {
    std::map<std::pair<int, int>, std::size_t> merged;
    for (const auto& b : mu_decomposition(x)) {
        if (b.r < x.N()) merged[{b.s, b.r}] += b.m;
    }
    std::vector<MuBlock> out;
    for (const auto& [key, m] : merged) out.push_back({key.second, key.first, m});
    return out;
}

NComplex mu_sum(int N, const Field& field, const std::vector<MuBlock>& blocks) {
    NComplex sum(N, field);
    for (const auto& b : blocks) sum = direct_sum(sum, mu(N, b.r, b.s, b.m, field));
    return sum;
}

std::vector<MuBlock> suspend_class(int N, const Field& field, std::vector<MuBlock> blocks, int j) {
    for (int step = 0; step < std::abs(j); ++step) {
        NComplex x = mu_sum(N, field, blocks);
        NComplex y = j > 0 ? suspend(x).complex : cosuspend(x).complex;
        blocks = homotopy_class(y);
    }
    return blocks;
}

MuClass sigma_mu_class_printed(int j, int r, int N) {
    if (j % 2 != 0) return {N - r, (1 - j) * N / 2 - r - 1};
    return {r, (2 - j) * N / 2 - 1};
}

MuClass sigma_mu_class(int j, int r, int N) {
    if (j % 2 != 0) return {N - r, (3 - j) * N / 2 - r - 1};
    return {r, (2 - j) * N / 2 - 1};
}

std::optional<MuClass> sigma_mu_class_computed(int j, int r, int N, const Field& field) {
    auto blocks = suspend_class(N, field, {{r, N - 1, 1}}, j);
    if (blocks.size() != 1 || blocks.front().m != 1) return std::nullopt;
    return MuClass{blocks.front().r, blocks.front().s};
}

namespace {

bool same_blocks(const std::vector<MuBlock>& a, const std::vector<MuBlock>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k].r != b[k].r || a[k].s != b[k].s || a[k].m != b[k].m) return false;
    }
    return true;
}

// Σ^e f for even e: direct suspensions while |e| <= 2, otherwise Θ^{eN/2}.
ChainMap even_suspension(const ChainMap& f, int e) {
    const int N = f.source().N();
    if (e == 0) return f;
    if (e == 2) return suspend_map(suspend_map(f));
    if (e == -2) return cosuspend_map(cosuspend_map(f));
    return theta_map(f, e * N / 2);
}

}  // namespace

bool Smcatcp2Report::printed_holds() const {
    return std::all_of(items.begin(), items.end(), [](const Smcatcp2Item& it) { return it.printed; });
}

bool Smcatcp2Report::negated_holds() const {
    return std::all_of(items.begin(), items.end(), [](const Smcatcp2Item& it) { return it.negated; });
}

Smcatcp2Report smcatcp2_check(std::size_t c, int N, int i, const Field& field) {
    Smcatcp2Report report{N, i, {}};
    // Θ^t C = μ_1^{-t} k^c
    auto theta_c = [&](int t) { return std::vector<MuBlock>{{1, -t, c}}; };
    {
        const int t = i * N;
        auto lhs = suspend_class(N, field, {{N - 1, N - 1, c}}, 1 - 2 * i);
        report.items.push_back({"(1)", 0, t, same_blocks(lhs, theta_c(t)), same_blocks(lhs, theta_c(-t))});
    }
    {
        const int t = i * N - 1;
        auto lhs = suspend_class(N, field, {{1, N - 1, c}}, 2 - 2 * i);
        report.items.push_back({"(2)", 0, t, same_blocks(lhs, theta_c(t)), same_blocks(lhs, theta_c(-t))});
    }
    for (int r = 2; r <= N - 1; ++r) {
        NComplex small = mu(N, r - 1, N - 1, c, field);
        NComplex big = mu(N, r, N - 1, c, field);
        ChainMap inclusion(small, big);
        for (int d = N - r + 1; d <= N - 1; ++d) inclusion.set(d, Matrix::identity(field, c));
        NComplex cone_complex = cone(even_suspension(inclusion, 2 - 2 * i)).c;
        auto cls = homotopy_class(cone_complex);
        const int t = i * N - r;
        HomologyTable table = homology_table(cone_complex);
        const bool printed = same_blocks(cls, theta_c(t)) && table == homology_table(mu_sum(N, field, theta_c(t)));
        const bool negated = same_blocks(cls, theta_c(-t)) && table == homology_table(mu_sum(N, field, theta_c(-t)));
        report.items.push_back({"(3)", r, t, printed, negated});
    }
    return report;
}

NComplex mor_to_ncomplex(const MorObject& m, int N) {
    require_valid_mor(m);
    if (static_cast<int>(m.dims.size()) != N - 1) throw Error(ErrorKind::DimensionMismatch, "MorObject length differs from N-1");
    return NComplex(N, m.field, 1, m.dims, m.maps);
}

std::vector<std::size_t> smcat_decomposition(const MorObject& m, int N) {
    NComplex x = mor_to_ncomplex(m, N);
    for (std::size_t k = 0; k < m.maps.size(); ++k) {
        if (rank(m.maps[k]) != m.dims[k]) throw Error(ErrorKind::PreconditionFailed, "map " + std::to_string(k) + " is not injective");
    }
    std::vector<std::size_t> c(static_cast<std::size_t>(N - 1), 0);
    auto blocks = mu_decomposition(x);
    for (const auto& b : blocks) {
        if (b.s != N - 1) throw Error(ErrorKind::Internal, "summand of a split-mono object does not end in degree N-1");
        c[static_cast<std::size_t>(b.r - 1)] += b.m;
    }
    std::vector<MuBlock> expected;
    for (int t = 1; t <= N - 1; ++t) {
        if (c[static_cast<std::size_t>(t - 1)] > 0) expected.push_back({t, N - 1, c[static_cast<std::size_t>(t - 1)]});
    }
    if (homology_table(x) != homology_table(mu_sum(N, m.field, expected))) {
        throw Error(ErrorKind::Internal, "decomposition does not reproduce the homology table");
    }
    return c;
}

}  // namespace ncx
