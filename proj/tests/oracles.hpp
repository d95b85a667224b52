#pragma once

// Independent ground truth for the unit tests. Nothing here calls the
// library's linear algebra: F_p computations enumerate vectors outright.

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "ncx/ncomplex.hpp"

namespace oracle {

using Table = std::map<std::pair<int, int>, std::size_t>;
using IntMatrix = std::vector<std::vector<long>>;  // rows x cols, entries mod p

// H^i_{(q)}(μ_r^s k^m): nonzero iff p = s - i in [0, r) and p < q <= p + N - r.
inline Table mu_table(int N, int r, int s, std::size_t m) {
    Table t;
    for (int p = 0; p < r; ++p) {
        for (int q = p + 1; q <= std::min(N - 1, p + N - r); ++q) t[{s - p, q}] += m;
    }
    return t;
}

inline IntMatrix to_int(const ncx::Matrix& m) {
    IntMatrix out(m.rows(), std::vector<long>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.at(r, c).get_num().get_si();
    }
    return out;
}

inline std::vector<long> apply(const IntMatrix& m, std::size_t cols, const std::vector<long>& v, long p) {
    std::vector<long> out(m.size(), 0);
    for (std::size_t r = 0; r < m.size(); ++r) {
        for (std::size_t c = 0; c < cols; ++c) out[r] = (out[r] + m[r][c] * v[c]) % p;
    }
    return out;
}

/// Every vector of F_p^n.
inline std::vector<std::vector<long>> all_vectors(std::size_t n, long p) {
    std::vector<std::vector<long>> out{std::vector<long>(n, 0)};
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<std::vector<long>> next;
        for (const auto& v : out) {
            for (long a = 0; a < p; ++a) {
                auto w = v;
                w[k] = a;
                next.push_back(std::move(w));
            }
        }
        out = std::move(next);
    }
    return out;
}

inline std::size_t log_p(std::size_t count, long p) {
    std::size_t d = 0;
    while (count > 1) {
        count /= static_cast<std::size_t>(p);
        ++d;
    }
    return d;
}

/// v -> d^{i+r-1} ... d^i v, by repeated application.
inline std::vector<long> power(const ncx::NComplex& x, int i, int r, std::vector<long> v, long p) {
    for (int k = 0; k < r; ++k) v = apply(to_int(x.d(i + k)), x.dim(i + k), v, p);
    return v;
}

/// dim H^i_{(r)} over F_p by counting |Z| and |B|.
inline std::size_t homology_dim(const ncx::NComplex& x, int i, int r, long p) {
    const int N = x.N();
    std::size_t z = 0;
    for (const auto& v : all_vectors(x.dim(i), p)) {
        auto w = power(x, i, r, v, p);
        bool zero = true;
        for (long a : w) zero = zero && a == 0;
        z += zero ? 1 : 0;
    }
    std::set<std::vector<long>> b;
    for (const auto& v : all_vectors(x.dim(i - (N - r)), p)) b.insert(power(x, i - (N - r), N - r, v, p));
    return log_p(z, p) - log_p(b.size(), p);
}

inline Table homology_table(const ncx::NComplex& x, long p) {
    Table t;
    if (x.is_zero()) return t;
    for (int i = x.lo(); i <= x.hi(); ++i) {
        for (int r = 1; r < x.N(); ++r) {
            if (std::size_t d = homology_dim(x, i, r, p)) t[{i, r}] = d;
        }
    }
    return t;
}

/// Rank over F_p as log_p of the size of the column span.
inline std::size_t rank(const ncx::Matrix& m, long p) {
    std::set<std::vector<long>> image;
    const IntMatrix a = to_int(m);
    for (const auto& v : all_vectors(m.cols(), p)) image.insert(apply(a, m.cols(), v, p));
    return log_p(image.size(), p);
}

}  // namespace oracle
