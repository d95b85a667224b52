#include "ncx/random.hpp"

#include <algorithm>

namespace ncx {

mpq_class random_scalar(const Field& field, Rng& rng) {
    if (!field.is_rational()) {
        std::uniform_int_distribution<long> pick(0, static_cast<long>(field.characteristic()) - 1);
        return field.from_int(pick(rng));
    }
    static const long numerators[] = {-2, -1, -1, 0, 0, 0, 1, 1, 1, 2, 3};
    std::uniform_int_distribution<std::size_t> pick(0, std::size(numerators) - 1);
    mpq_class v(numerators[pick(rng)]);
    if (std::uniform_int_distribution<int>(0, 5)(rng) == 0) v /= 2;
    return v;
}

Matrix random_matrix(const Field& field, std::size_t rows, std::size_t cols, Rng& rng) {
    Matrix m(field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, random_scalar(field, rng));
    }
    return m;
}

Matrix random_invertible(const Field& field, std::size_t n, Rng& rng) {
    Matrix l = Matrix::identity(field, n);
    Matrix u = Matrix::identity(field, n);
    Matrix d(field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            l.set(i, j, random_scalar(field, rng));
            u.set(j, i, random_scalar(field, rng));
        }
        mpq_class diag;
        do {
            diag = field.reduce(random_scalar(field, rng));
        } while (sgn(diag) == 0);
        d.set(i, i, diag);
    }
    return l * u * d;
}

GeneratedComplex generate_random(const GeneratorParams& params, Rng& rng) {
    const int N = params.N;
    const int lo = params.min_degree;
    const int hi = params.min_degree + params.window - 1;
    std::vector<std::size_t> dims(static_cast<std::size_t>(params.window), 0);
    GeneratedComplex out{NComplex(N, params.field), {}};
    NComplex sum(N, params.field);
    const int attempts = std::uniform_int_distribution<int>(1, std::max(1, params.max_blocks))(rng);
    for (int k = 0; k < attempts; ++k) {
        const int r = std::uniform_int_distribution<int>(1, std::min(N, params.window))(rng);
        const int s = std::uniform_int_distribution<int>(lo + r - 1, hi)(rng);
        const std::size_t m = std::uniform_int_distribution<int>(0, 3)(rng) == 0 ? 2 : 1;
        bool fits = true;
        for (int i = s - r + 1; i <= s; ++i) fits = fits && dims[static_cast<std::size_t>(i - lo)] + m <= params.max_dim;
        if (!fits) continue;
        for (int i = s - r + 1; i <= s; ++i) dims[static_cast<std::size_t>(i - lo)] += m;
        out.blocks.push_back({r, s, m});
        sum = direct_sum(sum, mu(N, r, s, m, params.field));
    }
    out.complex = random_isomorphism(sum, rng).target();
    return out;
}

ChainMap random_isomorphism(const NComplex& x, Rng& rng) {
    if (x.is_zero()) return ChainMap::identity(x);
    std::vector<Matrix> p, p_inv;
    for (int i = x.lo(); i <= x.hi(); ++i) {
        p.push_back(random_invertible(x.field(), x.dim(i), rng));
        p_inv.push_back(inverse(p.back()));
    }
    std::vector<Matrix> diffs;
    for (int i = x.lo(); i < x.hi(); ++i) {
        const auto k = static_cast<std::size_t>(i - x.lo());
        diffs.push_back(p[k + 1] * x.d(i) * p_inv[k]);
    }
    NComplex y(x.N(), x.field(), x.lo(), x.dims(), std::move(diffs));
    return ChainMap(x, y, x.lo(), std::move(p));
}

ChainMap random_chain_map(const NComplex& x, const NComplex& y, Rng& rng) {
    ChainMap f(x, y);
    for (const auto& g : chain_map_basis(x, y)) {
        mpq_class c = random_scalar(x.field(), rng);
        if (sgn(c) != 0) f = f + g.scaled(c);
    }
    return f;
}

ChainMap random_null_homotopic(const NComplex& x, const NComplex& y, Rng& rng) {
    HomotopyWitness s;
    if (x.is_zero() || y.is_zero()) return ChainMap(x, y);
    s.min_degree = x.lo();
    for (int k = x.lo(); k <= x.hi(); ++k) s.maps.push_back(random_matrix(x.field(), y.dim(k - x.N() + 1), x.dim(k), rng));
    return apply_homotopy(x, y, s);
}

ShortExactSeq random_ses(const NComplex& w, const NComplex& y, Rng& rng) {
    ChainMap h = random_chain_map(w, y, rng);
    std::vector<Subspace> images;
    if (!y.is_zero()) {
        for (int i = y.lo(); i <= y.hi(); ++i) images.push_back(image_basis(h.at(i)));
    }
    NComplex x = subcomplex(y, y.lo(), images);
    NComplex z = quotient_complex(y, y.lo(), images);
    ChainMap alpha(x, y);
    ChainMap beta(y, z);
    for (std::size_t k = 0; k < images.size(); ++k) {
        const int i = y.lo() + static_cast<int>(k);
        alpha.set(i, images[k].basis());
        beta.set(i, quotient(y.dim(i), images[k]).projection);
    }
    return {alpha, beta};
}

}  // namespace ncx
