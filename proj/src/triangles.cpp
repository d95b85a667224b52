#include "ncx/triangles.hpp"

#include <algorithm>
#include <functional>

namespace ncx {

namespace {

using BlockFn = std::function<std::optional<Matrix>(std::size_t, std::size_t)>;

Matrix assemble(const Field& field, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols, const BlockFn& block) {
    BlockMatrix m(field, rows, cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (rows[r] == 0 || cols[c] == 0) continue;
            if (auto b = block(r, c)) m.set(r, c, *b);
        }
    }
    return m.build();
}

// result^m = X^{m+a} ⊕ ... ⊕ X^{m+b}
struct Layout {
    const NComplex& x;
    int a;
    int b;

    std::size_t count() const { return static_cast<std::size_t>(b - a + 1); }
    std::vector<std::size_t> sizes(int m) const {
        std::vector<std::size_t> s;
        for (int i = m + a; i <= m + b; ++i) s.push_back(x.dim(i));
        return s;
    }
    int lo() const { return x.lo() - b; }
    int hi() const { return x.hi() - a; }
};

using DiffBlockFn = std::function<std::optional<Matrix>(int, std::size_t, std::size_t)>;

BlockComplex build(const Layout& layout, const DiffBlockFn& block) {
    const NComplex& x = layout.x;
    BlockComplex out{NComplex(x.N(), x.field()), {}};
    if (x.is_zero()) return out;
    const int lo = layout.lo(), hi = layout.hi();
    std::vector<std::size_t> dims;
    std::vector<Matrix> diffs;
    for (int m = lo; m <= hi; ++m) {
        auto sizes = layout.sizes(m);
        std::size_t total = 0;
        for (auto s : sizes) total += s;
        dims.push_back(total);
        if (m < hi) {
            diffs.push_back(assemble(x.field(), layout.sizes(m + 1), sizes, [&](std::size_t r, std::size_t c) { return block(m, r, c); }));
        }
    }
    out.complex = NComplex(x.N(), x.field(), lo, std::move(dims), std::move(diffs));
    for (int m = out.complex.lo(); !out.complex.is_zero() && m <= out.complex.hi(); ++m) {
        for (int i = m + layout.a; i <= m + layout.b; ++i) {
            if (x.dim(i) > 0) out.blocks.push_back({m, i});
        }
    }
    return out;
}

// Degreewise map between two block layouts over the same window of degrees.
ChainMap build_map(const NComplex& source, const NComplex& target, const std::function<std::vector<std::size_t>(int)>& source_sizes,
                   const std::function<std::vector<std::size_t>(int)>& target_sizes, const DiffBlockFn& block) {
    ChainMap f(source, target);
    if (source.is_zero() || target.is_zero()) return f;
    for (int m = f.lo(); m <= f.hi(); ++m) {
        f.set(m, assemble(source.field(), target_sizes(m), source_sizes(m), [&](std::size_t r, std::size_t c) { return block(m, r, c); }));
    }
    return f;
}

Matrix neg_power(const NComplex& x, int i, int r) { return -x.power(i, r); }

}  // namespace

BlockComplex suspend(const NComplex& x) {
    const int N = x.N();
    Layout layout{x, 1, N - 1};
    return build(layout, [&](int m, std::size_t r, std::size_t c) -> std::optional<Matrix> {
        const std::size_t last = static_cast<std::size_t>(N - 2);
        if (r < last) {
            if (c == r + 1) return Matrix::identity(x.field(), x.dim(m + 1 + static_cast<int>(c)));
            return std::nullopt;
        }
        return neg_power(x, m + 1 + static_cast<int>(c), N - 1 - static_cast<int>(c));
    });
}

BlockComplex cosuspend(const NComplex& x) {
    const int N = x.N();
    Layout layout{x, 1 - N, -1};
    return build(layout, [&](int m, std::size_t r, std::size_t c) -> std::optional<Matrix> {
        if (c == 0) return neg_power(x, m - N + 1, static_cast<int>(r) + 1);
        if (c == r + 1) return Matrix::identity(x.field(), x.dim(m - N + 1 + static_cast<int>(c)));
        return std::nullopt;
    });
}

namespace {

BlockComplex uniserial(const NComplex& x, int a, int b) {
    Layout layout{x, a, b};
    return build(layout, [&](int m, std::size_t r, std::size_t c) -> std::optional<Matrix> {
        if (c == r + 1) return Matrix::identity(x.field(), x.dim(m + a + static_cast<int>(c)));
        return std::nullopt;
    });
}

std::function<std::vector<std::size_t>(int)> sizes_of(const NComplex& x, int a, int b) {
    return [&x, a, b](int m) {
        std::vector<std::size_t> s;
        for (int i = m + a; i <= m + b; ++i) s.push_back(x.dim(i));
        return s;
    };
}

}  // namespace

BlockComplex pcover_complex(const NComplex& x) { return uniserial(x, 1 - x.N(), 0); }
BlockComplex ihull_complex(const NComplex& x) { return uniserial(x, 0, x.N() - 1); }

ChainMap suspend_map(const ChainMap& f) {
    const NComplex& a = f.source();
    const NComplex& b = f.target();
    const int N = a.N();
    return build_map(suspend(a).complex, suspend(b).complex, sizes_of(a, 1, N - 1), sizes_of(b, 1, N - 1),
                     [&](int m, std::size_t r, std::size_t c) -> std::optional<Matrix> {
                         if (r != c) return std::nullopt;
                         return f.at(m + 1 + static_cast<int>(c));
                     });
}

ChainMap cosuspend_map(const ChainMap& f) {
    const NComplex& a = f.source();
    const NComplex& b = f.target();
    const int N = a.N();
    return build_map(cosuspend(a).complex, cosuspend(b).complex, sizes_of(a, 1 - N, -1), sizes_of(b, 1 - N, -1),
                     [&](int m, std::size_t r, std::size_t c) -> std::optional<Matrix> {
                         if (r != c) return std::nullopt;
                         return f.at(m - N + 1 + static_cast<int>(c));
                     });
}

ChainMap theta_map(const ChainMap& f, int t) {
    ChainMap g(theta_shift(f.source(), t), theta_shift(f.target(), t));
    for (int i = g.lo(); i <= g.hi(); ++i) g.set(i, f.at(i + t));
    return g;
}

PCover pcover(const NComplex& x) {
    const int N = x.N();
    PCover out{pcover_complex(x), ChainMap(x, x), ChainMap(x, x)};
    NComplex sx = cosuspend(x).complex;
    out.epsilon = build_map(sx, out.p.complex, sizes_of(x, 1 - N, -1), sizes_of(x, 1 - N, 0),
                            [&](int m, std::size_t r, std::size_t c) -> std::optional<Matrix> {
                                const int src = m - N + 1 + static_cast<int>(c);
                                if (r == c) return Matrix::identity(x.field(), x.dim(src));
                                if (r == c + 1) return neg_power(x, src, 1);
                                return std::nullopt;
                            });
    out.rho = build_map(out.p.complex, x, sizes_of(x, 1 - N, 0), sizes_of(x, 0, 0), [&](int m, std::size_t, std::size_t c) {
        return std::optional<Matrix>(x.power(m - N + 1 + static_cast<int>(c), N - 1 - static_cast<int>(c)));
    });
    return out;
}

IHull ihull(const NComplex& x) {
    const int N = x.N();
    IHull out{ihull_complex(x), ChainMap(x, x), ChainMap(x, x)};
    out.sigma_epsilon = build_map(x, out.i.complex, sizes_of(x, 0, 0), sizes_of(x, 0, N - 1), [&](int m, std::size_t r, std::size_t) {
        return std::optional<Matrix>(x.power(m, static_cast<int>(r)));
    });
    out.sigma_rho = build_map(out.i.complex, suspend(x).complex, sizes_of(x, 0, N - 1), sizes_of(x, 1, N - 1),
                              [&](int m, std::size_t r, std::size_t c) -> std::optional<Matrix> {
                                  const int src = m + static_cast<int>(c);
                                  if (c == r) return neg_power(x, src, 1);
                                  if (c == r + 1) return Matrix::identity(x.field(), x.dim(src));
                                  return std::nullopt;
                              });
    return out;
}

Triangle cone(const ChainMap& f) {
    require_valid_map(f);
    const NComplex& a = f.source();
    const NComplex& b = f.target();
    const int N = a.N();
    const Field& field = a.field();
    auto cone_sizes = [&](int m) {
        std::vector<std::size_t> s{b.dim(m)};
        for (int i = m + 1; i <= m + N - 1; ++i) s.push_back(a.dim(i));
        return s;
    };
    NComplex sa = suspend(a).complex;
    Triangle t{a, b, NComplex(N, field), f, ChainMap(b, b), ChainMap(a, a), ChainMap(a, a), {}};

    int lo = 0, hi = -1;
    if (!a.is_zero()) {
        lo = a.lo() - N + 1;
        hi = a.hi() - 1;
    }
    if (!b.is_zero()) {
        lo = a.is_zero() ? b.lo() : std::min(lo, b.lo());
        hi = a.is_zero() ? b.hi() : std::max(hi, b.hi());
    }
    if (hi >= lo) {
        std::vector<std::size_t> dims;
        std::vector<Matrix> diffs;
        for (int m = lo; m <= hi; ++m) {
            auto sizes = cone_sizes(m);
            std::size_t total = 0;
            for (auto s : sizes) total += s;
            dims.push_back(total);
            if (m == hi) break;
            diffs.push_back(assemble(field, cone_sizes(m + 1), sizes, [&](std::size_t r, std::size_t c) -> std::optional<Matrix> {
                if (r == 0) {
                    if (c == 0) return b.d(m);
                    if (c == 1) return f.at(m + 1);
                    return std::nullopt;
                }
                // ΣA part, shifted by one block.
                const std::size_t rr = r - 1;
                if (c == 0) return std::nullopt;
                const std::size_t cc = c - 1;
                if (rr < static_cast<std::size_t>(N - 2)) {
                    if (cc == rr + 1) return Matrix::identity(field, a.dim(m + 1 + static_cast<int>(cc)));
                    return std::nullopt;
                }
                return neg_power(a, m + 1 + static_cast<int>(cc), N - 1 - static_cast<int>(cc));
            }));
        }
        t.c = NComplex(N, field, lo, std::move(dims), std::move(diffs));
    }
    for (int m = t.c.lo(); !t.c.is_zero() && m <= t.c.hi(); ++m) {
        if (b.dim(m) > 0) t.blocks.push_back({m, m});
        for (int i = m + 1; i <= m + N - 1; ++i) {
            if (a.dim(i) > 0) t.blocks.push_back({m, i});
        }
    }

    t.u = build_map(b, t.c, sizes_of(b, 0, 0), cone_sizes, [&](int m, std::size_t r, std::size_t) -> std::optional<Matrix> {
        if (r == 0) return Matrix::identity(field, b.dim(m));
        return std::nullopt;
    });
    t.v = build_map(t.c, sa, cone_sizes, sizes_of(a, 1, N - 1), [&](int m, std::size_t r, std::size_t c) -> std::optional<Matrix> {
        if (c == r + 1) return Matrix::identity(field, a.dim(m + 1 + static_cast<int>(r)));
        return std::nullopt;
    });
    NComplex ia = ihull_complex(a).complex;
    t.psi = build_map(ia, t.c, sizes_of(a, 0, N - 1), cone_sizes, [&](int m, std::size_t r, std::size_t c) -> std::optional<Matrix> {
        if (r == 0) {
            if (c == 0) return f.at(m);
            return std::nullopt;
        }
        const int src = m + static_cast<int>(c);
        if (c + 1 == r) return neg_power(a, src, 1);
        if (c == r) return Matrix::identity(field, a.dim(src));
        return std::nullopt;
    });
    return t;
}

ChainMap sigma2_theta_iso(const NComplex& x) {
    const int N = x.N();
    NComplex source = suspend(x).complex;
    NComplex target = theta_shift(cosuspend(x).complex, N);
    return build_map(source, target, sizes_of(x, 1, N - 1), sizes_of(x, 1, N - 1), [&](int m, std::size_t r, std::size_t c) -> std::optional<Matrix> {
        if (r < c) return std::nullopt;
        return x.power(m + 1 + static_cast<int>(c), static_cast<int>(r - c));
    });
}

std::optional<MapError> check_exact(const ShortExactSeq& ses) {
    if (auto err = validate_map(ses.alpha)) return err;
    if (auto err = validate_map(ses.beta)) return err;
    if (ses.alpha.target() != ses.beta.source()) return MapError{ErrorKind::CompositionMismatch, 0, "alpha and beta do not compose"};
    const NComplex& x = ses.alpha.source();
    const NComplex& y = ses.alpha.target();
    const NComplex& z = ses.beta.target();
    int lo = 0, hi = -1;
    bool any = false;
    for (const NComplex* c : {&x, &y, &z}) {
        if (c->is_zero()) continue;
        lo = any ? std::min(lo, c->lo()) : c->lo();
        hi = any ? std::max(hi, c->hi()) : c->hi();
        any = true;
    }
    for (int i = lo; i <= hi; ++i) {
        Matrix a = ses.alpha.at(i);
        Matrix b = ses.beta.at(i);
        if (y.dim(i) != x.dim(i) + z.dim(i)) return MapError{ErrorKind::NotExact, i, "dimensions do not add up"};
        if (rank(a) != x.dim(i)) return MapError{ErrorKind::NotExact, i, "alpha is not injective"};
        if (rank(b) != z.dim(i)) return MapError{ErrorKind::NotExact, i, "beta is not surjective"};
        if (!(b * a).is_zero()) return MapError{ErrorKind::NotExact, i, "beta o alpha is nonzero"};
    }
    return std::nullopt;
}

EmbeddedTriangle embed_ses_as_triangle(const ShortExactSeq& ses) {
    if (auto err = check_exact(ses)) throw Error(ErrorKind::NotExact, err->message, err->degree);
    const NComplex& x = ses.alpha.source();
    const NComplex& z = ses.beta.target();
    const int N = x.N();
    EmbeddedTriangle out{cone(ses.alpha), ChainMap(z, z)};
    const NComplex& y = ses.alpha.target();
    out.comparison = build_map(
        out.triangle.c, z,
        [&](int m) {
            std::vector<std::size_t> s{y.dim(m)};
            for (int i = m + 1; i <= m + N - 1; ++i) s.push_back(x.dim(i));
            return s;
        },
        sizes_of(z, 0, 0),
        [&](int m, std::size_t, std::size_t c) -> std::optional<Matrix> {
            if (c == 0) return ses.beta.at(m);
            return std::nullopt;
        });
    require_valid_map(out.comparison);
    return out;
}

namespace {

struct Window {
    int lo = 0;
    int hi = -1;
};

Window union_window(const NComplex& x, const NComplex& y) {
    if (x.is_zero()) return y.is_zero() ? Window{} : Window{y.lo(), y.hi()};
    if (y.is_zero()) return {x.lo(), x.hi()};
    return {std::min(x.lo(), y.lo()), std::max(x.hi(), y.hi())};
}

Matrix flatten(const ChainMap& f, Window w) {
    std::vector<mpq_class> entries;
    for (int i = w.lo; i <= w.hi; ++i) {
        Matrix m = f.at(i);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t c = 0; c < m.cols(); ++c) entries.push_back(m.at(r, c));
        }
    }
    return Matrix::column(f.source().field(), entries);
}

bool in_span(const ChainMap& f, const std::vector<ChainMap>& candidates) {
    Window w = union_window(f.source(), f.target());
    Matrix target = flatten(f, w);
    if (target.is_zero()) return true;
    if (candidates.empty()) return false;
    Matrix columns = flatten(candidates.front(), w);
    for (std::size_t k = 1; k < candidates.size(); ++k) columns = Matrix::hstack(columns, flatten(candidates[k], w));
    return solve(columns, target).has_value();
}

}  // namespace

bool factors_through_source(const ChainMap& f, const ChainMap& e) {
    if (e.source() != f.source()) throw Error(ErrorKind::CompositionMismatch, "factors_through_source: sources differ");
    std::vector<ChainMap> composites;
    for (const auto& g : chain_map_basis(e.target(), f.target())) composites.push_back(compose(g, e));
    return in_span(f, composites);
}

bool factors_through_target(const ChainMap& f, const ChainMap& p) {
    if (p.target() != f.target()) throw Error(ErrorKind::CompositionMismatch, "factors_through_target: targets differ");
    std::vector<ChainMap> composites;
    for (const auto& g : chain_map_basis(f.source(), p.source())) composites.push_back(compose(p, g));
    return in_span(f, composites);
}

}  // namespace ncx
