#include "ncx/qis.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ncx {

namespace {

struct Window {
    int lo = 0;
    int hi = -1;
};

Window support(std::initializer_list<const NComplex*> complexes) {
    Window w;
    bool any = false;
    for (const NComplex* c : complexes) {
        if (c->is_zero()) continue;
        w.lo = any ? std::min(w.lo, c->lo()) : c->lo();
        w.hi = any ? std::max(w.hi, c->hi()) : c->hi();
        any = true;
    }
    return w;
}

// Homology groups of one complex, computed on demand.
class HomologyCache {
public:
    explicit HomologyCache(const NComplex& x) : x_(x) {}
    const HomologyGroup& at(int i, int r) {
        auto it = groups_.find({i, r});
        if (it == groups_.end()) it = groups_.emplace(std::make_pair(i, r), homology(x_, i, r)).first;
        return it->second;
    }
    const NComplex& complex() const { return x_; }

private:
    const NComplex& x_;
    std::map<std::pair<int, int>, HomologyGroup> groups_;
};

// Class map of a degreewise linear map phi : X^n -> Y^{n'} sending Z_{(a)} to Z_{(b)}.
Matrix class_map(const HomologyGroup& source, const HomologyGroup& target, const Matrix& phi, const char* what) {
    Matrix images = phi * source.representatives;
    if (!target.cycles.contains(images)) throw Error(ErrorKind::Internal, std::string(what) + ": cycles not preserved", source.degree, source.amplitude);
    if (!target.boundaries.contains(phi * source.boundaries.basis())) {
        throw Error(ErrorKind::Internal, std::string(what) + ": boundaries not preserved", source.degree, source.amplitude);
    }
    return target.classes_of(images);
}

Matrix d_map(HomologyCache& h, int n, int a, int p, int b) {
    return class_map(h.at(n, a), h.at(n + p, b), h.complex().power(n, p), "induced_d_map");
}

Matrix chain_class_map(HomologyCache& source, HomologyCache& target, const ChainMap& f, int i, int r) {
    return class_map(source.at(i, r), target.at(i, r), f.at(i), "induced_homology_map");
}

}  // namespace

Matrix induced_homology_map(const ChainMap& f, int i, int r) {
    HomologyCache source(f.source()), target(f.target());
    return chain_class_map(source, target, f, i, r);
}

Matrix induced_d_map(const NComplex& x, int n, int a, int p, int b) {
    HomologyCache h(x);
    return d_map(h, n, a, p, b);
}

bool acyclic(const NComplex& x) {
    const bool by_homology = homology_table(x).empty();
    if (by_homology != induced_d_surjective(x)) throw Error(ErrorKind::Internal, "acyclicity criteria disagree");
    return by_homology;
}

bool is_qis(const ChainMap& f) {
    require_valid_map(f);
    const NComplex& x = f.source();
    const NComplex& y = f.target();
    HomologyCache hx(x), hy(y);
    bool iso = true;
    Window w = support({&x, &y});
    for (int i = w.lo; i <= w.hi && iso; ++i) {
        for (int r = 1; r < x.N() && iso; ++r) {
            Matrix m = chain_class_map(hx, hy, f, i, r);
            iso = m.rows() == m.cols() && rank(m) == m.rows();
        }
    }
    if (iso != acyclic(cone(f).c)) throw Error(ErrorKind::Internal, "quasi-isomorphism criteria disagree");
    return iso;
}

bool ExactnessReport::exact() const { return failures() == 0; }

std::size_t ExactnessReport::failures() const {
    return static_cast<std::size_t>(std::count_if(nodes.begin(), nodes.end(), [](const ExactnessNode& n) { return !n.exact; }));
}

namespace {

ExactnessNode make_node(int degree, int amplitude, std::string object, const Matrix& in, const Matrix& out) {
    ExactnessNode node{degree, amplitude, std::move(object), in.rows(), rank(in), 0, false};
    node.dim_ker_out = out.cols() - rank(out);
    node.exact = (out * in).is_zero() && node.rank_in == node.dim_ker_out;
    return node;
}

}  // namespace

ExactnessReport les_single(const NComplex& x, int l, int m) {
    const int N = x.N();
    if (l < 1 || m < 1 || l + m >= N) {
        throw Error(ErrorKind::InvalidParameters, "les_single needs l, m >= 1 and l + m < N (N=" + std::to_string(N) + ")");
    }
    ExactnessReport report;
    if (x.is_zero()) return report;
    HomologyCache h(x);
    // One period from (i, m): positions, amplitudes, and the d-power to the next node.
    struct Step {
        int offset;
        int amplitude;
        int power;
    };
    const Step period[6] = {{0, m, 0}, {0, l + m, m}, {m, l, 0}, {m, N - m, l}, {l + m, N - l - m, 0}, {l + m, N - l, N - l - m}};
    auto node_at = [&](int i, int k) {
        const int q = (k >= 0 ? k / 6 : -((-k + 5) / 6));
        const int t = k - 6 * q;
        return std::make_tuple(i + q * N + period[t].offset, period[t].amplitude, period[t].power);
    };
    const int lo = x.lo() - N, hi = x.hi() + N;
    for (int residue = 0; residue < N; ++residue) {
        const int base = lo + residue;
        for (int k = -6;; ++k) {
            auto [deg, amp, power] = node_at(base, k);
            if (deg > hi) break;
            if (deg < lo) continue;
            auto [pdeg, pamp, ppower] = node_at(base, k - 1);
            Matrix in = d_map(h, pdeg, pamp, ppower, amp);
            Matrix out = d_map(h, deg, amp, power, std::get<1>(node_at(base, k + 1)));
            if (in.rows() == 0) continue;
            report.nodes.push_back(make_node(deg, amp, "X", in, out));
        }
    }
    std::stable_sort(report.nodes.begin(), report.nodes.end(), [](const ExactnessNode& a, const ExactnessNode& b) {
        return std::tie(a.degree, a.amplitude) < std::tie(b.degree, b.amplitude);
    });
    return report;
}

namespace {

Matrix connecting_impl(const ShortExactSeq& ses, HomologyCache& hz, HomologyCache& hx, int i, int r) {
    const NComplex& y = ses.alpha.target();
    const HomologyGroup& source = hz.at(i, r);
    const HomologyGroup& target = hx.at(i + r, y.N() - r);
    Matrix result(y.field(), target.dim, source.dim);
    if (source.dim == 0 || target.dim == 0) return result;
    Matrix beta = ses.beta.at(i);
    Matrix alpha = ses.alpha.at(i + r);
    auto push = [&](const Matrix& lift) {
        Matrix w = y.power(i, r) * lift;
        auto x = solve(alpha, w);
        if (!x) throw Error(ErrorKind::LiftFailure, "d^r of the lift is not in the image of alpha", i, r);
        if (!(hx.complex().power(i + r, y.N() - r) * *x).is_zero()) throw Error(ErrorKind::Internal, "connecting image is not a cycle", i, r);
        return target.classes_of(*x);
    };
    auto lift = solve(beta, source.representatives);
    if (!lift) throw Error(ErrorKind::LiftFailure, "beta is not surjective", i, r);
    result = push(*lift);
    // Re-lift through a perturbation by alpha(e).
    Matrix e(y.field(), ses.alpha.source().dim(i), source.dim);
    for (std::size_t row = 0; row < e.rows(); ++row) {
        for (std::size_t col = 0; col < e.cols(); ++col) e.set(row, col, mpq_class(static_cast<long>(row + 2 * col + 1)));
    }
    if (push(*lift + ses.alpha.at(i) * e) != result) throw Error(ErrorKind::Internal, "connecting map depends on the lift", i, r);
    return result;
}

}  // namespace

Matrix connecting(const ShortExactSeq& ses, int i, int r) {
    if (auto err = check_exact(ses)) throw Error(ErrorKind::NotExact, err->message, err->degree);
    const int N = ses.alpha.source().N();
    if (r < 1 || r >= N) throw Error(ErrorKind::InvalidAmplitude, "connecting: amplitude outside 1..N-1", i, r);
    HomologyCache hz(ses.beta.target()), hx(ses.alpha.source());
    return connecting_impl(ses, hz, hx, i, r);
}

ExactnessReport les_ses_check(const ShortExactSeq& ses) {
    if (auto err = check_exact(ses)) throw Error(ErrorKind::NotExact, err->message, err->degree);
    const NComplex& x = ses.alpha.source();
    const NComplex& y = ses.alpha.target();
    const NComplex& z = ses.beta.target();
    const int N = x.N();
    ExactnessReport report;
    Window w = support({&x, &y, &z});
    if (w.hi < w.lo) return report;
    HomologyCache hx(x), hy(y), hz(z);
    const char* names[3] = {"X", "Y", "Z"};
    // Map leaving object `obj` at (i, r).
    auto out_map = [&](int obj, int i, int r) -> Matrix {
        if (obj == 0) return chain_class_map(hx, hy, ses.alpha, i, r);
        if (obj == 1) return chain_class_map(hy, hz, ses.beta, i, r);
        return connecting_impl(ses, hz, hx, i, r);
    };
    auto in_map = [&](int obj, int i, int r) -> Matrix {
        if (obj == 1) return chain_class_map(hx, hy, ses.alpha, i, r);
        if (obj == 2) return chain_class_map(hy, hz, ses.beta, i, r);
        return connecting_impl(ses, hz, hx, i - (N - r), N - r);
    };
    const int lo = w.lo - N, hi = w.hi + N;
    for (int i = lo; i <= hi; ++i) {
        for (int r = 1; r < N; ++r) {
            for (int obj = 0; obj < 3; ++obj) {
                Matrix in = in_map(obj, i, r);
                if (in.rows() == 0) continue;
                report.nodes.push_back(make_node(i, r, names[obj], in, out_map(obj, i, r)));
            }
        }
    }
    return report;
}

bool is_pullback_square(const ExactSquare& sq) {
    if (sq.y * sq.f != sq.g * sq.x) throw Error(ErrorKind::NotCommutative, "square does not commute");
    Matrix left = Matrix::vstack(sq.f, sq.x);
    Matrix right = Matrix::hstack(sq.y, -sq.g);
    return rank(left) == left.cols() && rank(left) == right.cols() - rank(right);
}

bool is_exact_square(const ExactSquare& sq) {
    if (!is_pullback_square(sq)) return false;
    return rank(Matrix::hstack(sq.y, -sq.g)) == sq.y.rows();
}

ExactSquare paste(const ExactSquare& left, const ExactSquare& right) {
    if (left.y != right.x) throw Error(ErrorKind::CompositionMismatch, "paste: shared edge differs");
    return ExactSquare{right.f * left.f, left.x, right.y, right.g * left.g};
}

ElementaryMorphism elementary(const NComplex& x, const Matrix& u, int i) {
    const int N = x.N();
    const Field& field = x.field();
    if (u.rows() != x.dim(i)) throw Error(ErrorKind::DimensionMismatch, "u must map into X^i", i);
    // ys[r] = Y^{i-r}; u_maps[r] = u^{i-r}; dprime[r] = d'^{i-r-1} : Y^{i-r-1} -> Y^{i-r}.
    std::vector<std::size_t> ydims{u.cols()};
    std::vector<Matrix> u_maps{u};
    std::vector<Matrix> dprime(static_cast<std::size_t>(N - 1));
    // Embedding of Y^{i-r} into X^{i-r} ⊕ ... ⊕ X^{i-1} ⊕ U.
    Matrix embed = Matrix::identity(field, u.cols());
    for (int r = 0; r <= N - 2; ++r) {
        const int deg = i - r - 1;
        Matrix diff = Matrix::hstack(x.d(deg), -u_maps.back());
        Subspace k = kernel_basis(diff);
        const std::size_t xd = x.dim(deg);
        std::vector<std::size_t> top, bottom;
        for (std::size_t row = 0; row < diff.cols(); ++row) (row < xd ? top : bottom).push_back(row);
        u_maps.push_back(k.basis().select_rows(top));
        dprime[static_cast<std::size_t>(r)] = k.basis().select_rows(bottom);
        ydims.push_back(k.dim());
        embed = Matrix::block_diagonal(Matrix::identity(field, xd), embed) * k.basis();
    }
    // d'^{i-N} : x -> (d x, d^2 x, ..., d^{N-1} x, 0) through the pull-backs.
    Matrix rhs(field, 0, x.dim(i - N));
    for (int p = 1; p <= N - 1; ++p) rhs = Matrix::vstack(rhs, x.power(i - N, p));
    rhs = Matrix::vstack(rhs, Matrix(field, u.cols(), x.dim(i - N)));
    auto first = solve(embed, rhs);
    if (!first) throw Error(ErrorKind::Internal, "no d'^{i-N} through the pull-backs", i);

    const int lo = std::min(x.is_zero() ? i - N : x.lo(), i - N);
    const int hi = std::max(x.is_zero() ? i + 1 : x.hi(), i + 1);
    auto dim_at = [&](int j) -> std::size_t {
        if (j >= i - N + 1 && j <= i) return ydims[static_cast<std::size_t>(i - j)];
        return x.dim(j);
    };
    auto diff_at = [&](int j) -> Matrix {
        if (j == i - N) return *first;
        if (j >= i - N + 1 && j <= i - 1) return dprime[static_cast<std::size_t>(i - j - 1)];
        if (j == i) return x.d(i) * u;
        return x.d(j);
    };
    std::vector<std::size_t> dims;
    std::vector<Matrix> diffs;
    for (int j = lo; j <= hi; ++j) {
        dims.push_back(dim_at(j));
        if (j < hi) diffs.push_back(diff_at(j));
    }
    ElementaryMorphism out{NComplex(N, field, lo, std::move(dims), std::move(diffs)), ChainMap(x, x), {}, {}};
    out.p = ChainMap(out.complex, x);
    for (int j = lo; j <= hi; ++j) {
        if (j >= i - N + 1 && j <= i) {
            out.p.set(j, u_maps[static_cast<std::size_t>(i - j)]);
        } else {
            out.p.set(j, Matrix::identity(field, x.dim(j)));
        }
    }
    for (int j = i - N + 1; j <= i - 1; ++j) {
        out.squares.push_back(ExactSquare{diff_at(j), u_maps[static_cast<std::size_t>(i - j)], u_maps[static_cast<std::size_t>(i - j - 1)], x.d(j)});
    }
    if (out.squares.empty()) {
        out.composite = ExactSquare{Matrix::identity(field, u.cols()), u, u, Matrix::identity(field, x.dim(i))};
    } else {
        out.composite = out.squares.front();
        for (std::size_t k = 1; k < out.squares.size(); ++k) out.composite = paste(out.composite, out.squares[k]);
    }
    return out;
}

Elmap02Report verify_elmap02(const NComplex& x, const Matrix& u, int i) {
    ElementaryMorphism e = elementary(x, u, i);
    require_valid(e.complex);
    require_valid_map(e.p);
    Elmap02Report report{};
    report.qis = is_qis(e.p);
    report.all_squares_exact = true;
    report.all_pullbacks = true;
    for (const auto& sq : e.squares) {
        report.squares_exact.push_back(is_exact_square(sq));
        report.all_squares_exact = report.all_squares_exact && report.squares_exact.back();
        report.all_pullbacks = report.all_pullbacks && is_pullback_square(sq);
    }
    report.composite_exact = is_exact_square(e.composite);
    report.equivalent = report.qis == report.all_squares_exact && report.all_squares_exact == report.composite_exact;
    report.pullback2_holds = true;
    for (std::size_t k = 0; k + 1 < e.squares.size(); ++k) {
        const auto& a = e.squares[k];
        const auto& b = e.squares[k + 1];
        if (!is_pullback_square(a) || !is_pullback_square(b)) continue;
        const bool pasted = is_exact_square(paste(a, b));
        report.pullback2_holds = report.pullback2_holds && pasted == (report.squares_exact[k] && report.squares_exact[k + 1]);
    }
    return report;
}

bool trunc_qis_check(const NComplex& x, int n) {
    for (const auto& [key, dim] : homology_table(x)) {
        if (key.first >= n) {
            throw Error(ErrorKind::PreconditionFailed,
                        "H^" + std::to_string(key.first) + "_(" + std::to_string(key.second) + ") is nonzero above the truncation degree", key.first,
                        key.second);
        }
    }
    ChainMap inclusion = sigma_le_inclusion(x, n);
    require_valid(inclusion.source());
    return is_qis(inclusion);
}

}  // namespace ncx
