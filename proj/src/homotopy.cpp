#include "ncx/homotopy.hpp"

#include <algorithm>

namespace ncx {

namespace {

void require_compatible(const NComplex& x, const NComplex& y, const char* what) {
    if (x.field() != y.field()) throw Error(ErrorKind::FieldMismatch, std::string(what) + ": fields differ");
    if (x.N() != y.N()) throw Error(ErrorKind::ModulusMismatch, std::string(what) + ": N differs");
}

}  // namespace

ChainMap::ChainMap(NComplex source, NComplex target) : source_(std::move(source)), target_(std::move(target)) {
    require_compatible(source_, target_, "ChainMap");
}

ChainMap::ChainMap(NComplex source, NComplex target, int min_degree, std::vector<Matrix> maps)
    : source_(std::move(source)), target_(std::move(target)), min_degree_(min_degree) {
    require_compatible(source_, target_, "ChainMap");
    for (std::size_t k = 0; k < maps.size(); ++k) set(min_degree + static_cast<int>(k), std::move(maps[k]));
}

ChainMap ChainMap::identity(const NComplex& x) {
    ChainMap f(x, x);
    if (x.is_zero()) return f;
    for (int i = x.lo(); i <= x.hi(); ++i) f.set(i, Matrix::identity(x.field(), x.dim(i)));
    return f;
}

Matrix ChainMap::at(int i) const {
    const int k = i - min_degree_;
    if (k >= 0 && k < static_cast<int>(maps_.size())) return maps_[static_cast<std::size_t>(k)];
    return Matrix(source_.field(), target_.dim(i), source_.dim(i));
}

void ChainMap::set(int i, Matrix map) {
    if (map.rows() != target_.dim(i) || map.cols() != source_.dim(i)) {
        throw Error(ErrorKind::DimensionMismatch, "f^" + std::to_string(i) + " has shape " + std::to_string(map.rows()) + "x" +
                                                       std::to_string(map.cols()) + ", expected " + std::to_string(target_.dim(i)) + "x" +
                                                       std::to_string(source_.dim(i)),
                    i);
    }
    if (map.field() != source_.field()) throw Error(ErrorKind::FieldMismatch, "chain map component over the wrong field", i);
    if (map.empty()) return;
    if (maps_.empty()) {
        min_degree_ = i;
        maps_.push_back(std::move(map));
        return;
    }
    while (i < min_degree_) {
        --min_degree_;
        maps_.insert(maps_.begin(), Matrix(source_.field(), target_.dim(min_degree_), source_.dim(min_degree_)));
    }
    while (i >= min_degree_ + static_cast<int>(maps_.size())) {
        const int next = min_degree_ + static_cast<int>(maps_.size());
        maps_.push_back(Matrix(source_.field(), target_.dim(next), source_.dim(next)));
    }
    maps_[static_cast<std::size_t>(i - min_degree_)] = std::move(map);
}

int ChainMap::lo() const {
    if (source_.is_zero() || target_.is_zero()) return 0;
    return std::max(source_.lo(), target_.lo());
}

int ChainMap::hi() const {
    if (source_.is_zero() || target_.is_zero()) return -1;
    return std::min(source_.hi(), target_.hi());
}

ChainMap ChainMap::operator-() const { return scaled(mpq_class(-1)); }

ChainMap ChainMap::scaled(const mpq_class& factor) const {
    ChainMap g(source_, target_);
    for (int i = lo(); i <= hi(); ++i) g.set(i, at(i).scaled(factor));
    return g;
}

ChainMap operator+(const ChainMap& f, const ChainMap& g) {
    if (f.source_ != g.source_ || f.target_ != g.target_) throw Error(ErrorKind::CompositionMismatch, "adding chain maps with different ends");
    ChainMap h(f.source_, f.target_);
    for (int i = f.lo(); i <= f.hi(); ++i) h.set(i, f.at(i) + g.at(i));
    return h;
}

ChainMap operator-(const ChainMap& f, const ChainMap& g) { return f + (-g); }

bool operator==(const ChainMap& f, const ChainMap& g) {
    if (f.source_ != g.source_ || f.target_ != g.target_) return false;
    for (int i = f.lo(); i <= f.hi(); ++i) {
        if (f.at(i) != g.at(i)) return false;
    }
    return true;
}

std::optional<MapError> validate_map(const ChainMap& f) {
    const NComplex& x = f.source();
    const NComplex& y = f.target();
    if (x.N() != y.N()) return MapError{ErrorKind::ModulusMismatch, 0, "source and target have different N"};
    if (x.field() != y.field()) return MapError{ErrorKind::FieldMismatch, 0, "source and target have different fields"};
    if (x.is_zero() || y.is_zero()) return std::nullopt;
    const int lo = std::min(x.lo(), y.lo()) - 1;
    const int hi = std::max(x.hi(), y.hi());
    for (int i = lo; i <= hi; ++i) {
        if (f.at(i + 1) * x.d(i) != y.d(i) * f.at(i)) {
            return MapError{ErrorKind::CommutationFailure, i, "f^" + std::to_string(i + 1) + " d_X^" + std::to_string(i) + " != d_Y^" +
                                                                   std::to_string(i) + " f^" + std::to_string(i)};
        }
    }
    return std::nullopt;
}

void require_valid_map(const ChainMap& f) {
    if (auto err = validate_map(f)) throw Error(err->kind, err->message, err->degree);
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    if (f.target() != g.source()) throw Error(ErrorKind::CompositionMismatch, "compose: target of f differs from source of g");
    ChainMap h(f.source(), g.target());
    for (int i = h.lo(); i <= h.hi(); ++i) h.set(i, g.at(i) * f.at(i));
    return h;
}

namespace {

/// Vectorization of a family of degreewise maps i -> Hom(X^i, Y^{i+shift}),
/// each stored row-major.
class MapLayout {
public:
    MapLayout(const NComplex& x, const NComplex& y, int shift, int lo, int hi) : x_(x), y_(y), shift_(shift), lo_(lo) {
        for (int i = lo; i <= hi; ++i) {
            offsets_.push_back(total_);
            total_ += rows(i) * cols(i);
        }
        hi_ = hi;
    }

    std::size_t rows(int i) const { return y_.dim(i + shift_); }
    std::size_t cols(int i) const { return x_.dim(i); }
    bool contains(int i) const { return i >= lo_ && i <= hi_; }
    std::size_t offset(int i) const { return offsets_[static_cast<std::size_t>(i - lo_)]; }
    std::size_t total() const { return total_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }

    Matrix unpack(const Matrix& vec, int i) const {
        Matrix m(x_.field(), rows(i), cols(i));
        if (!contains(i)) return m;
        const std::size_t base = offset(i);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t c = 0; c < m.cols(); ++c) m.raw(r, c) = vec.at(base + r * m.cols() + c, 0);
        }
        return m;
    }

private:
    const NComplex& x_;
    const NComplex& y_;
    int shift_;
    int lo_;
    int hi_ = 0;
    std::size_t total_ = 0;
    std::vector<std::size_t> offsets_;
};

// system(row block at eq_offset, cols at unknown_offset) += coefficients of
// S -> A S B, where S is rows_s x cols_s and the result has A.rows() x B.cols().
void add_sandwich(Matrix& system, std::size_t eq_offset, std::size_t unknown_offset, const Matrix& a, const Matrix& b, const Field& field) {
    const std::size_t out_cols = b.cols();
    const std::size_t s_cols = b.rows();
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            const mpq_class& left = a.at(r, c);
            if (sgn(left) == 0) continue;
            for (std::size_t e = 0; e < b.rows(); ++e) {
                for (std::size_t col = 0; col < out_cols; ++col) {
                    const mpq_class& right = b.at(e, col);
                    if (sgn(right) == 0) continue;
                    mpq_class& slot = system.raw(eq_offset + r * out_cols + col, unknown_offset + c * s_cols + e);
                    slot = field.reduce(slot + left * right);
                }
            }
        }
    }
}

struct Window {
    int lo;
    int hi;
    bool empty() const { return hi < lo; }
};

Window map_window(const NComplex& x, const NComplex& y) {
    if (x.is_zero() || y.is_zero()) return {0, -1};
    return {std::max(x.lo(), y.lo()), std::min(x.hi(), y.hi())};
}

enum class Convention { standard, mirrored, printed };

// Homotopy operator from s-families to degreewise maps X -> Y.
// standard: f^i = sum_{j=1}^{N} d_Y^{N-j} s^{i+j-1} d_X^{j-1}
// mirrored: f^i = sum_{j=1}^{N} d_Y^{j-1} s^{i+N-j} d_X^{N-j}
// printed:  as standard, j = 1..N-1
Matrix homotopy_operator(const NComplex& x, const NComplex& y, const MapLayout& maps, const MapLayout& homotopies, Convention convention) {
    const int N = x.N();
    const bool mirrored = convention == Convention::mirrored;
    const int last = convention == Convention::printed ? N - 1 : N;
    Matrix op(x.field(), maps.total(), homotopies.total());
    for (int i = maps.lo(); i <= maps.hi(); ++i) {
        if (maps.rows(i) * maps.cols(i) == 0) continue;
        for (int j = 1; j <= last; ++j) {
            const int k = mirrored ? i + N - j : i + j - 1;
            if (!homotopies.contains(k) || homotopies.rows(k) * homotopies.cols(k) == 0) continue;
            Matrix a = mirrored ? y.power(i - j + 1, j - 1) : y.power(i - N + j, N - j);
            Matrix b = mirrored ? x.power(i, N - j) : x.power(i, j - 1);
            add_sandwich(op, maps.offset(i), homotopies.offset(k), a, b, x.field());
        }
    }
    return op;
}

MapLayout homotopy_layout(const NComplex& x, const NComplex& y) {
    const int N = x.N();
    if (x.is_zero() || y.is_zero()) return MapLayout(x, y, 1 - N, 0, -1);
    // s^k : X^k -> Y^{k-N+1}
    return MapLayout(x, y, 1 - N, std::max(x.lo(), y.lo() + N - 1), std::min(x.hi(), y.hi() + N - 1));
}

// Equations f^{i+1} d_X^i - d_Y^i f^i = 0 over the whole window.
Matrix commutation_system(const NComplex& x, const NComplex& y, const MapLayout& maps) {
    std::vector<std::size_t> eq_offsets;
    std::size_t total = 0;
    const int lo = maps.lo() - 1;
    const int hi = maps.hi();
    for (int i = lo; i <= hi; ++i) {
        eq_offsets.push_back(total);
        total += y.dim(i + 1) * x.dim(i);
    }
    Matrix system(x.field(), total, maps.total());
    const Matrix minus_one = Matrix::identity(x.field(), 1).scaled(mpq_class(-1));
    for (int i = lo; i <= hi; ++i) {
        const std::size_t eq = eq_offsets[static_cast<std::size_t>(i - lo)];
        if (y.dim(i + 1) * x.dim(i) == 0) continue;
        if (maps.contains(i + 1)) {
            add_sandwich(system, eq, maps.offset(i + 1), Matrix::identity(x.field(), y.dim(i + 1)), x.d(i), x.field());
        }
        if (maps.contains(i)) {
            add_sandwich(system, eq, maps.offset(i), -y.d(i), Matrix::identity(x.field(), x.dim(i)), x.field());
        }
    }
    return system;
}

Matrix pack(const ChainMap& f, const MapLayout& maps) {
    Matrix vec(f.source().field(), maps.total(), 1);
    for (int i = maps.lo(); i <= maps.hi(); ++i) {
        Matrix m = f.at(i);
        const std::size_t base = maps.offset(i);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t c = 0; c < m.cols(); ++c) vec.raw(base + r * m.cols() + c, 0) = m.at(r, c);
        }
    }
    return vec;
}

}  // namespace

ChainMap apply_homotopy(const NComplex& source, const NComplex& target, const HomotopyWitness& s) {
    const int N = source.N();
    ChainMap f(source, target);
    auto s_at = [&](int k) {
        const int idx = k - s.min_degree;
        if (idx >= 0 && idx < static_cast<int>(s.maps.size())) return s.maps[static_cast<std::size_t>(idx)];
        return Matrix(source.field(), target.dim(k - N + 1), source.dim(k));
    };
    for (int i = f.lo(); i <= f.hi(); ++i) {
        Matrix sum(source.field(), target.dim(i), source.dim(i));
        for (int j = 1; j <= N; ++j) {
            sum = sum + target.power(i - N + j, N - j) * s_at(i + j - 1) * source.power(i, j - 1);
        }
        f.set(i, sum);
    }
    return f;
}

std::optional<HomotopyWitness> null_homotopy_witness(const ChainMap& f) {
    const NComplex& x = f.source();
    const NComplex& y = f.target();
    HomotopyWitness witness;
    auto window = map_window(x, y);
    if (window.empty()) return witness;
    MapLayout maps(x, y, 0, window.lo, window.hi);
    MapLayout homotopies = homotopy_layout(x, y);
    Matrix rhs = pack(f, maps);
    if (rhs.is_zero()) return witness;
    if (homotopies.total() == 0) return std::nullopt;
    Matrix op = homotopy_operator(x, y, maps, homotopies, Convention::standard);
    auto solution = solve(op, rhs);
    if (!solution) return std::nullopt;
    witness.min_degree = homotopies.lo();
    for (int k = homotopies.lo(); k <= homotopies.hi(); ++k) witness.maps.push_back(homotopies.unpack(*solution, k));
    return witness;
}

bool is_null_homotopic(const ChainMap& f) { return null_homotopy_witness(f).has_value(); }

std::vector<ChainMap> chain_map_basis(const NComplex& x, const NComplex& y) {
    require_compatible(x, y, "chain_map_basis");
    std::vector<ChainMap> basis;
    auto window = map_window(x, y);
    if (window.empty()) return basis;
    MapLayout maps(x, y, 0, window.lo, window.hi);
    Subspace solutions = kernel_basis(commutation_system(x, y, maps));
    for (std::size_t k = 0; k < solutions.dim(); ++k) {
        std::vector<std::size_t> col{k};
        Matrix vec = solutions.basis().select_cols(col);
        ChainMap f(x, y);
        for (int i = window.lo; i <= window.hi; ++i) f.set(i, maps.unpack(vec, i));
        basis.push_back(std::move(f));
    }
    return basis;
}

std::size_t chainmap_space_dim(const NComplex& x, const NComplex& y) {
    require_compatible(x, y, "chainmap_space_dim");
    auto window = map_window(x, y);
    if (window.empty()) return 0;
    MapLayout maps(x, y, 0, window.lo, window.hi);
    Matrix system = commutation_system(x, y, maps);
    return maps.total() - rank(system);
}

namespace {

std::size_t image_dim(const NComplex& x, const NComplex& y, Convention convention, bool check_inside) {
    auto window = map_window(x, y);
    if (window.empty()) return 0;
    MapLayout maps(x, y, 0, window.lo, window.hi);
    MapLayout homotopies = homotopy_layout(x, y);
    if (homotopies.total() == 0) return 0;
    Matrix op = homotopy_operator(x, y, maps, homotopies, convention);
    if (check_inside && !(commutation_system(x, y, maps) * op).is_zero()) {
        throw Error(ErrorKind::Internal, "null-homotopic family is not contained in the chain maps");
    }
    return rank(op);
}

}  // namespace

std::size_t homotopy_image_dim(const NComplex& x, const NComplex& y) {
    require_compatible(x, y, "homotopy_image_dim");
    return image_dim(x, y, Convention::standard, false);
}

std::size_t mirrored_homotopy_image_dim(const NComplex& x, const NComplex& y) {
    require_compatible(x, y, "mirrored_homotopy_image_dim");
    return image_dim(x, y, Convention::mirrored, false);
}

bool printed_sum_reaches(const ChainMap& f) {
    const NComplex& x = f.source();
    const NComplex& y = f.target();
    auto window = map_window(x, y);
    if (window.empty()) return true;
    MapLayout maps(x, y, 0, window.lo, window.hi);
    MapLayout homotopies = homotopy_layout(x, y);
    Matrix rhs = pack(f, maps);
    if (rhs.is_zero()) return true;
    if (homotopies.total() == 0) return false;
    return solve(homotopy_operator(x, y, maps, homotopies, Convention::printed), rhs).has_value();
}

std::size_t homK_dim(const NComplex& x, const NComplex& y) {
    require_compatible(x, y, "homK_dim");
    return chainmap_space_dim(x, y) - image_dim(x, y, Convention::standard, true);
}

bool is_contractible(const NComplex& x) {
    if (x.is_zero()) return true;
    return is_null_homotopic(ChainMap::identity(x));
}

bool induced_d_surjective(const NComplex& x) {
    if (x.is_zero()) return true;
    for (int n = x.lo() - 1; n <= x.hi(); ++n) {
        for (int r = 2; r <= x.N(); ++r) {
            Subspace source = cycles(x, n, r);
            Subspace target = cycles(x, n + 1, r - 1);
            if (rank(x.d(n) * source.basis()) != target.dim()) return false;
        }
    }
    return true;
}

ChainMap sigma_le_inclusion(const NComplex& x, int n) {
    NComplex sub = sigma_le(x, n);
    ChainMap f(sub, x);
    auto spaces = sigma_le_spaces(x, n);
    for (std::size_t k = 0; k < spaces.size(); ++k) f.set(x.lo() + static_cast<int>(k), spaces[k].basis());
    return f;
}

ChainMap sigma_ge_projection(const NComplex& x, int n) {
    NComplex quot = sigma_ge(x, n);
    ChainMap f(x, quot);
    if (x.is_zero()) return f;
    auto spaces = sigma_ge_spaces(x, n);
    for (int i = x.lo(); i <= x.hi(); ++i) {
        const std::size_t k = static_cast<std::size_t>(i - x.lo());
        Subspace sub = k < spaces.size() ? spaces[k] : Subspace::zero(x.field(), x.dim(i));
        f.set(i, quotient(x.dim(i), sub).projection);
    }
    return f;
}

}  // namespace ncx
