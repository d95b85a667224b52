#include "ncx/ncomplex.hpp"

#include <algorithm>

namespace ncx {

NComplex::NComplex(int N, Field field, int min_degree, std::vector<std::size_t> dims, std::vector<Matrix> diffs)
    : N_(N), field_(field), min_degree_(min_degree), dims_(std::move(dims)), diffs_(std::move(diffs)) {
    if (N_ < 2) throw Error(ErrorKind::InvalidParameters, "N must be at least 2");
    std::size_t expected = dims_.empty() ? 0 : dims_.size() - 1;
    if (diffs_.size() != expected) {
        throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(expected) + " differentials, got " + std::to_string(diffs_.size()));
    }
    for (std::size_t k = 0; k < diffs_.size(); ++k) {
        const int degree = min_degree_ + static_cast<int>(k);
        if (diffs_[k].field() != field_) throw Error(ErrorKind::FieldMismatch, "differential over the wrong field", degree);
        if (diffs_[k].rows() != dims_[k + 1] || diffs_[k].cols() != dims_[k]) {
            throw Error(ErrorKind::DimensionMismatch, "d^" + std::to_string(degree) + " has shape " + std::to_string(diffs_[k].rows()) + "x" +
                                                           std::to_string(diffs_[k].cols()),
                        degree);
        }
    }
    normalize();
}

void NComplex::normalize() {
    std::size_t first = 0;
    while (first < dims_.size() && dims_[first] == 0) ++first;
    if (first == dims_.size()) {
        dims_.clear();
        diffs_.clear();
        min_degree_ = 0;
        return;
    }
    std::size_t last = dims_.size() - 1;
    while (dims_[last] == 0) --last;
    if (first == 0 && last == dims_.size() - 1) return;
    std::vector<std::size_t> dims(dims_.begin() + first, dims_.begin() + last + 1);
    std::vector<Matrix> diffs(diffs_.begin() + first, diffs_.begin() + last);
    dims_ = std::move(dims);
    diffs_ = std::move(diffs);
    min_degree_ += static_cast<int>(first);
}

std::size_t NComplex::total_dim() const {
    std::size_t total = 0;
    for (auto d : dims_) total += d;
    return total;
}

std::size_t NComplex::dim(int i) const {
    if (is_zero() || i < lo() || i > hi()) return 0;
    return dims_[i - min_degree_];
}

Matrix NComplex::d(int i) const {
    if (is_zero() || i < lo() || i >= hi()) return Matrix(field_, dim(i + 1), dim(i));
    return diffs_[i - min_degree_];
}

Matrix NComplex::power(int i, int r) const {
    if (r < 0) throw Error(ErrorKind::InvalidAmplitude, "negative power", i, r);
    Matrix result = Matrix::identity(field_, dim(i));
    for (int k = 0; k < r; ++k) {
        if (dim(i + k + 1) == 0 || result.cols() == 0) return Matrix(field_, dim(i + r), dim(i));
        result = d(i + k) * result;
    }
    return result;
}

bool operator==(const NComplex& a, const NComplex& b) {
    return a.N_ == b.N_ && a.field_ == b.field_ && a.min_degree_ == b.min_degree_ && a.dims_ == b.dims_ && a.diffs_ == b.diffs_;
}

std::optional<ValidationError> validate(const NComplex& x) {
    if (x.is_zero()) return std::nullopt;
    for (int i = x.lo(); i + x.N() <= x.hi(); ++i) {
        if (!x.power(i, x.N()).is_zero()) {
            return ValidationError{ErrorKind::NPowerNonzero, i,
                                   "d^" + std::to_string(i + x.N() - 1) + "..d^" + std::to_string(i) + " is nonzero"};
        }
    }
    return std::nullopt;
}

void require_valid(const NComplex& x) {
    if (auto err = validate(x)) throw Error(err->kind, err->message, err->degree);
}

NComplex mu(int N, int r, int s, std::size_t m, Field field) {
    if (r < 1 || r > N) throw Error(ErrorKind::InvalidAmplitude, "mu: amplitude must lie in 1..N", s, r);
    std::vector<std::size_t> dims(static_cast<std::size_t>(r), m);
    std::vector<Matrix> diffs(static_cast<std::size_t>(r - 1), Matrix::identity(field, m));
    return NComplex(N, field, s - r + 1, std::move(dims), std::move(diffs));
}

NComplex theta_shift(const NComplex& x, int t) {
    if (x.is_zero()) return x;
    return NComplex(x.N(), x.field(), x.lo() - t, x.dims(), x.diffs());
}

NComplex direct_sum(const NComplex& x, const NComplex& y) {
    if (x.field() != y.field()) throw Error(ErrorKind::FieldMismatch, "direct_sum: fields differ");
    if (x.N() != y.N()) throw Error(ErrorKind::ModulusMismatch, "direct_sum: N differs");
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    const int lo = std::min(x.lo(), y.lo());
    const int hi = std::max(x.hi(), y.hi());
    std::vector<std::size_t> dims;
    std::vector<Matrix> diffs;
    for (int i = lo; i <= hi; ++i) {
        dims.push_back(x.dim(i) + y.dim(i));
        if (i < hi) diffs.push_back(Matrix::block_diagonal(x.d(i), y.d(i)));
    }
    return NComplex(x.N(), x.field(), lo, std::move(dims), std::move(diffs));
}

namespace {

void check_amplitude(const NComplex& x, int r, int low, int high, const char* what) {
    if (r < low || r > high) {
        throw Error(ErrorKind::InvalidAmplitude, std::string(what) + ": amplitude " + std::to_string(r) + " outside " + std::to_string(low) +
                                                      ".." + std::to_string(high) + " for N=" + std::to_string(x.N()),
                    0, r);
    }
}

}  // namespace

Subspace cycles(const NComplex& x, int i, int r) {
    check_amplitude(x, r, 1, x.N(), "cycles");
    return kernel_basis(x.power(i, r));
}

Subspace boundaries(const NComplex& x, int i, int r) {
    check_amplitude(x, r, 1, x.N(), "boundaries");
    return image_basis(x.power(i - r, r));
}

CokGroup cok(const NComplex& x, int i, int r) {
    auto q = quotient(x.dim(i), boundaries(x, i, r));
    return CokGroup{q.dim, std::move(q.projection), std::move(q.section)};
}

Matrix HomologyGroup::classes_of(const Matrix& cycle_vectors) const {
    return projection * cycles.coordinates(cycle_vectors);
}

HomologyGroup homology(const NComplex& x, int i, int r) {
    check_amplitude(x, r, 1, x.N() - 1, "homology");
    HomologyGroup h;
    h.degree = i;
    h.amplitude = r;
    h.cycles = cycles(x, i, r);
    h.boundaries = boundaries(x, i, x.N() - r);
    if (!h.cycles.contains(h.boundaries)) {
        throw Error(ErrorKind::NPowerNonzero, "boundaries not contained in cycles at degree " + std::to_string(i), i, r);
    }
    auto in_z = Subspace::span(h.cycles.coordinates(h.boundaries.basis()));
    auto q = quotient(h.cycles.dim(), in_z);
    h.dim = q.dim;
    h.projection = std::move(q.projection);
    h.representatives = h.cycles.basis() * q.section;
    return h;
}

HomologyTable homology_table(const NComplex& x) {
    HomologyTable table;
    if (x.is_zero()) return table;
    for (int i = x.lo(); i <= x.hi(); ++i) {
        const std::size_t n = x.dim(i);
        for (int r = 1; r < x.N(); ++r) {
            const std::size_t z = n - rank(x.power(i, r));
            const std::size_t b = rank(x.power(i - x.N() + r, x.N() - r));
            if (z > b) table[{i, r}] = z - b;
        }
    }
    return table;
}

HomologyTable add_tables(const HomologyTable& a, const HomologyTable& b) {
    HomologyTable sum = a;
    for (const auto& [key, value] : b) sum[key] += value;
    return sum;
}

HomologyTable shift_table(const HomologyTable& t, int degree_offset) {
    HomologyTable shifted;
    for (const auto& [key, value] : t) shifted[{key.first + degree_offset, key.second}] = value;
    return shifted;
}

namespace {

NComplex slice(const NComplex& x, int lo, int hi) {
    if (x.is_zero() || hi < lo) return NComplex(x.N(), x.field());
    lo = std::max(lo, x.lo());
    hi = std::min(hi, x.hi());
    if (hi < lo) return NComplex(x.N(), x.field());
    std::vector<std::size_t> dims;
    std::vector<Matrix> diffs;
    for (int i = lo; i <= hi; ++i) {
        dims.push_back(x.dim(i));
        if (i < hi) diffs.push_back(x.d(i));
    }
    return NComplex(x.N(), x.field(), lo, std::move(dims), std::move(diffs));
}

const Subspace* space_at(const std::vector<Subspace>& spaces, int lo, int i) {
    if (i < lo || i >= lo + static_cast<int>(spaces.size())) return nullptr;
    return &spaces[static_cast<std::size_t>(i - lo)];
}

}  // namespace

NComplex tau_le(const NComplex& x, int n) { return slice(x, x.lo(), n); }
NComplex tau_ge(const NComplex& x, int n) { return slice(x, n, x.hi()); }

NComplex subcomplex(const NComplex& x, int lo, const std::vector<Subspace>& spaces) {
    if (spaces.empty()) return NComplex(x.N(), x.field());
    const int hi = lo + static_cast<int>(spaces.size()) - 1;
    std::vector<std::size_t> dims;
    std::vector<Matrix> diffs;
    for (int i = lo; i <= hi; ++i) {
        const Subspace& s = *space_at(spaces, lo, i);
        if (s.ambient_dim() != x.dim(i)) throw Error(ErrorKind::DimensionMismatch, "subcomplex: ambient dimension differs", i);
        dims.push_back(s.dim());
        Matrix image = x.d(i) * s.basis();
        const Subspace* next = space_at(spaces, lo, i + 1);
        if (next == nullptr) {
            if (!image.is_zero()) throw Error(ErrorKind::InvalidParameters, "subcomplex: family is not d-stable", i);
            continue;
        }
        if (!next->contains(image)) throw Error(ErrorKind::InvalidParameters, "subcomplex: family is not d-stable", i);
        diffs.push_back(next->coordinates(image));
    }
    return NComplex(x.N(), x.field(), lo, std::move(dims), std::move(diffs));
}

NComplex quotient_complex(const NComplex& x, int lo, const std::vector<Subspace>& spaces) {
    if (x.is_zero()) return x;
    const int out_lo = x.lo();
    const int out_hi = x.hi();
    std::vector<Quotient> quotients;
    for (int i = out_lo; i <= out_hi; ++i) {
        const Subspace* s = space_at(spaces, lo, i);
        Subspace sub = s ? *s : Subspace::zero(x.field(), x.dim(i));
        if (sub.ambient_dim() != x.dim(i)) throw Error(ErrorKind::DimensionMismatch, "quotient_complex: ambient dimension differs", i);
        if (i < out_hi) {
            const Subspace* t = space_at(spaces, lo, i + 1);
            Matrix image = x.d(i) * sub.basis();
            bool stable = t ? t->contains(image) : image.is_zero();
            if (!stable) throw Error(ErrorKind::InvalidParameters, "quotient_complex: family is not d-stable", i);
        }
        quotients.push_back(quotient(x.dim(i), sub));
    }
    std::vector<std::size_t> dims;
    std::vector<Matrix> diffs;
    for (int i = out_lo; i <= out_hi; ++i) {
        const auto& q = quotients[static_cast<std::size_t>(i - out_lo)];
        dims.push_back(q.dim);
        if (i < out_hi) diffs.push_back(quotients[static_cast<std::size_t>(i + 1 - out_lo)].projection * x.d(i) * q.section);
    }
    return NComplex(x.N(), x.field(), out_lo, std::move(dims), std::move(diffs));
}

std::vector<Subspace> sigma_le_spaces(const NComplex& x, int n) {
    std::vector<Subspace> spaces;
    if (x.is_zero()) return spaces;
    const int top = std::min(n, x.hi());
    for (int m = x.lo(); m <= top; ++m) {
        if (m <= n - x.N() + 1) {
            spaces.push_back(Subspace::full(x.field(), x.dim(m)));
        } else {
            spaces.push_back(cycles(x, m, n - m + 1));
        }
    }
    return spaces;
}

std::vector<Subspace> sigma_ge_spaces(const NComplex& x, int n) {
    std::vector<Subspace> spaces;
    if (x.is_zero()) return spaces;
    for (int m = x.lo(); m <= std::min(n, x.hi()); ++m) {
        const int amplitude = m - (n - x.N() + 1);
        if (amplitude < 1) {
            spaces.push_back(Subspace::full(x.field(), x.dim(m)));
        } else {
            spaces.push_back(boundaries(x, m, amplitude));
        }
    }
    return spaces;
}

NComplex sigma_le(const NComplex& x, int n) {
    if (x.is_zero()) return x;
    return subcomplex(x, x.lo(), sigma_le_spaces(x, n));
}

NComplex sigma_ge(const NComplex& x, int n) {
    if (x.is_zero()) return x;
    return quotient_complex(x, x.lo(), sigma_ge_spaces(x, n));
}

}  // namespace ncx
