#include "ncx/linalg.hpp"

#include <cstdint>

namespace ncx {

namespace {

// Shared elimination over rows of a dense table; Ops supplies the field.
// Row operations skip zero entries of the pivot row so banded systems stay
// cheap.
template <typename Ops>
std::size_t eliminate(Ops& ops, std::vector<typename Ops::Value>& a, std::size_t rows, std::size_t cols, std::size_t stop_col,
                      std::vector<std::size_t>& pivots) {
    std::size_t rank = 0;
    std::vector<std::size_t> nonzero;
    for (std::size_t c = 0; c < stop_col && rank < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t r = rank; r < rows; ++r) {
            if (!ops.is_zero(a[r * cols + c])) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows) continue;
        if (pivot != rank) {
            for (std::size_t k = 0; k < cols; ++k) std::swap(a[pivot * cols + k], a[rank * cols + k]);
        }
        auto* prow = &a[rank * cols];
        ops.scale_row(prow, c, cols);
        nonzero.clear();
        for (std::size_t k = c; k < cols; ++k) {
            if (!ops.is_zero(prow[k])) nonzero.push_back(k);
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank) continue;
            auto* row = &a[r * cols];
            if (ops.is_zero(row[c])) continue;
            ops.axpy(row, prow, nonzero);
        }
        pivots.push_back(c);
        ++rank;
    }
    return rank;
}

struct RationalOps {
    using Value = mpq_class;
    mpq_class factor, tmp;
    bool is_zero(const mpq_class& v) const { return sgn(v) == 0; }
    void scale_row(mpq_class* row, std::size_t c, std::size_t cols) {
        if (row[c] == 1) return;
        factor = 1 / row[c];
        for (std::size_t k = c; k < cols; ++k) {
            if (sgn(row[k]) != 0) mpq_mul(row[k].get_mpq_t(), row[k].get_mpq_t(), factor.get_mpq_t());
        }
    }
    // row -= row[c] * prow over prow's support; nonzero[0] is the pivot column.
    void axpy(mpq_class* row, const mpq_class* prow, const std::vector<std::size_t>& nonzero) {
        factor = row[nonzero.front()];
        for (auto k : nonzero) {
            mpq_mul(tmp.get_mpq_t(), factor.get_mpq_t(), prow[k].get_mpq_t());
            mpq_sub(row[k].get_mpq_t(), row[k].get_mpq_t(), tmp.get_mpq_t());
        }
    }
};

struct ModOps {
    using Value = std::int64_t;
    std::int64_t p;
    bool is_zero(std::int64_t v) const { return v == 0; }
    std::int64_t inv(std::int64_t v) const {
        std::int64_t result = 1, base = v, e = p - 2;
        while (e > 0) {
            if (e & 1) result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return result;
    }
    void scale_row(std::int64_t* row, std::size_t c, std::size_t cols) const {
        if (row[c] == 1) return;
        std::int64_t f = inv(row[c]);
        for (std::size_t k = c; k < cols; ++k) row[k] = row[k] * f % p;
    }
    void axpy(std::int64_t* row, const std::int64_t* prow, const std::vector<std::size_t>& nonzero) const {
        std::int64_t f = row[nonzero.front()];
        for (auto k : nonzero) {
            row[k] = (row[k] - f * prow[k]) % p;
            if (row[k] < 0) row[k] += p;
        }
    }
};

RrefResult rref_impl(const Matrix& m, std::size_t stop_col) {
    RrefResult result;
    const Field& field = m.field();
    std::size_t rows = m.rows(), cols = m.cols();
    result.reduced = Matrix(field, rows, cols);
    if (field.is_rational()) {
        std::vector<mpq_class> a(rows * cols);
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) a[r * cols + c] = m.at(r, c);
        }
        RationalOps ops;
        result.rank = eliminate(ops, a, rows, cols, stop_col, result.pivot_cols);
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) result.reduced.raw(r, c) = std::move(a[r * cols + c]);
        }
    } else {
        std::vector<std::int64_t> a(rows * cols);
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) a[r * cols + c] = m.at(r, c).get_num().get_si();
        }
        ModOps ops{static_cast<std::int64_t>(field.characteristic())};
        result.rank = eliminate(ops, a, rows, cols, stop_col, result.pivot_cols);
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) result.reduced.raw(r, c) = static_cast<long>(a[r * cols + c]);
        }
    }
    return result;
}

}  // namespace

RrefResult rref(const Matrix& m) { return rref_impl(m, m.cols()); }

std::size_t rank(const Matrix& m) {
    // Eliminate along the shorter side.
    if (m.rows() < m.cols()) return rref_impl(m.transpose(), m.rows()).rank;
    return rref_impl(m, m.cols()).rank;
}

Subspace Subspace::span(const Matrix& columns) {
    auto rr = rref(columns.transpose());
    Subspace s;
    std::vector<std::size_t> rows(rr.rank);
    for (std::size_t k = 0; k < rr.rank; ++k) rows[k] = k;
    s.basis_ = rr.reduced.select_rows(rows).transpose();
    s.pivot_rows_ = std::move(rr.pivot_cols);
    return s;
}

Subspace Subspace::zero(Field field, std::size_t ambient_dim) {
    Subspace s;
    s.basis_ = Matrix(field, ambient_dim, 0);
    return s;
}

Subspace Subspace::full(Field field, std::size_t ambient_dim) {
    Subspace s;
    s.basis_ = Matrix::identity(field, ambient_dim);
    for (std::size_t k = 0; k < ambient_dim; ++k) s.pivot_rows_.push_back(k);
    return s;
}

bool Subspace::contains(const Matrix& vectors) const {
    if (vectors.rows() != ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "Subspace::contains: ambient dimension differs");
    // Reduced echelon basis: v is in the span iff v equals basis * v[pivots].
    return basis_ * vectors.select_rows(pivot_rows_) == vectors;
}

Matrix Subspace::coordinates(const Matrix& vectors) const {
    if (vectors.rows() != ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "Subspace::coordinates: ambient dimension differs");
    return vectors.select_rows(pivot_rows_);
}

Subspace kernel_basis(const Matrix& m) {
    auto rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : rr.pivot_cols) is_pivot[c] = true;
    std::size_t nullity = m.cols() - rr.rank;
    Matrix k(m.field(), m.cols(), nullity);
    std::size_t col = 0;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        k.raw(f, col) = 1;
        for (std::size_t r = 0; r < rr.rank; ++r) k.set(rr.pivot_cols[r], col, -rr.reduced.at(r, f));
        ++col;
    }
    return Subspace::span(k);
}

Subspace image_basis(const Matrix& m) { return Subspace::span(m); }

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
    if (b.rows() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "solve: right-hand side has wrong length");
    auto rr = rref_impl(Matrix::hstack(m, b), m.cols());
    // Inconsistent iff some row is zero on the left but not on the right.
    for (std::size_t r = rr.rank; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) {
            if (sgn(rr.reduced.at(r, m.cols() + c)) != 0) return std::nullopt;
        }
    }
    Matrix x(m.field(), m.cols(), b.cols());
    for (std::size_t r = 0; r < rr.rank; ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) x.raw(rr.pivot_cols[r], c) = rr.reduced.at(r, m.cols() + c);
    }
    return x;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
    auto x = solve(m, Matrix::identity(m.field(), m.rows()));
    if (!x || rank(m) != m.rows()) throw Error(ErrorKind::InvalidParameters, "inverse of a singular matrix");
    return *x;
}

Quotient quotient(std::size_t ambient_dim, const Subspace& sub) {
    if (sub.ambient_dim() != ambient_dim) throw Error(ErrorKind::DimensionMismatch, "quotient: ambient dimension differs");
    const Field& field = sub.field();
    std::vector<bool> is_pivot(ambient_dim, false);
    for (auto r : sub.pivot_rows()) is_pivot[r] = true;
    std::vector<std::size_t> complement;
    for (std::size_t r = 0; r < ambient_dim; ++r) {
        if (!is_pivot[r]) complement.push_back(r);
    }
    Quotient q;
    q.dim = complement.size();
    // v  ->  (v - B v[pivots])[complement]
    Matrix select_c = Matrix::identity(field, ambient_dim).select_rows(complement);
    Matrix select_p = Matrix::identity(field, ambient_dim).select_rows(sub.pivot_rows());
    q.projection = select_c - select_c * sub.basis() * select_p;
    q.section = select_c.transpose();
    return q;
}

}  // namespace ncx
