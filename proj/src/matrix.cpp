#include "ncx/matrix.hpp"

#include <sstream>

namespace ncx {

namespace {

void require_same_field(const Matrix& a, const Matrix& b, const char* op) {
    if (a.field() != b.field()) {
        throw Error(ErrorKind::FieldMismatch, std::string(op) + ": operands over " + a.field().name() + " and " + b.field().name());
    }
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(Field field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
    return m;
}

Matrix Matrix::from_ints(Field field, std::size_t rows, std::size_t cols, std::initializer_list<long> entries) {
    return from_ints(field, rows, cols, std::span<const long>(entries.begin(), entries.size()));
}

Matrix Matrix::from_ints(Field field, std::size_t rows, std::size_t cols, std::span<const long> entries) {
    if (entries.size() != rows * cols) {
        throw Error(ErrorKind::DimensionMismatch, "from_ints: expected " + std::to_string(rows * cols) + " entries");
    }
    Matrix m(field, rows, cols);
    for (std::size_t k = 0; k < entries.size(); ++k) m.data_[k] = field.from_int(entries[k]);
    return m;
}

Matrix Matrix::column(Field field, std::span<const mpq_class> entries) {
    Matrix m(field, entries.size(), 1);
    for (std::size_t k = 0; k < entries.size(); ++k) m.data_[k] = field.reduce(entries[k]);
    return m;
}

void Matrix::set(std::size_t r, std::size_t c, const mpq_class& value) {
    data_[r * cols_ + c] = field_.reduce(value);
}

bool Matrix::is_zero() const {
    for (const auto& v : data_) {
        if (sgn(v) != 0) return false;
    }
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (at(r, c) != (r == c ? 1 : 0)) return false;
        }
    }
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = at(r, c);
    }
    return t;
}

Matrix Matrix::operator-() const {
    Matrix m(field_, rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = field_.reduce(-data_[k]);
    return m;
}

Matrix Matrix::scaled(const mpq_class& factor) const {
    Matrix m(field_, rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = field_.reduce(data_[k] * factor);
    return m;
}

Matrix Matrix::select_rows(std::span<const std::size_t> indices) const {
    Matrix m(field_, indices.size(), cols_);
    for (std::size_t k = 0; k < indices.size(); ++k) {
        for (std::size_t c = 0; c < cols_; ++c) m.data_[k * cols_ + c] = at(indices[k], c);
    }
    return m;
}

Matrix Matrix::select_cols(std::span<const std::size_t> indices) const {
    Matrix m(field_, rows_, indices.size());
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < indices.size(); ++k) m.data_[r * indices.size() + k] = at(r, indices[k]);
    }
    return m;
}

Matrix Matrix::submatrix(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const {
    if (row0 + rows > rows_ || col0 + cols > cols_) throw Error(ErrorKind::DimensionMismatch, "submatrix out of range");
    Matrix m(field_, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m.data_[r * cols + c] = at(row0 + r, col0 + c);
    }
    return m;
}

void Matrix::set_block(std::size_t row0, std::size_t col0, const Matrix& block) {
    require_same_field(*this, block, "set_block");
    if (row0 + block.rows_ > rows_ || col0 + block.cols_ > cols_) {
        throw Error(ErrorKind::DimensionMismatch, "set_block out of range");
    }
    for (std::size_t r = 0; r < block.rows_; ++r) {
        for (std::size_t c = 0; c < block.cols_; ++c) data_[(row0 + r) * cols_ + col0 + c] = block.at(r, c);
    }
}

Matrix Matrix::hstack(const Matrix& left, const Matrix& right) {
    require_same_field(left, right, "hstack");
    if (left.rows_ != right.rows_) throw Error(ErrorKind::DimensionMismatch, "hstack: row counts differ");
    Matrix m(left.field_, left.rows_, left.cols_ + right.cols_);
    m.set_block(0, 0, left);
    m.set_block(0, left.cols_, right);
    return m;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
    require_same_field(top, bottom, "vstack");
    if (top.cols_ != bottom.cols_) throw Error(ErrorKind::DimensionMismatch, "vstack: column counts differ");
    Matrix m(top.field_, top.rows_ + bottom.rows_, top.cols_);
    m.set_block(0, 0, top);
    m.set_block(top.rows_, 0, bottom);
    return m;
}

Matrix Matrix::block_diagonal(const Matrix& a, const Matrix& b) {
    require_same_field(a, b, "block_diagonal");
    Matrix m(a.field_, a.rows_ + b.rows_, a.cols_ + b.cols_);
    m.set_block(0, 0, a);
    m.set_block(a.rows_, a.cols_, b);
    return m;
}

std::string Matrix::to_string() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        out << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cols_; ++c) out << (c ? ", " : "") << field_.format(at(r, c));
        out << "]";
    }
    out << "]";
    return out.str();
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_field(a, b, "multiply");
    if (a.cols_ != b.rows_) {
        throw Error(ErrorKind::DimensionMismatch, "multiply: " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " times " +
                                                       std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    }
    Matrix m(a.field_, a.rows_, b.cols_);
    mpq_class tmp;
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const mpq_class& lhs = a.at(r, k);
            if (sgn(lhs) == 0) continue;
            for (std::size_t c = 0; c < b.cols_; ++c) {
                const mpq_class& rhs = b.at(k, c);
                if (sgn(rhs) == 0) continue;
                mpq_mul(tmp.get_mpq_t(), lhs.get_mpq_t(), rhs.get_mpq_t());
                mpq_class& out = m.data_[r * b.cols_ + c];
                mpq_add(out.get_mpq_t(), out.get_mpq_t(), tmp.get_mpq_t());
            }
        }
    }
    if (!a.field_.is_rational()) {
        for (auto& v : m.data_) v = a.field_.reduce(v);
    }
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_field(a, b, "add");
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "add: shapes differ");
    Matrix m(a.field_, a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) m.data_[k] = a.field_.reduce(a.data_[k] + b.data_[k]);
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_field(a, b, "subtract");
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "subtract: shapes differ");
    Matrix m(a.field_, a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) m.data_[k] = a.field_.reduce(a.data_[k] - b.data_[k]);
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

BlockMatrix::BlockMatrix(Field field, std::vector<std::size_t> row_sizes, std::vector<std::size_t> col_sizes)
    : row_sizes_(std::move(row_sizes)), col_sizes_(std::move(col_sizes)) {
    std::size_t total = 0;
    for (auto s : row_sizes_) {
        row_offsets_.push_back(total);
        total += s;
    }
    std::size_t rows = total;
    total = 0;
    for (auto s : col_sizes_) {
        col_offsets_.push_back(total);
        total += s;
    }
    result_ = Matrix(field, rows, total);
}

void BlockMatrix::set(std::size_t block_row, std::size_t block_col, const Matrix& block) {
    if (block.rows() != row_sizes_.at(block_row) || block.cols() != col_sizes_.at(block_col)) {
        throw Error(ErrorKind::DimensionMismatch, "block (" + std::to_string(block_row) + "," + std::to_string(block_col) + ") has shape " +
                                                       std::to_string(block.rows()) + "x" + std::to_string(block.cols()));
    }
    result_.set_block(row_offsets_[block_row], col_offsets_[block_col], block);
}

}  // namespace ncx
