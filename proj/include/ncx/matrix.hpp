#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "ncx/field.hpp"

namespace ncx {

/// Dense row-major matrix over a Field. A rows x cols matrix is a linear map
/// from a cols-dimensional space to a rows-dimensional space acting on column
/// vectors. Zero-sized matrices are legal.
class Matrix {
public:
    Matrix() : field_(Field::rationals()) {}
    Matrix(Field field, std::size_t rows, std::size_t cols);

    static Matrix zero(Field field, std::size_t rows, std::size_t cols) { return Matrix(field, rows, cols); }
    static Matrix identity(Field field, std::size_t n);
    /// Row-major integer entries, reduced into the field.
    static Matrix from_ints(Field field, std::size_t rows, std::size_t cols, std::initializer_list<long> entries);
    static Matrix from_ints(Field field, std::size_t rows, std::size_t cols, std::span<const long> entries);
    static Matrix column(Field field, std::span<const mpq_class> entries);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    const mpq_class& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    /// Stores value reduced into the field.
    void set(std::size_t r, std::size_t c, const mpq_class& value);
    /// Raw access; caller keeps values reduced.
    mpq_class& raw(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    bool is_zero() const;
    bool is_identity() const;

    Matrix transpose() const;
    Matrix operator-() const;
    Matrix scaled(const mpq_class& factor) const;

    Matrix select_rows(std::span<const std::size_t> indices) const;
    Matrix select_cols(std::span<const std::size_t> indices) const;
    Matrix submatrix(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;
    void set_block(std::size_t row0, std::size_t col0, const Matrix& block);

    static Matrix hstack(const Matrix& left, const Matrix& right);
    static Matrix vstack(const Matrix& top, const Matrix& bottom);
    static Matrix block_diagonal(const Matrix& a, const Matrix& b);

    std::string to_string() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpq_class> data_;
};

/// Assembles a matrix from a grid of blocks with fixed row/column block sizes.
/// Unset blocks are zero.
class BlockMatrix {
public:
    BlockMatrix(Field field, std::vector<std::size_t> row_sizes, std::vector<std::size_t> col_sizes);

    void set(std::size_t block_row, std::size_t block_col, const Matrix& block);
    Matrix build() const { return result_; }

private:
    std::vector<std::size_t> row_offsets_;
    std::vector<std::size_t> col_offsets_;
    std::vector<std::size_t> row_sizes_;
    std::vector<std::size_t> col_sizes_;
    Matrix result_;
};

}  // namespace ncx
