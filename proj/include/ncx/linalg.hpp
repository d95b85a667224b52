#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ncx/matrix.hpp"

namespace ncx {

struct RrefResult {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
    Matrix reduced;
};

/// Reduced row-echelon form. Pivots are taken column by column, using the
/// first nonzero entry at or below the current row.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// A subspace of k^n stored by a basis in reduced column-echelon form, so two
/// Subspace values compare equal iff they are the same subspace.
class Subspace {
public:
    Subspace() = default;

    /// Span of the columns of `columns` (any spanning set).
    static Subspace span(const Matrix& columns);
    static Subspace zero(Field field, std::size_t ambient_dim);
    static Subspace full(Field field, std::size_t ambient_dim);

    const Field& field() const { return basis_.field(); }
    std::size_t ambient_dim() const { return basis_.rows(); }
    std::size_t dim() const { return basis_.cols(); }
    const Matrix& basis() const { return basis_; }
    /// Row index of the leading 1 of each basis column.
    const std::vector<std::size_t>& pivot_rows() const { return pivot_rows_; }

    bool contains(const Matrix& vectors) const;
    bool contains(const Subspace& other) const { return contains(other.basis_); }
    /// Coordinates of vectors (columns) known to lie in the subspace.
    Matrix coordinates(const Matrix& vectors) const;

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    Matrix basis_;
    std::vector<std::size_t> pivot_rows_;
};

Subspace kernel_basis(const Matrix& m);
Subspace image_basis(const Matrix& m);

/// Some x with m*x = b (b may have several columns), or nothing when b is not
/// in the column space.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

Matrix inverse(const Matrix& m);

/// k^n / sub realized by a surjection whose kernel is exactly sub.
///
/// The complement coordinates are the non-pivot rows of sub's echelon basis;
/// `section` maps the quotient back by unit vectors on those coordinates, so
/// projection * section is the identity.
struct Quotient {
    std::size_t dim = 0;
    Matrix projection;
    Matrix section;
};

Quotient quotient(std::size_t ambient_dim, const Subspace& sub);

}  // namespace ncx
