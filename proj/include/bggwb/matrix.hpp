#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bggwb/scalar.hpp"

namespace bggwb {

/// Dense column vector of field elements; the field travels with the
/// matrix or context it belongs to.
using Vec = std::vector<mpq_class>;

/// Dense row-major matrix over one exact field.
///
/// Entries are stored normalized for the field (lowest-terms rationals, or
/// residues in [0, p)). The size envelope this kernel is tuned for is a few
/// thousand rows/columns with mostly sparse content; elimination skips
/// zero entries but storage is dense.
class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(Field f, std::size_t n);
    /// Rows of raw rationals; normalized into f. All rows must have `cols` entries.
    static Matrix from_rows(Field f, std::size_t cols, const std::vector<std::vector<mpq_class>>& rows);
    /// Throws FieldMismatch when entries disagree on the field.
    static Matrix from_scalars(std::size_t cols, const std::vector<std::vector<Scalar>>& rows);
    static Matrix from_columns(Field f, std::size_t rows, const std::vector<Vec>& columns);

    Field field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    const mpq_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    /// Unchecked mutable access; the caller keeps the entry normalized.
    mpq_class& raw(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, const mpq_class& v) { data_[i * cols_ + j] = normalize(v, field_); }
    Scalar at(std::size_t i, std::size_t j) const { return Scalar(field_, (*this)(i, j)); }

    Vec column(std::size_t j) const;
    Vec row(std::size_t i) const;
    std::vector<Vec> columns() const;

    bool is_zero() const;
    Matrix transpose() const;
    Matrix select_columns(const std::vector<std::size_t>& idx) const;
    Matrix select_rows(const std::vector<std::size_t>& idx) const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

    Vec apply(const Vec& v) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    Matrix operator-() const;
    Matrix scaled(const mpq_class& c) const;
    friend bool operator==(const Matrix& a, const Matrix& b);

    std::string to_string() const;

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpq_class> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
/// Block diagonal sum.
Matrix block_diag(const Matrix& a, const Matrix& b);

/// Reduced row echelon form in place; pivots are searched only among
/// columns < pivot_limit (row operations act on the whole row).
/// Returns the pivot columns in order.
std::vector<std::size_t> rref_in_place(Matrix& m, std::size_t pivot_limit);
inline std::vector<std::size_t> rref_in_place(Matrix& m) { return rref_in_place(m, m.cols()); }

std::size_t mat_rank(const Matrix& m);

/// Basis of the right kernel in reduced echelon form: one vector per free
/// column f, with 1 at f, 0 at the other free columns.
std::vector<Vec> mat_kernel_basis(const Matrix& m);
/// The same basis as the columns of a (cols x nullity) matrix.
Matrix kernel_columns(const Matrix& m);
/// Same, also reporting the free column of each basis vector.
Matrix kernel_columns(const Matrix& m, std::vector<std::size_t>& free_cols);

/// Outcome of solve_in_image: a preimage, or a left functional y with
/// y*M = 0 and y*v = 1 certifying v is not in the column space.
struct SolveResult {
    std::optional<Vec> preimage;
    std::optional<Vec> certificate;
    bool in_image() const { return preimage.has_value(); }
};

SolveResult solve_in_image(const Matrix& m, const Vec& v);

/// Indices of a maximal independent set of columns, chosen greedily left to right.
std::vector<std::size_t> independent_columns(const Matrix& m);

/// Coordinates relative to a splitting V ⊇ span(B) ⊕ span(C).
///
/// [B | C] must have independent columns. coords(v) returns the C-part of
/// the unique expression v = B*u + C*w when v lies in span(B, C).
class QuotientCoords {
public:
    QuotientCoords() = default;
    QuotientCoords(const Matrix& b, const Matrix& c);

    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t sub_dim() const noexcept { return nb_; }
    std::size_t quotient_dim() const noexcept { return nc_; }

    bool in_span(const Vec& v) const;
    /// Throws PreconditionError when v is outside span(B, C).
    Vec coords(const Vec& v) const;
    /// Coordinates of many vectors (columns of m) as a (quotient_dim x m.cols()) matrix.
    Matrix coords(const Matrix& m) const;

private:
    Field field_;
    std::size_t ambient_ = 0, nb_ = 0, nc_ = 0;
    Matrix transform_;  // T with T * [B | C] = [I; 0]
};

}  // namespace bggwb
