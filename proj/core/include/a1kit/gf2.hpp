#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace a1kit {

/// Packed bit vector over the two-element field.
class GF2Vector {
public:
    GF2Vector() = default;
    explicit GF2Vector(std::size_t size);
    static GF2Vector unit(std::size_t size, std::size_t index);
    static GF2Vector from_bits(std::initializer_list<int> bits);

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const;
    void set(std::size_t i, bool value);
    bool is_zero() const;
    std::size_t popcount() const;

    GF2Vector& operator^=(const GF2Vector& other);
    friend GF2Vector operator^(GF2Vector a, const GF2Vector& b) { return a ^= b; }
    bool operator==(const GF2Vector&) const = default;

    /// Indices of the set bits, ascending.
    std::vector<std::size_t> ones() const;
    std::string str() const;

private:
    friend class GF2Matrix;
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense bit-packed matrix over the two-element field. Rows and columns may
/// be zero; arithmetic is mod 2 throughout. Matrices act on column vectors.
class GF2Matrix {
public:
    GF2Matrix() = default;
    GF2Matrix(std::size_t rows, std::size_t cols);
    static GF2Matrix identity(std::size_t n);
    static GF2Matrix from_rows(std::initializer_list<std::initializer_list<int>> rows);
    /// Stacks the given vectors as rows. All must have length `cols`.
    static GF2Matrix from_row_vectors(std::size_t cols, const std::vector<GF2Vector>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value);

    GF2Vector row(std::size_t r) const;
    void set_row(std::size_t r, const GF2Vector& v);
    /// row r += row s
    void xor_row(std::size_t r, std::size_t s);
    void swap_rows(std::size_t r, std::size_t s);

    GF2Matrix transposed() const;
    bool is_zero() const;

    /// Matrix product; cols(lhs) must equal rows(rhs).
    friend GF2Matrix operator*(const GF2Matrix& lhs, const GF2Matrix& rhs);
    friend GF2Matrix operator+(const GF2Matrix& lhs, const GF2Matrix& rhs);
    /// m . x with x of length cols().
    GF2Vector apply(const GF2Vector& x) const;

    bool operator==(const GF2Matrix&) const = default;
    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> data_;
};

struct RrefResult {
    GF2Matrix reduced;
    std::vector<std::size_t> pivots;  // pivot column indices, ascending
};

/// Reduced row-echelon form. Pivot search scans columns left to right, so the
/// result is unique and deterministic.
RrefResult rref(const GF2Matrix& m);

std::size_t rank(const GF2Matrix& m);

/// Basis of the null space {x : m x = 0}, one basis vector per row. Basis
/// vector i has a 1 in the i-th free (non-pivot) column and zeros in the
/// other free columns; rows are ordered by free column index.
GF2Matrix kernel_basis(const GF2Matrix& m);

/// Some x with m x = b, or nullopt if the system is inconsistent. The
/// returned solution has zeros in all free coordinates.
std::optional<GF2Vector> solve(const GF2Matrix& m, const GF2Vector& b);

/// A row space kept in reduced echelon form, supporting incremental spans,
/// membership tests and canonical reductions. The ambient dimension is fixed
/// at construction.
class RowSpace {
public:
    explicit RowSpace(std::size_t ambient);
    /// Space spanned by the rows of m.
    explicit RowSpace(const GF2Matrix& m);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }

    /// Adds v to the span. Returns true if the dimension grew.
    bool insert(GF2Vector v);
    bool contains(const GF2Vector& v) const;
    /// Canonical representative of v modulo the span: all pivot coordinates
    /// eliminated.
    GF2Vector reduce(GF2Vector v) const;
    /// Pivot columns, ascending.
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    /// Non-pivot columns, ascending.
    std::vector<std::size_t> free_coords() const;
    /// Coordinates of v in the echelon row basis; nullopt if v is outside
    /// the span.
    std::optional<GF2Vector> coords_in_basis(const GF2Vector& v) const;
    /// Coordinates of the class of v in the quotient basis given by the free
    /// columns (reduce, then gather free coordinates).
    GF2Vector quotient_coords(const GF2Vector& v) const;
    /// The echelon rows as a matrix (dim() x ambient()); canonical for the
    /// subspace, so two spans are equal iff these matrices are.
    GF2Matrix basis_matrix() const;

private:
    std::size_t ambient_;
    std::vector<GF2Vector> rows_;        // reduced echelon rows
    std::vector<std::size_t> pivots_;    // pivots_[i] = pivot column of rows_[i]
};

/// True if the rows of a and b span the same subspace.
bool same_row_space(const GF2Matrix& a, const GF2Matrix& b);

}  // namespace a1kit
