#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "symdelta/errors.hpp"

namespace symdelta {

/// Dense GF(2) vector, at most 64 coordinates.  Addition is XOR.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(int size, std::uint64_t bits = 0);

    int size() const { return size_; }
    std::uint64_t bits() const { return bits_; }

    bool get(int i) const;
    void set(int i, bool value);
    void flip(int i) { set(i, !get(i)); }

    bool any() const { return bits_ != 0; }
    int popcount() const { return std::popcount(bits_); }
    /// Index of the lowest set bit, -1 for the zero vector.
    int lowest_bit() const { return bits_ ? std::countr_zero(bits_) : -1; }

    BitVec operator^(const BitVec& o) const;
    BitVec& operator^=(const BitVec& o);

    bool operator==(const BitVec&) const = default;
    /// Lexicographic with coordinate 0 most significant.
    bool lex_less(const BitVec& o) const;

private:
    int size_ = 0;
    std::uint64_t bits_ = 0;
};

/// Inner product (parity of the coordinatewise AND); sizes must match.
int dot(const BitVec& a, const BitVec& b);

/// Keep exactly the coordinates selected by `keep_mask`, packed in order.
BitVec compress(const BitVec& v, std::uint64_t keep_mask);

/// Dense GF(2) matrix: a list of equal-length rows, indexed 0..rows-1 and
/// 0..cols-1.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols);
    explicit BitMatrix(std::vector<BitVec> rows);

    static BitMatrix identity(int n);

    int rows() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }

    bool get(int r, int c) const { return rows_.at(r).get(c); }
    void set(int r, int c, bool v) { rows_.at(r).set(c, v); }

    const BitVec& row(int r) const { return rows_.at(r); }
    BitVec& row(int r) { return rows_.at(r); }
    const std::vector<BitVec>& row_list() const { return rows_; }

    bool is_square() const { return rows() == cols_; }
    bool is_symmetric() const;

    BitMatrix transpose() const;
    BitMatrix operator*(const BitMatrix& o) const;
    /// Matrix times column vector.
    BitVec apply(const BitVec& v) const;

    bool operator==(const BitMatrix&) const = default;

private:
    std::vector<BitVec> rows_;
    int cols_ = 0;
};

/// Reduced row echelon form.  Pivot search order is fixed: columns left to
/// right, first available row, so the result is the canonical representative
/// of the row space (up to trailing zero rows, which are kept).
BitMatrix rref(const BitMatrix& m);

/// Pivot column per nonzero row of an rref matrix, in row order.
std::vector<int> pivot_columns(const BitMatrix& echelon);

/// rref with zero rows dropped: the canonical basis of the row space.
BitMatrix row_space_basis(const BitMatrix& m);

int rank(const BitMatrix& m);

/// Determinant over GF(2); the empty 0x0 matrix has determinant 1.
int det(const BitMatrix& m);

/// Basis of the right null space, ordered by free column.
std::vector<BitVec> kernel(const BitMatrix& m);

/// Rows and columns restricted to the index subset `mask`, order preserved.
/// Requires a square matrix and mask within range.
BitMatrix principal_submatrix(const BitMatrix& m, std::uint64_t mask);

/// Columns restricted to `mask`, all rows kept.
BitMatrix column_submatrix(const BitMatrix& m, std::uint64_t mask);

/// True if v lies in the row space of the (rref) basis.
bool in_row_space(const BitMatrix& echelon_basis, const BitVec& v);

/// Coordinates of v in the rref basis rows, or empty if v is outside the
/// row space.
std::vector<int> row_space_coordinates(const BitMatrix& echelon_basis, const BitVec& v);

} // namespace symdelta
