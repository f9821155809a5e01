#include "symdelta/gf2.hpp"

#include <string>

namespace symdelta {

namespace {

void check_index(int i, int size) {
    if (i < 0 || i >= size)
        throw InvalidArgument("bit index " + std::to_string(i) + " out of range [0," +
                              std::to_string(size) + ")");
}

} // namespace

BitVec::BitVec(int size, std::uint64_t bits) : size_(size), bits_(bits) {
    if (size < 0 || size > 64)
        throw InvalidArgument("BitVec size must be between 0 and 64");
    if (size < 64 && (bits >> size) != 0)
        throw InvalidArgument("BitVec initializer has bits beyond declared size");
}

bool BitVec::get(int i) const {
    check_index(i, size_);
    return (bits_ >> i) & 1u;
}

void BitVec::set(int i, bool value) {
    check_index(i, size_);
    if (value)
        bits_ |= std::uint64_t{1} << i;
    else
        bits_ &= ~(std::uint64_t{1} << i);
}

BitVec BitVec::operator^(const BitVec& o) const {
    BitVec r = *this;
    r ^= o;
    return r;
}

BitVec& BitVec::operator^=(const BitVec& o) {
    if (size_ != o.size_)
        throw InvalidArgument("BitVec size mismatch in addition");
    bits_ ^= o.bits_;
    return *this;
}

bool BitVec::lex_less(const BitVec& o) const {
    if (size_ != o.size_)
        return size_ < o.size_;
    if (bits_ == o.bits_)
        return false;
    // Read as a 0/1 string with coordinate 0 first.
    int b = std::countr_zero(bits_ ^ o.bits_);
    return ((bits_ >> b) & 1u) == 0;
}

int dot(const BitVec& a, const BitVec& b) {
    if (a.size() != b.size())
        throw InvalidArgument("BitVec size mismatch in dot product");
    return std::popcount(a.bits() & b.bits()) & 1;
}

BitVec compress(const BitVec& v, std::uint64_t keep_mask) {
    int out_size = std::popcount(keep_mask);
    std::uint64_t out = 0;
    int pos = 0;
    for (std::uint64_t m = keep_mask; m != 0; m &= m - 1) {
        int c = std::countr_zero(m);
        if (c >= v.size())
            throw InvalidArgument("compress mask beyond vector size");
        if ((v.bits() >> c) & 1u)
            out |= std::uint64_t{1} << pos;
        ++pos;
    }
    return BitVec(out_size, out);
}

BitMatrix::BitMatrix(int rows, int cols) : cols_(cols) {
    if (rows < 0 || cols < 0 || cols > 64)
        throw InvalidArgument("BitMatrix dimensions out of range");
    rows_.assign(rows, BitVec(cols));
}

BitMatrix::BitMatrix(std::vector<BitVec> rows) : rows_(std::move(rows)) {
    if (!rows_.empty()) {
        cols_ = rows_.front().size();
        for (const auto& r : rows_)
            if (r.size() != cols_)
                throw InvalidArgument("BitMatrix rows must have equal length");
    }
}

BitMatrix BitMatrix::identity(int n) {
    BitMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.set(i, i, true);
    return m;
}

bool BitMatrix::is_symmetric() const {
    if (!is_square())
        return false;
    for (int r = 0; r < rows(); ++r)
        for (int c = r + 1; c < cols_; ++c)
            if (get(r, c) != get(c, r))
                return false;
    return true;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows());
    for (int r = 0; r < rows(); ++r)
        for (int c = 0; c < cols_; ++c)
            if (get(r, c))
                t.set(c, r, true);
    return t;
}

BitMatrix BitMatrix::operator*(const BitMatrix& o) const {
    if (cols_ != o.rows())
        throw InvalidArgument("BitMatrix product dimension mismatch");
    BitMatrix result(rows(), o.cols());
    for (int r = 0; r < rows(); ++r)
        for (int k = 0; k < cols_; ++k)
            if (get(r, k))
                result.row(r) ^= o.row(k);
    return result;
}

BitVec BitMatrix::apply(const BitVec& v) const {
    if (v.size() != cols_)
        throw InvalidArgument("BitMatrix apply dimension mismatch");
    BitVec out(rows());
    for (int r = 0; r < rows(); ++r)
        if (dot(row(r), v))
            out.set(r, true);
    return out;
}

BitMatrix rref(const BitMatrix& m) {
    BitMatrix a = m;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int pivot = -1;
        for (int i = r; i < a.rows(); ++i)
            if (a.get(i, c)) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(a.row(pivot), a.row(r));
        for (int i = 0; i < a.rows(); ++i)
            if (i != r && a.get(i, c))
                a.row(i) ^= a.row(r);
        ++r;
    }
    return a;
}

std::vector<int> pivot_columns(const BitMatrix& echelon) {
    std::vector<int> pivots;
    for (int r = 0; r < echelon.rows(); ++r) {
        int p = echelon.row(r).lowest_bit();
        if (p >= 0)
            pivots.push_back(p);
    }
    return pivots;
}

BitMatrix row_space_basis(const BitMatrix& m) {
    BitMatrix e = rref(m);
    std::vector<BitVec> rows;
    for (int r = 0; r < e.rows(); ++r)
        if (e.row(r).any())
            rows.push_back(e.row(r));
    if (rows.empty())
        return BitMatrix(0, m.cols());
    return BitMatrix(std::move(rows));
}

int rank(const BitMatrix& m) {
    return row_space_basis(m).rows();
}

int det(const BitMatrix& m) {
    if (!m.is_square())
        throw NotSquare("determinant of a non-square matrix");
    return rank(m) == m.cols() ? 1 : 0;
}

std::vector<BitVec> kernel(const BitMatrix& m) {
    BitMatrix e = rref(m);
    std::vector<int> pivots = pivot_columns(e);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : pivots)
        is_pivot[p] = true;

    std::vector<BitVec> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        BitVec v(m.cols());
        v.set(f, true);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (e.get(static_cast<int>(r), f))
                v.set(pivots[r], true);
        basis.push_back(v);
    }
    return basis;
}

BitMatrix principal_submatrix(const BitMatrix& m, std::uint64_t mask) {
    if (!m.is_square())
        throw NotSquare("principal submatrix of a non-square matrix");
    if (m.cols() < 64 && (mask >> m.cols()) != 0)
        throw InvalidArgument("principal submatrix: subset not within label range");
    int k = std::popcount(mask);
    BitMatrix out(k, k);
    int ri = 0;
    for (std::uint64_t rm = mask; rm != 0; rm &= rm - 1, ++ri) {
        int r = std::countr_zero(rm);
        out.row(ri) = compress(m.row(r), mask);
    }
    return out;
}

BitMatrix column_submatrix(const BitMatrix& m, std::uint64_t mask) {
    if (m.cols() < 64 && (mask >> m.cols()) != 0)
        throw InvalidArgument("column submatrix: subset not within column range");
    BitMatrix out(m.rows(), std::popcount(mask));
    for (int r = 0; r < m.rows(); ++r)
        out.row(r) = compress(m.row(r), mask);
    return out;
}

bool in_row_space(const BitMatrix& echelon_basis, const BitVec& v) {
    BitVec residue = v;
    for (int r = 0; r < echelon_basis.rows(); ++r) {
        int p = echelon_basis.row(r).lowest_bit();
        if (p >= 0 && residue.get(p))
            residue ^= echelon_basis.row(r);
    }
    return !residue.any();
}

std::vector<int> row_space_coordinates(const BitMatrix& echelon_basis, const BitVec& v) {
    BitVec residue = v;
    std::vector<int> coords;
    for (int r = 0; r < echelon_basis.rows(); ++r) {
        int p = echelon_basis.row(r).lowest_bit();
        if (p >= 0 && residue.get(p)) {
            residue ^= echelon_basis.row(r);
            coords.push_back(r);
        }
    }
    if (residue.any())
        return {};
    return coords;
}

} // namespace symdelta
