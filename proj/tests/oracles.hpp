// Independent reference computations for test expectations.  Everything here
// is deliberately brute force and avoids the library's elimination routines.
#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "symdelta/gf2.hpp"
#include "symdelta/symplectic.hpp"

namespace oracle {

using symdelta::BitMatrix;
using symdelta::BitVec;

/// Size of the row space by enumerating all row combinations.
inline std::size_t row_space_size(const BitMatrix& m) {
    std::set<std::uint64_t> seen;
    for (std::uint64_t combo = 0; combo < (std::uint64_t{1} << m.rows()); ++combo) {
        BitVec v(m.cols());
        for (int r = 0; r < m.rows(); ++r)
            if ((combo >> r) & 1u)
                v ^= m.row(r);
        seen.insert(v.bits());
    }
    return seen.size();
}

inline BitMatrix minor_matrix(const BitMatrix& m, int drop_row, int drop_col) {
    BitMatrix out(m.rows() - 1, m.cols() - 1);
    int ri = 0;
    for (int r = 0; r < m.rows(); ++r) {
        if (r == drop_row)
            continue;
        int ci = 0;
        for (int c = 0; c < m.cols(); ++c) {
            if (c == drop_col)
                continue;
            out.set(ri, ci, m.get(r, c));
            ++ci;
        }
        ++ri;
    }
    return out;
}

/// Determinant over GF(2) by cofactor expansion along the first row.
inline int det_cofactor(const BitMatrix& m) {
    if (m.rows() == 0)
        return 1;
    int total = 0;
    for (int c = 0; c < m.cols(); ++c)
        if (m.get(0, c))
            total ^= det_cofactor(minor_matrix(m, 0, c));
    return total;
}

/// All solutions of m x = 0 found by trying every vector.
inline std::vector<BitVec> kernel_brute(const BitMatrix& m) {
    std::vector<BitVec> out;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << m.cols()); ++x) {
        BitVec v(m.cols(), x);
        if (!m.apply(v).any())
            out.push_back(v);
    }
    return out;
}

/// Identity-free key of a subspace: the sorted list of all its elements,
/// produced by closing the given vectors under addition.
inline std::vector<std::uint64_t> span_elements(const std::vector<BitVec>& vs) {
    std::set<std::uint64_t> span{0};
    for (const BitVec& v : vs) {
        std::set<std::uint64_t> next = span;
        for (std::uint64_t s : span)
            next.insert(s ^ v.bits());
        span = std::move(next);
    }
    return {span.begin(), span.end()};
}

/// Every Lagrangian subspace of V_E as an element-list key, by scanning all
/// n-element sets of nonzero vectors and keeping the isotropic full spans.
inline std::set<std::vector<std::uint64_t>> lagrangian_keys_brute(int n) {
    const int dim = 2 * n;
    const std::uint64_t n_vectors = std::uint64_t{1} << dim;
    std::set<std::vector<std::uint64_t>> keys;

    std::vector<int> idx(n);
    std::vector<std::uint64_t> nonzero;
    for (std::uint64_t v = 1; v < n_vectors; ++v)
        nonzero.push_back(v);

    if (n == 0) {
        keys.insert({0});
        return keys;
    }

    // Combinations of n distinct nonzero vectors.
    for (int i = 0; i < n; ++i)
        idx[i] = i;
    while (true) {
        std::vector<BitVec> vs;
        for (int i = 0; i < n; ++i)
            vs.emplace_back(dim, nonzero[idx[i]]);

        bool isotropic = true;
        for (int i = 0; i < n && isotropic; ++i)
            for (int j = i + 1; j < n && isotropic; ++j)
                if (symdelta::symplectic_form(vs[i], vs[j]))
                    isotropic = false;
        if (isotropic) {
            auto elems = span_elements(vs);
            if (elems.size() == (std::uint64_t{1} << n))
                keys.insert(std::move(elems));
        }

        int k = n - 1;
        while (k >= 0 && idx[k] == static_cast<int>(nonzero.size()) - n + k)
            --k;
        if (k < 0)
            break;
        ++idx[k];
        for (int j = k + 1; j < n; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    return keys;
}

/// Element-list key of a library subspace, for comparison with the brute
/// enumeration.
inline std::vector<std::uint64_t> subspace_key(const symdelta::LagrangianSubspace& l) {
    std::vector<std::uint64_t> elems;
    for (const BitVec& v : l.elements())
        elems.push_back(v.bits());
    std::sort(elems.begin(), elems.end());
    return elems;
}

} // namespace oracle
