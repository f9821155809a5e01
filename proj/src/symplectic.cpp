#include "symdelta/symplectic.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <optional>

namespace symdelta {

namespace {

std::uint64_t low_mask(int n) {
    return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

int half_dim(const SymplecticVector& v) {
    if (v.size() % 2 != 0)
        throw InvalidArgument("symplectic vectors have even length");
    return v.size() / 2;
}

} // namespace

SymplecticVector basis_element(int n, int e) {
    BitVec v(2 * n);
    v.set(e, true);
    return v;
}

SymplecticVector basis_dual(int n, int e) {
    BitVec v(2 * n);
    v.set(n + e, true);
    return v;
}

int symplectic_form(const SymplecticVector& u, const SymplecticVector& v) {
    if (u.size() != v.size())
        throw InvalidArgument("symplectic form: mismatched ground sets");
    int n = half_dim(u);
    std::uint64_t ue = u.bits() & low_mask(n), ud = u.bits() >> n;
    std::uint64_t ve = v.bits() & low_mask(n), vd = v.bits() >> n;
    return (std::popcount(ue & vd) + std::popcount(ud & ve)) & 1;
}

LagrangianSubspace LagrangianSubspace::span(GroundSet ground,
                                            const std::vector<SymplecticVector>& spanning) {
    const int n = ground.size();
    for (const auto& v : spanning)
        if (v.size() != 2 * n)
            throw InvalidArgument("spanning vector length does not match the ground set");
    for (std::size_t i = 0; i < spanning.size(); ++i)
        for (std::size_t j = i; j < spanning.size(); ++j)
            if (symplectic_form(spanning[i], spanning[j]) != 0)
                throw NotIsotropic("spanning vectors do not span an isotropic subspace");

    BitMatrix basis = spanning.empty() ? BitMatrix(0, 2 * n)
                                       : row_space_basis(BitMatrix(spanning));
    if (basis.rows() != n)
        throw WrongDimension("span dimension is not half the space dimension");

    LagrangianSubspace l;
    l.ground_ = std::move(ground);
    l.basis_ = std::move(basis);
    return l;
}

LagrangianSubspace LagrangianSubspace::from_echelon_basis(GroundSet ground, BitMatrix basis) {
    if (rref(basis) != basis)
        throw InvalidArgument("basis is not in reduced row echelon form");
    return span(std::move(ground), basis.row_list());
}

std::vector<SymplecticVector> LagrangianSubspace::elements() const {
    std::vector<SymplecticVector> out{BitVec(2 * n())};
    for (int r = 0; r < basis_.rows(); ++r) {
        std::size_t sz = out.size();
        for (std::size_t i = 0; i < sz; ++i)
            out.push_back(out[i] ^ basis_.row(r));
    }
    return out;
}

bool LagrangianSubspace::lex_less(const LagrangianSubspace& o) const {
    for (int r = 0; r < basis_.rows() && r < o.basis_.rows(); ++r) {
        if (basis_.row(r) == o.basis_.row(r))
            continue;
        return basis_.row(r).lex_less(o.basis_.row(r));
    }
    return basis_.rows() < o.basis_.rows();
}

LagrangianSubspace local_dual(const LagrangianSubspace& l, std::uint64_t subset) {
    const int n = l.n();
    if ((subset & ~l.ground().full_mask()) != 0)
        throw InvalidArgument("local duality subset not contained in the ground set");
    std::vector<SymplecticVector> rows;
    rows.reserve(n);
    for (int r = 0; r < n; ++r) {
        BitVec v = l.basis().row(r);
        for (std::uint64_t m = subset; m != 0; m &= m - 1) {
            int e = std::countr_zero(m);
            bool a = v.get(e), b = v.get(n + e);
            v.set(e, b);
            v.set(n + e, a);
        }
        rows.push_back(v);
    }
    return LagrangianSubspace::span(l.ground(), rows);
}

GraphicWitness is_graphic(const LagrangianSubspace& l) {
    const int n = l.n();
    // Eliminate with pivots restricted to the dual block; the subspace is
    // graphic iff that block has full rank, and then the reduced rows are
    // exactly the witness vectors.
    std::vector<BitVec> rows = l.basis().row_list();
    int r = 0;
    for (int e = 0; e < n && r < static_cast<int>(rows.size()); ++e) {
        int c = n + e;
        int pivot = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (rows[i].get(c)) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(rows[pivot], rows[r]);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i)
            if (i != r && rows[i].get(c))
                rows[i] ^= rows[r];
        ++r;
    }
    if (r < n)
        return GraphicWitness{false, {}};

    // Row i now has dual block equal to the indicator of element i.
    GraphicWitness w;
    w.graphic = true;
    w.witnesses = std::move(rows);
    return w;
}

BitMatrix graphic_matrix(const LagrangianSubspace& l) {
    GraphicWitness w = is_graphic(l);
    if (!w)
        throw NotGraphic("subspace admits no graphic witness basis");
    const int n = l.n();
    BitMatrix a(n, n);
    for (int e = 0; e < n; ++e)
        for (int f = 0; f < n; ++f)
            a.set(e, f, w.witnesses[e].get(f));
    assert(a.is_symmetric());
    return a;
}

LagrangianSubspace from_symmetric_matrix(GroundSet ground, const BitMatrix& a) {
    const int n = ground.size();
    if (a.rows() != n || a.cols() != n)
        throw InvalidArgument("matrix size does not match the ground set");
    if (!a.is_symmetric())
        throw NotSymmetric("graphic subspaces come from symmetric matrices");
    std::vector<SymplecticVector> rows;
    rows.reserve(n);
    for (int e = 0; e < n; ++e) {
        BitVec v(2 * n, a.row(e).bits());
        v.set(n + e, true);
        rows.push_back(v);
    }
    return LagrangianSubspace::span(std::move(ground), rows);
}

std::uint64_t graphify(const LagrangianSubspace& l) {
    const int n = l.n();
    std::vector<BitVec> work = l.basis().row_list();
    std::uint64_t selected_duals = 0;
    int selected = 0;

    for (int c = 0; c < 2 * n && selected < n; ++c) {
        // Pairing with the standard basis vector c reads off the partner
        // coordinate.
        int partner = c < n ? c + n : c - n;
        int best = -1;
        for (int i = 0; i < static_cast<int>(work.size()); ++i) {
            if (!work[i].get(partner))
                continue;
            if (best < 0 || work[i].lowest_bit() < work[best].lowest_bit())
                best = i;
        }
        if (best < 0)
            continue;
        BitVec v = work[best];
        work.erase(work.begin() + best);
        for (auto& w : work)
            if (w.get(partner))
                w ^= v;
        if (c >= n)
            selected_duals |= std::uint64_t{1} << (c - n);
        ++selected;
    }
    assert(selected == n);
    return selected_duals;
}

std::uint64_t lagrangian_count(int n) {
    std::uint64_t total = 1;
    for (int i = 1; i <= n; ++i)
        total *= (std::uint64_t{1} << i) + 1;
    return total;
}

namespace {

struct AffineSolution {
    BitVec particular;
    std::vector<BitVec> kernel_basis;
};

/// Solve M x = b over GF(2); empty optional if inconsistent.
std::optional<AffineSolution> solve_affine(const BitMatrix& m, const BitVec& b) {
    const int nc = m.cols();
    BitMatrix aug(m.rows(), nc + 1);
    for (int r = 0; r < m.rows(); ++r) {
        aug.row(r) = BitVec(nc + 1, m.row(r).bits());
        aug.set(r, nc, b.get(r));
    }
    BitMatrix e = rref(aug);
    std::vector<int> pivots = pivot_columns(e);
    for (int p : pivots)
        if (p == nc)
            return std::nullopt;

    std::vector<bool> is_pivot(nc, false);
    BitVec particular(nc);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        is_pivot[pivots[r]] = true;
        particular.set(pivots[r], e.get(static_cast<int>(r), nc));
    }
    std::vector<BitVec> kb;
    for (int f = 0; f < nc; ++f) {
        if (is_pivot[f])
            continue;
        BitVec v(nc);
        v.set(f, true);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (e.get(static_cast<int>(r), f))
                v.set(pivots[r], true);
        kb.push_back(v);
    }
    return AffineSolution{particular, std::move(kb)};
}

/// Row filling for the Lagrangian enumeration: fixed pivot columns, free
/// entries constrained by isotropy against the rows already chosen below.
void fill_rows(int n, const std::vector<int>& pivots, int row,
               std::vector<BitVec>& rows, std::vector<LagrangianSubspace>& out,
               const GroundSet& ground) {
    if (row < 0) {
        BitMatrix basis(rows);
        LagrangianSubspace l;
        // The construction guarantees rref, rank and isotropy; go through
        // the validating constructor anyway, it is cheap at these sizes.
        out.push_back(LagrangianSubspace::from_echelon_basis(ground, basis));
        return;
    }

    const int p = pivots[row];
    std::vector<int> free_cols;
    for (int c = p + 1; c < 2 * n; ++c)
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
            free_cols.push_back(c);

    auto partner = [n](int c) { return c < n ? c + n : c - n; };

    // One linear constraint per filled row below this one.
    const int n_constraints = static_cast<int>(rows.size()) - row - 1;
    BitMatrix m(n_constraints, static_cast<int>(free_cols.size()));
    BitVec b(n_constraints);
    for (int j = 0; j < n_constraints; ++j) {
        const BitVec& below = rows[row + 1 + j];
        for (std::size_t k = 0; k < free_cols.size(); ++k)
            m.set(j, static_cast<int>(k), below.get(partner(free_cols[k])));
        b.set(j, below.get(partner(p)));
    }

    auto sol = solve_affine(m, b);
    if (!sol)
        return;

    const std::size_t k = sol->kernel_basis.size();
    for (std::uint64_t combo = 0; combo < (std::uint64_t{1} << k); ++combo) {
        BitVec x = sol->particular;
        for (std::size_t i = 0; i < k; ++i)
            if ((combo >> i) & 1u)
                x ^= sol->kernel_basis[i];
        BitVec r(2 * n);
        r.set(p, true);
        for (std::size_t i = 0; i < free_cols.size(); ++i)
            r.set(free_cols[i], x.get(static_cast<int>(i)));
        rows[row] = r;
        fill_rows(n, pivots, row - 1, rows, out, ground);
    }
    rows[row] = BitVec(2 * n);
}

} // namespace

std::vector<LagrangianSubspace> enumerate_lagrangians(const GroundSet& ground) {
    const int n = ground.size();
    if (n > 5)
        throw GroundSetTooLarge("Lagrangian enumeration is guarded to 5 elements");

    std::vector<LagrangianSubspace> out;
    if (n == 0) {
        out.push_back(LagrangianSubspace::span(ground, {}));
        return out;
    }

    const std::uint64_t col_mask = low_mask(2 * n);
    for (std::uint64_t pm = 0; pm <= col_mask; ++pm) {
        if (std::popcount(pm) != n)
            continue;
        std::vector<int> pivots;
        for (std::uint64_t m = pm; m != 0; m &= m - 1)
            pivots.push_back(std::countr_zero(m));
        std::vector<BitVec> rows(n, BitVec(2 * n));
        fill_rows(n, pivots, n - 1, rows, out, ground);
    }

    std::sort(out.begin(), out.end(),
              [](const LagrangianSubspace& a, const LagrangianSubspace& b) {
                  return a.lex_less(b);
              });
    assert(out.size() == lagrangian_count(n));
    return out;
}

LagrangianSubspace reduce(const LagrangianSubspace& l, std::uint64_t subset,
                          ReduceConvention convention) {
    const int n = l.n();
    if ((subset & ~l.ground().full_mask()) != 0)
        throw InvalidArgument("reduction subset not contained in the ground set");

    const std::uint64_t discarded = l.ground().full_mask() & ~subset;
    std::uint64_t forbidden = 0; // coordinates that vectors of L ∩ W must avoid
    for (std::uint64_t m = discarded; m != 0; m &= m - 1) {
        int e = std::countr_zero(m);
        forbidden |= std::uint64_t{1}
                     << (convention == ReduceConvention::undualized_perp ? n + e : e);
    }

    // Combinations of basis rows vanishing on the forbidden coordinates.
    BitMatrix restricted = column_submatrix(l.basis(), forbidden);
    std::vector<BitVec> lambdas = kernel(restricted.transpose());

    std::uint64_t keep = 0;
    for (std::uint64_t m = subset; m != 0; m &= m - 1) {
        int e = std::countr_zero(m);
        keep |= (std::uint64_t{1} << e) | (std::uint64_t{1} << (n + e));
    }

    std::vector<SymplecticVector> projected;
    for (const BitVec& lam : lambdas) {
        BitVec v(2 * n);
        for (int r = 0; r < n; ++r)
            if (lam.get(r))
                v ^= l.basis().row(r);
        projected.push_back(compress(v, keep));
    }
    // The projection can collapse dimensions; span() re-canonicalizes and
    // certifies the Lagrangian property of the reduction.
    BitMatrix basis = projected.empty() ? BitMatrix(0, 2 * std::popcount(subset))
                                        : row_space_basis(BitMatrix(projected));
    return LagrangianSubspace::span(GroundSet(l.ground().subset_labels(subset)),
                                    basis.row_list());
}

BitMatrix move_matrix(int n, const VassilievMove& m) {
    if (m.e < 0 || m.e >= n || m.e_prime < 0 || m.e_prime >= n || m.e == m.e_prime)
        throw InvalidArgument("Vassiliev move needs an ordered pair of distinct elements");
    // First move: dual(e) -> dual(e) + e', dual(e') -> dual(e') + e.
    BitMatrix first = BitMatrix::identity(2 * n);
    first.set(m.e_prime, n + m.e, true);
    first.set(m.e, n + m.e_prime, true);
    if (m.kind == VassilievMove::Kind::first)
        return first;
    // Second move: conjugate the first by the coordinate swap at e'.
    BitMatrix tw = BitMatrix::identity(2 * n);
    tw.set(m.e_prime, m.e_prime, false);
    tw.set(n + m.e_prime, n + m.e_prime, false);
    tw.set(m.e_prime, n + m.e_prime, true);
    tw.set(n + m.e_prime, m.e_prime, true);
    return tw * first * tw;
}

LagrangianSubspace apply_move(const LagrangianSubspace& l, const VassilievMove& m) {
    BitMatrix mat = move_matrix(l.n(), m);
    std::vector<SymplecticVector> rows;
    rows.reserve(l.n());
    for (int r = 0; r < l.n(); ++r)
        rows.push_back(mat.apply(l.basis().row(r)));
    return LagrangianSubspace::span(l.ground(), rows);
}

LagrangianSubspace direct_sum(const LagrangianSubspace& a, const LagrangianSubspace& b,
                              bool relabel) {
    const int na = a.n(), nb = b.n(), n = na + nb;
    GroundSet ground;
    if (relabel) {
        ground = GroundSet::range(n);
    } else {
        std::vector<std::string> labels = a.ground().labels();
        for (const auto& l : b.ground().labels()) {
            if (a.ground().contains(l))
                throw InvalidArgument("direct sum grounds overlap at label " + l +
                                      " (pass relabel to rename)");
            labels.push_back(l);
        }
        ground = GroundSet(std::move(labels));
    }

    std::vector<SymplecticVector> rows;
    rows.reserve(n);
    for (int r = 0; r < na; ++r) {
        const BitVec& v = a.basis().row(r);
        BitVec w(2 * n);
        for (int i = 0; i < na; ++i) {
            w.set(i, v.get(i));
            w.set(n + i, v.get(na + i));
        }
        rows.push_back(w);
    }
    for (int r = 0; r < nb; ++r) {
        const BitVec& v = b.basis().row(r);
        BitVec w(2 * n);
        for (int i = 0; i < nb; ++i) {
            w.set(na + i, v.get(i));
            w.set(n + na + i, v.get(nb + i));
        }
        rows.push_back(w);
    }
    return LagrangianSubspace::span(std::move(ground), rows);
}

} // namespace symdelta
