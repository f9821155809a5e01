#include "symdelta/correspondence.hpp"

#include <bit>

namespace symdelta {

SetSystem nu(const LagrangianSubspace& l) {
    const int n = l.n();
    const std::uint64_t full = l.ground().full_mask();
    std::vector<std::uint64_t> feasible;

    // L meets <Y-dual ∪ (E\Y)> trivially iff no nonzero combination of basis
    // rows vanishes on the complementary coordinates Y ∪ (E\Y)-dual, i.e.
    // iff the basis restricted to those columns has full rank.
    for (std::uint64_t y = 0;; ++y) {
        std::uint64_t off_cols = y | ((~y & full) << n);
        if (rank(column_submatrix(l.basis(), off_cols)) == n)
            feasible.push_back(y);
        if (y == full)
            break;
    }
    return SetSystem(l.ground(), std::move(feasible));
}

LagrangianSubspace nu_inverse(const SetSystem& s) {
    if (!s.proper())
        throw NotBinary("improper systems are not binary delta-matroids");
    BinaryWitness w = is_binary(s);
    if (!w)
        throw NotBinary("set system is not a twist of a non-degeneracy delta-matroid");
    LagrangianSubspace graphic = from_symmetric_matrix(s.ground(), w.graph->adjacency());
    return local_dual(graphic, w.twist_set);
}

bool check_twist_equivariance(const LagrangianSubspace& l, int e) {
    if (e < 0 || e >= l.n())
        throw InvalidArgument("element index out of range");
    std::uint64_t m = std::uint64_t{1} << e;
    return nu(local_dual(l, m)) == twist(nu(l), m);
}

std::pair<LagrangianSubspace, DeltaMatroid> graphic_bridge(const FramedGraph& g) {
    return {from_symmetric_matrix(g.vertices(), g.adjacency()), nondegeneracy_dm(g)};
}

} // namespace symdelta
