#pragma once

#include <cstdint>
#include <vector>

#include "symdelta/gf2.hpp"
#include "symdelta/ground_set.hpp"

namespace symdelta {

/// Vectors of V_E have 2|E| coordinates: bit i is element i of the ground
/// set, bit n+i its dual copy.
using SymplecticVector = BitVec;

/// The standard basis vector for element e of an n-element ground set.
SymplecticVector basis_element(int n, int e);
/// The standard basis vector for the dual copy of element e.
SymplecticVector basis_dual(int n, int e);

/// The symplectic form: each element pairs to 1 with its dual copy and to 0
/// with everything else, extended bilinearly.
int symplectic_form(const SymplecticVector& u, const SymplecticVector& v);

/// A Lagrangian subspace of V_E, held as the unique reduced row echelon
/// basis; equality of values is equality of subspaces.
class LagrangianSubspace {
public:
    LagrangianSubspace() = default;

    /// Canonicalize the span; throws WrongDimension if the span is not
    /// |E|-dimensional and NotIsotropic if the form does not vanish on it.
    static LagrangianSubspace span(GroundSet ground,
                                   const std::vector<SymplecticVector>& spanning);

    /// Adopt an already-reduced echelon basis (validated).
    static LagrangianSubspace from_echelon_basis(GroundSet ground, BitMatrix basis);

    const GroundSet& ground() const { return ground_; }
    int n() const { return ground_.size(); }
    const BitMatrix& basis() const { return basis_; }

    bool contains(const SymplecticVector& v) const { return in_row_space(basis_, v); }
    /// All 2^n vectors of the subspace (n is small everywhere here).
    std::vector<SymplecticVector> elements() const;

    bool operator==(const LagrangianSubspace&) const = default;
    bool lex_less(const LagrangianSubspace& o) const;

private:
    GroundSet ground_;
    BitMatrix basis_;
};

/// Swap the coordinates e <-> dual(e) for every e in `subset`; an involution.
LagrangianSubspace local_dual(const LagrangianSubspace& l, std::uint64_t subset);

struct GraphicWitness {
    bool graphic = false;
    /// On success, witnesses[e] lies in L, pairs to 1 with element e and to 0
    /// with every other element; together they form a basis.
    std::vector<SymplecticVector> witnesses;

    explicit operator bool() const { return graphic; }
};

GraphicWitness is_graphic(const LagrangianSubspace& l);

/// The symmetric matrix A with A[e][e'] = (v_e, dual(e')) for the graphic
/// witness basis; throws NotGraphic otherwise.
BitMatrix graphic_matrix(const LagrangianSubspace& l);

/// The graphic subspace spanned by v_e = dual(e) + sum_{e'} A[e][e'] e';
/// inverse of graphic_matrix.  Throws NotSymmetric.
LagrangianSubspace from_symmetric_matrix(GroundSet ground, const BitMatrix& a);

/// A subset E' such that local_dual(l, E') is graphic, found by the greedy
/// pairing scan over the standard basis in coordinate order.
std::uint64_t graphify(const LagrangianSubspace& l);

/// Every Lagrangian subspace of V_E exactly once, sorted by the echelon
/// basis read as a bit string.  Guarded to |E| <= 5.
std::vector<LagrangianSubspace> enumerate_lagrangians(const GroundSet& ground);

/// Number of Lagrangian subspaces of V_E: the product of (2^i + 1) for
/// i = 1..n.
std::uint64_t lagrangian_count(int n);

/// Which coisotropic subspace realizes the reduction onto V_I.
enum class ReduceConvention {
    /// W spanned by I, its duals, and the discarded elements undualized
    /// (the shipped default; the coproduct experiment selects it).
    undualized_perp,
    /// W spanned by I, its duals, and the duals of discarded elements.
    dualized_perp,
};

/// Symplectic reduction of l onto the sub-ground `subset`.
LagrangianSubspace reduce(const LagrangianSubspace& l, std::uint64_t subset,
                          ReduceConvention convention = ReduceConvention::undualized_perp);

struct VassilievMove {
    enum class Kind { first, second };
    Kind kind = Kind::first;
    /// Ordered pair of distinct element indices; the second move is not
    /// symmetric in them.
    int e = 0;
    int e_prime = 1;
};

/// The 2n x 2n matrix of the move acting on column vectors of V_E.
BitMatrix move_matrix(int n, const VassilievMove& m);

/// Image of the subspace under the move, canonicalized.
LagrangianSubspace apply_move(const LagrangianSubspace& l, const VassilievMove& m);

/// Direct sum in the direct sum of symplectic spaces; grounds must be
/// disjoint unless relabel is set (labels become "1".."n+m").
LagrangianSubspace direct_sum(const LagrangianSubspace& a, const LagrangianSubspace& b,
                              bool relabel = false);

} // namespace symdelta
