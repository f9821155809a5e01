#pragma once

#include "symdelta/set_system.hpp"
#include "symdelta/symplectic.hpp"

namespace symdelta {

/// The set system of a Lagrangian subspace: Y is feasible iff L meets the
/// coordinate subspace spanned by the duals of Y and the plain copies of
/// E \ Y only in zero.  Always a proper binary delta-matroid.
SetSystem nu(const LagrangianSubspace& l);

/// The unique Lagrangian subspace with nu(l) == s, reconstructed through the
/// graphic normal form; throws NotBinary.
LagrangianSubspace nu_inverse(const SetSystem& s);

/// nu(local_dual(l, {e})) == twist(nu(l), {e}); exposed as a named helper
/// because the identity is load-bearing for everything downstream.
bool check_twist_equivariance(const LagrangianSubspace& l, int e);

/// The graphic subspace of a framed graph together with its non-degeneracy
/// delta-matroid; nu maps the first onto the second.
std::pair<LagrangianSubspace, DeltaMatroid> graphic_bridge(const FramedGraph& g);

} // namespace symdelta
