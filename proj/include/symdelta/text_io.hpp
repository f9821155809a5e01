#pragma once

#include <iosfwd>
#include <string>

#include "symdelta/ribbon.hpp"
#include "symdelta/set_system.hpp"
#include "symdelta/symplectic.hpp"

namespace symdelta {

/// Matrix format: first line "rows cols", then one line of 0/1 characters
/// per row.
BitMatrix parse_matrix(std::istream& in);
std::string print_matrix(const BitMatrix& m);

/// Lagrangian format: one line per basis vector, a vector is a +-separated
/// list of tokens, a token is an element label with an optional ^ suffix for
/// the dual copy (e.g. "1^+2+2^").  The ground set is the set of labels
/// mentioned, in natural order (numeric when all labels are numeric).
LagrangianSubspace parse_lagrangian(std::istream& in);
std::string print_lagrangian(const LagrangianSubspace& l);

/// Delta-matroid format: line 1 lists the ground labels separated by spaces;
/// every further line is one feasible set as comma-separated labels, "-" for
/// the empty set.
SetSystem parse_set_system(std::istream& in);
std::string print_set_system(const SetSystem& s);

/// Ribbon graph format: line 1 is "vertices edges"; one line per vertex with
/// its half-edge ids in rotation order (blank line for an isolated vertex);
/// one line per edge: "label half_a half_b twist".
RibbonGraph parse_ribbon(std::istream& in);
std::string print_ribbon(const RibbonGraph& g);

/// Comma-separated labels -> subset mask of the ground set; "" and "-" both
/// mean the empty subset.
std::uint64_t parse_subset(const GroundSet& ground, const std::string& csv);

/// "{1} {2} {1,2}" rendering of a feasible family; the empty set prints as
/// "{}".
std::string format_family(const SetSystem& s);

/// One feasible set as "{a,b}".
std::string format_subset(const GroundSet& ground, std::uint64_t mask);

} // namespace symdelta
