#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symdelta/gf2.hpp"
#include "symdelta/ground_set.hpp"

namespace symdelta {

/// Subset symmetric difference on bit masks.
inline std::uint64_t sym_diff(std::uint64_t a, std::uint64_t b) { return a ^ b; }

/// A ground set together with a family of feasible subsets, stored as sorted
/// deduplicated bit masks.  The empty family (improper system) is
/// representable; DeltaMatroid rejects it.
class SetSystem {
public:
    SetSystem() = default;
    SetSystem(GroundSet ground, std::vector<std::uint64_t> feasible);

    const GroundSet& ground() const { return ground_; }
    const std::vector<std::uint64_t>& feasible() const { return feasible_; }

    bool proper() const { return !feasible_.empty(); }
    bool is_feasible(std::uint64_t subset) const;

    bool operator==(const SetSystem&) const = default;

private:
    GroundSet ground_;
    std::vector<std::uint64_t> feasible_;
};

/// Counterexample-carrying result of the symmetric exchange axiom check.
struct SeaCheck {
    bool holds = false;
    // Populated on failure: feasible phi1, phi2 and e in phi1 ^ phi2 with no
    // partner e'.
    std::uint64_t phi1 = 0;
    std::uint64_t phi2 = 0;
    int element = -1;

    explicit operator bool() const { return holds; }
};

/// Brute-force symmetric exchange axiom; throws ImproperSystem on the empty
/// family.
SeaCheck check_sea(const SetSystem& s);

/// XOR every feasible set with `subset`; an involution.
SetSystem twist(const SetSystem& s, std::uint64_t subset);

enum class RestrictMode {
    /// Keep feasible sets contained in the subset; may yield an improper
    /// system.
    naive,
    /// Keep the feasible sets with the fewest elements outside the subset and
    /// intersect them with it; always proper, agrees with naive whenever
    /// naive is proper.
    minimal_excess,
};

SetSystem restrict_to(const SetSystem& s, std::uint64_t subset,
                      RestrictMode mode = RestrictMode::minimal_excess);

/// Disjoint union of grounds, feasible family = pairwise unions.  Overlapping
/// labels are an error unless relabel is set, in which case both grounds are
/// renamed to "1".."n+m".
SetSystem direct_sum(const SetSystem& a, const SetSystem& b, bool relabel = false);

struct CanonicalForm {
    /// Equal keys iff the systems are isomorphic (as label-free set systems).
    std::string key;
    /// Permutation realizing the key: element i of the input maps to
    /// position permutation[i] of the canonical system.
    std::vector<int> permutation;
};

/// Lexicographically minimal encoding of the feasible family over all
/// permutations of the ground labels.  Ground sets of more than 8 elements
/// are rejected.
CanonicalForm canonical_form(const SetSystem& s);

/// Rebuild the canonical representative from a canonical_form key, with
/// labels "1".."n".
SetSystem set_system_from_key(const std::string& key);

/// Simple graph with a GF(2) framing at each vertex: symmetric adjacency
/// matrix, framings on the diagonal.
class FramedGraph {
public:
    FramedGraph() = default;
    FramedGraph(GroundSet vertices, BitMatrix adjacency);

    const GroundSet& vertices() const { return vertices_; }
    const BitMatrix& adjacency() const { return adjacency_; }
    bool framing(int v) const { return adjacency_.get(v, v); }

    bool operator==(const FramedGraph&) const = default;

private:
    GroundSet vertices_;
    BitMatrix adjacency_;
};

/// Proper set system satisfying the symmetric exchange axiom.
class DeltaMatroid {
public:
    explicit DeltaMatroid(SetSystem s);

    /// Wraps without running the SEA check, for families that satisfy it by
    /// construction; debug builds still assert it.
    static DeltaMatroid trusted(SetSystem s);

    const SetSystem& system() const { return sys_; }
    const GroundSet& ground() const { return sys_.ground(); }

    bool operator==(const DeltaMatroid&) const = default;

private:
    struct Trusted {};
    DeltaMatroid(SetSystem s, Trusted);

    SetSystem sys_;
};

/// Feasible sets are the vertex subsets whose induced adjacency submatrix is
/// non-degenerate; the empty set is always feasible.
DeltaMatroid nondegeneracy_dm(const FramedGraph& g);

struct BinaryWitness {
    bool binary = false;
    /// On success: s == twist(nondegeneracy_dm(graph), twist_set).
    std::uint64_t twist_set = 0;
    std::optional<FramedGraph> graph;

    explicit operator bool() const { return binary; }
};

/// Decide whether s is a twist of a non-degeneracy delta-matroid, by
/// reconstruction of the unique candidate framed graph.
BinaryWitness is_binary(const SetSystem& s);

} // namespace symdelta
