#include "symdelta/set_system.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <limits>
#include <numeric>

namespace symdelta {

SetSystem::SetSystem(GroundSet ground, std::vector<std::uint64_t> feasible)
    : ground_(std::move(ground)), feasible_(std::move(feasible)) {
    const std::uint64_t full = ground_.full_mask();
    for (std::uint64_t f : feasible_)
        if ((f & ~full) != 0)
            throw InvalidArgument("feasible subset not contained in the ground set");
    std::sort(feasible_.begin(), feasible_.end());
    feasible_.erase(std::unique(feasible_.begin(), feasible_.end()), feasible_.end());
}

bool SetSystem::is_feasible(std::uint64_t subset) const {
    return std::binary_search(feasible_.begin(), feasible_.end(), subset);
}

SeaCheck check_sea(const SetSystem& s) {
    if (!s.proper())
        throw ImproperSystem("symmetric exchange axiom is defined for proper systems");
    for (std::uint64_t phi1 : s.feasible()) {
        for (std::uint64_t phi2 : s.feasible()) {
            std::uint64_t diff = phi1 ^ phi2;
            for (std::uint64_t m = diff; m != 0; m &= m - 1) {
                int e = std::countr_zero(m);
                bool found = false;
                // e' = e is allowed: {e,e'} is then the singleton {e}.
                for (std::uint64_t m2 = diff; m2 != 0 && !found; m2 &= m2 - 1) {
                    int e2 = std::countr_zero(m2);
                    std::uint64_t pair = (std::uint64_t{1} << e) | (std::uint64_t{1} << e2);
                    found = s.is_feasible(phi1 ^ pair);
                }
                if (!found)
                    return SeaCheck{false, phi1, phi2, e};
            }
        }
    }
    return SeaCheck{true, 0, 0, -1};
}

SetSystem twist(const SetSystem& s, std::uint64_t subset) {
    if ((subset & ~s.ground().full_mask()) != 0)
        throw InvalidArgument("twist subset not contained in the ground set");
    std::vector<std::uint64_t> out;
    out.reserve(s.feasible().size());
    for (std::uint64_t f : s.feasible())
        out.push_back(f ^ subset);
    return SetSystem(s.ground(), std::move(out));
}

SetSystem restrict_to(const SetSystem& s, std::uint64_t subset, RestrictMode mode) {
    if ((subset & ~s.ground().full_mask()) != 0)
        throw InvalidArgument("restriction subset not contained in the ground set");
    GroundSet sub_ground(s.ground().subset_labels(subset));

    std::vector<std::uint64_t> kept;
    if (mode == RestrictMode::naive) {
        for (std::uint64_t f : s.feasible())
            if ((f & ~subset) == 0)
                kept.push_back(compress(BitVec(s.ground().size(), f), subset).bits());
    } else {
        int best = std::numeric_limits<int>::max();
        for (std::uint64_t f : s.feasible())
            best = std::min(best, std::popcount(f & ~subset));
        for (std::uint64_t f : s.feasible())
            if (std::popcount(f & ~subset) == best)
                kept.push_back(compress(BitVec(s.ground().size(), f), subset).bits());
    }
    return SetSystem(std::move(sub_ground), std::move(kept));
}

SetSystem direct_sum(const SetSystem& a, const SetSystem& b, bool relabel) {
    GroundSet ground;
    if (relabel) {
        ground = GroundSet::range(a.ground().size() + b.ground().size());
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
    int shift = a.ground().size();
    std::vector<std::uint64_t> feasible;
    feasible.reserve(a.feasible().size() * b.feasible().size());
    for (std::uint64_t fa : a.feasible())
        for (std::uint64_t fb : b.feasible())
            feasible.push_back(fa | (fb << shift));
    return SetSystem(std::move(ground), std::move(feasible));
}

namespace {

std::uint64_t permute_mask(std::uint64_t mask, const std::vector<int>& perm) {
    std::uint64_t out = 0;
    for (std::uint64_t m = mask; m != 0; m &= m - 1)
        out |= std::uint64_t{1} << perm[std::countr_zero(m)];
    return out;
}

std::string encode_family(int n, const std::vector<std::uint64_t>& sorted_masks) {
    std::string key;
    key.push_back(static_cast<char>(n));
    // Family size needs two bytes: n = 8 admits 256 feasible sets.
    key.push_back(static_cast<char>(sorted_masks.size() >> 8));
    key.push_back(static_cast<char>(sorted_masks.size() & 0xff));
    for (std::uint64_t m : sorted_masks)
        key.push_back(static_cast<char>(m));
    return key;
}

} // namespace

CanonicalForm canonical_form(const SetSystem& s) {
    const int n = s.ground().size();
    if (n > 8)
        throw GroundSetTooLarge("canonical form supports at most 8 elements");

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);

    std::optional<std::string> best;
    std::vector<int> best_perm = perm;
    std::vector<std::uint64_t> masks(s.feasible().size());
    do {
        for (std::size_t i = 0; i < s.feasible().size(); ++i)
            masks[i] = permute_mask(s.feasible()[i], perm);
        std::sort(masks.begin(), masks.end());
        std::string key = encode_family(n, masks);
        if (!best || key < *best) {
            best = std::move(key);
            best_perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    return CanonicalForm{*best, best_perm};
}

SetSystem set_system_from_key(const std::string& key) {
    if (key.size() < 3)
        throw InvalidArgument("malformed canonical key");
    int n = static_cast<unsigned char>(key[0]);
    int count = (static_cast<unsigned char>(key[1]) << 8) | static_cast<unsigned char>(key[2]);
    if (static_cast<int>(key.size()) != 3 + count)
        throw InvalidArgument("malformed canonical key length");
    std::vector<std::uint64_t> feasible;
    for (int i = 0; i < count; ++i)
        feasible.push_back(static_cast<unsigned char>(key[3 + i]));
    return SetSystem(GroundSet::range(n), std::move(feasible));
}

FramedGraph::FramedGraph(GroundSet vertices, BitMatrix adjacency)
    : vertices_(std::move(vertices)), adjacency_(std::move(adjacency)) {
    if (adjacency_.rows() != vertices_.size() || adjacency_.cols() != vertices_.size())
        throw InvalidArgument("framed graph adjacency matrix size mismatch");
    if (!adjacency_.is_symmetric())
        throw NotSymmetric("framed graph adjacency matrix must be symmetric");
}

DeltaMatroid::DeltaMatroid(SetSystem s) : sys_(std::move(s)) {
    if (!sys_.proper())
        throw ImproperSystem("delta-matroids are proper set systems");
    SeaCheck sea = check_sea(sys_);
    if (!sea)
        throw InvalidArgument("set system violates the symmetric exchange axiom");
}

DeltaMatroid::DeltaMatroid(SetSystem s, Trusted) : sys_(std::move(s)) {
    assert(sys_.proper());
    assert(check_sea(sys_).holds);
}

DeltaMatroid DeltaMatroid::trusted(SetSystem s) {
    return DeltaMatroid(std::move(s), Trusted{});
}

DeltaMatroid nondegeneracy_dm(const FramedGraph& g) {
    std::vector<std::uint64_t> feasible;
    const std::uint64_t full = g.vertices().full_mask();
    for (std::uint64_t u = 0;; ++u) {
        if (det(principal_submatrix(g.adjacency(), u)) == 1)
            feasible.push_back(u);
        if (u == full)
            break;
    }
    return DeltaMatroid::trusted(SetSystem(g.vertices(), std::move(feasible)));
}

BinaryWitness is_binary(const SetSystem& s) {
    if (!s.proper())
        throw ImproperSystem("binary recognition is defined for proper systems");
    const int n = s.ground().size();

    // Normalize so that the empty set is feasible, then read the unique
    // candidate matrix off the small feasible sets:
    //   diagonal from singletons, off-diagonal from det[[a,x],[x,b]] = ab + x.
    const std::uint64_t phi = s.feasible().front();
    SetSystem s0 = twist(s, phi);

    BitMatrix a(n, n);
    for (int e = 0; e < n; ++e)
        a.set(e, e, s0.is_feasible(std::uint64_t{1} << e));
    for (int e = 0; e < n; ++e)
        for (int f = e + 1; f < n; ++f) {
            bool pair_feasible =
                s0.is_feasible((std::uint64_t{1} << e) | (std::uint64_t{1} << f));
            bool x = (a.get(e, e) && a.get(f, f)) != pair_feasible;
            a.set(e, f, x);
            a.set(f, e, x);
        }

    FramedGraph g(s.ground(), a);
    if (nondegeneracy_dm(g).system() == s0)
        return BinaryWitness{true, phi, std::move(g)};
    return BinaryWitness{false, 0, std::nullopt};
}

} // namespace symdelta
