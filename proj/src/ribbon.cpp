#include "symdelta/ribbon.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <numeric>

namespace symdelta {

GroundSet RibbonGraph::edge_ground() const {
    std::vector<std::string> labels;
    labels.reserve(edges.size());
    for (const auto& e : edges)
        labels.push_back(e.label);
    return GroundSet(std::move(labels));
}

void RibbonGraph::validate() const {
    const int m = n_edges();
    std::vector<int> rotation_seen(2 * m, 0), pairing_seen(2 * m, 0);
    for (const auto& rot : rotations)
        for (int h : rot) {
            if (h < 0 || h >= 2 * m)
                throw InvalidArgument("half-edge id out of range (ids are 0..2m-1)");
            ++rotation_seen[h];
        }
    for (const auto& e : edges) {
        for (int h : {e.half_a, e.half_b}) {
            if (h < 0 || h >= 2 * m)
                throw InvalidArgument("half-edge id out of range (ids are 0..2m-1)");
            ++pairing_seen[h];
        }
        if (e.half_a == e.half_b)
            throw InvalidArgument("edge pairs a half-edge with itself");
    }
    for (int h = 0; h < 2 * m; ++h) {
        if (rotation_seen[h] != 1)
            throw InvalidArgument("half-edge " + std::to_string(h) +
                                  " must occur in exactly one rotation position");
        if (pairing_seen[h] != 1)
            throw InvalidArgument("half-edge " + std::to_string(h) +
                                  " must occur in exactly one edge");
    }
    edge_ground(); // label distinctness
}

RibbonGraph RibbonGraph::normalized() const {
    RibbonGraph out = *this;
    for (auto& rot : out.rotations) {
        if (rot.empty())
            continue;
        auto min_it = std::min_element(rot.begin(), rot.end());
        std::rotate(rot.begin(), min_it, rot.end());
    }
    std::stable_sort(out.rotations.begin(), out.rotations.end(),
                     [](const std::vector<int>& a, const std::vector<int>& b) {
                         if (a.empty() || b.empty())
                             return !a.empty() && b.empty();
                         return a.front() < b.front();
                     });
    for (auto& e : out.edges)
        if (e.half_a > e.half_b)
            std::swap(e.half_a, e.half_b);
    return out;
}

bool is_connected(const RibbonGraph& g) {
    const int nv = g.n_vertices();
    if (nv <= 1)
        return true;
    std::vector<int> vertex_of(2 * g.n_edges(), -1);
    for (int v = 0; v < nv; ++v)
        for (int h : g.rotations[v])
            vertex_of[h] = v;

    std::vector<int> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : g.edges)
        parent[find(vertex_of[e.half_a])] = find(vertex_of[e.half_b]);

    int root = find(0);
    for (int v = 1; v < nv; ++v)
        if (find(v) != root)
            return false;
    return true;
}

namespace {

/// Corner structure of a ribbon graph.  Each half-edge h has two corners
/// 2h (the side a boundary walk enters along the vertex) and 2h+1 (the side
/// it leaves on).  Three involutions generate everything:
///   stub[c]  - the other corner of the same half-edge;
///   arc[c]   - the corner joined along the vertex boundary;
///   side[c]  - the corner joined along the ribbon side.
/// Vertices are <stub,arc>-orbits, edges <stub,side>-orbits, boundary
/// components <arc,side>-orbits.
struct Gem {
    std::vector<int> stub, arc, side;
    std::vector<int> edge_of; // edge-list index per corner
    int isolated_vertices = 0;

    int corners() const { return static_cast<int>(stub.size()); }
};

Gem build_gem(const RibbonGraph& g) {
    const int m = g.n_edges();
    Gem gem;
    gem.stub.assign(4 * m, -1);
    gem.arc.assign(4 * m, -1);
    gem.side.assign(4 * m, -1);
    gem.edge_of.assign(4 * m, -1);

    for (int h = 0; h < 2 * m; ++h) {
        gem.stub[2 * h] = 2 * h + 1;
        gem.stub[2 * h + 1] = 2 * h;
    }
    for (const auto& rot : g.rotations) {
        if (rot.empty()) {
            ++gem.isolated_vertices;
            continue;
        }
        const int k = static_cast<int>(rot.size());
        for (int i = 0; i < k; ++i) {
            int out = 2 * rot[i] + 1;
            int in = 2 * rot[(i + 1) % k];
            gem.arc[out] = in;
            gem.arc[in] = out;
        }
    }
    for (int i = 0; i < m; ++i) {
        const auto& e = g.edges[i];
        int a_in = 2 * e.half_a, a_out = 2 * e.half_a + 1;
        int b_in = 2 * e.half_b, b_out = 2 * e.half_b + 1;
        if (e.twisted) {
            gem.side[a_in] = b_in;
            gem.side[b_in] = a_in;
            gem.side[a_out] = b_out;
            gem.side[b_out] = a_out;
        } else {
            gem.side[a_in] = b_out;
            gem.side[b_out] = a_in;
            gem.side[a_out] = b_in;
            gem.side[b_in] = a_out;
        }
        gem.edge_of[a_in] = gem.edge_of[a_out] = i;
        gem.edge_of[b_in] = gem.edge_of[b_out] = i;
    }
    return gem;
}

/// Rebuild a rotation system from a gem.  Vertex walks fix the in/out role
/// of every corner; twist bits fall out of comparing roles across ribbon
/// sides.  Edge-list order (and labels) of `reference` is kept.
RibbonGraph decode_gem(const Gem& gem, const RibbonGraph& reference) {
    const int n_corners = gem.corners();

    // Stubs, identified by their smallest corner, become the new half-edges.
    std::vector<int> stub_id(n_corners, -1);
    int next_stub = 0;
    for (int c = 0; c < n_corners; ++c)
        if (stub_id[c] < 0) {
            stub_id[c] = stub_id[gem.stub[c]] = next_stub++;
        }

    RibbonGraph out;
    std::vector<int> role(n_corners, -1); // 0 = in, 1 = out
    std::vector<bool> visited(n_corners, false);
    for (int c0 = 0; c0 < n_corners; ++c0) {
        if (visited[c0])
            continue;
        std::vector<int> rotation;
        int cur = c0;
        do {
            int partner = gem.stub[cur];
            visited[cur] = visited[partner] = true;
            role[cur] = 0;
            role[partner] = 1;
            rotation.push_back(stub_id[cur]);
            cur = gem.arc[partner];
        } while (cur != c0);
        out.rotations.push_back(std::move(rotation));
    }
    out.rotations.insert(out.rotations.end(), gem.isolated_vertices, std::vector<int>{});

    for (int i = 0; i < reference.n_edges(); ++i) {
        // Find the four corners of this edge and its two stubs.
        int a_corner = -1, b_corner = -1;
        for (int c = 0; c < n_corners; ++c) {
            if (gem.edge_of[c] != i)
                continue;
            if (a_corner < 0)
                a_corner = c;
            else if (stub_id[c] != stub_id[a_corner] && b_corner < 0)
                b_corner = c;
        }
        assert(a_corner >= 0 && b_corner >= 0);

        int across = gem.side[a_corner];
        assert(stub_id[across] == stub_id[b_corner]);
        // in<->out across the ribbon side means untwisted.
        bool twisted = role[across] == role[a_corner];

        RibbonGraph::Edge e;
        e.label = reference.edges[i].label;
        e.half_a = stub_id[a_corner];
        e.half_b = stub_id[b_corner];
        e.twisted = twisted;
        out.edges.push_back(std::move(e));
    }
    return out.normalized();
}

} // namespace

int boundary_components(const RibbonGraph& g) {
    g.validate();
    Gem gem = build_gem(g);
    int components = gem.isolated_vertices;
    std::vector<bool> visited(gem.corners(), false);
    for (int c0 = 0; c0 < gem.corners(); ++c0) {
        if (visited[c0])
            continue;
        ++components;
        // Alternate arc and side steps around one boundary walk.
        int cur = c0;
        do {
            visited[cur] = true;
            int across = gem.arc[cur];
            visited[across] = true;
            cur = gem.side[across];
        } while (cur != c0);
    }
    return components;
}

RibbonGraph spanning_subgraph(const RibbonGraph& g, std::uint64_t edge_mask) {
    const int m = g.n_edges();
    if (m < 64 && (edge_mask >> m) != 0)
        throw InvalidArgument("edge subset out of range");

    std::vector<int> new_id(2 * m, -1);
    int next = 0;
    for (int h = 0; h < 2 * m; ++h) {
        int e = -1;
        for (int i = 0; i < m; ++i)
            if (g.edges[i].half_a == h || g.edges[i].half_b == h)
                e = i;
        if ((edge_mask >> e) & 1u)
            new_id[h] = next++;
    }

    RibbonGraph out;
    for (const auto& rot : g.rotations) {
        std::vector<int> kept;
        for (int h : rot)
            if (new_id[h] >= 0)
                kept.push_back(new_id[h]);
        out.rotations.push_back(std::move(kept));
    }
    for (int i = 0; i < m; ++i)
        if ((edge_mask >> i) & 1u) {
            RibbonGraph::Edge e = g.edges[i];
            e.half_a = new_id[e.half_a];
            e.half_b = new_id[e.half_b];
            out.edges.push_back(std::move(e));
        }
    return out;
}

DeltaMatroid rho(const RibbonGraph& g) {
    g.validate();
    if (!is_connected(g))
        throw DisconnectedGraph("quasi-tree delta-matroids need a connected graph");
    const int m = g.n_edges();
    std::vector<std::uint64_t> feasible;
    for (std::uint64_t f = 0; f < (std::uint64_t{1} << m); ++f)
        if (boundary_components(spanning_subgraph(g, f)) == 1)
            feasible.push_back(f);
    return DeltaMatroid::trusted(SetSystem(g.edge_ground(), std::move(feasible)));
}

RibbonGraph partial_dual(const RibbonGraph& g, std::uint64_t edge_mask) {
    g.validate();
    const int m = g.n_edges();
    if (m < 64 && (edge_mask >> m) != 0)
        throw InvalidArgument("edge subset out of range");

    Gem gem = build_gem(g);
    for (int c = 0; c < gem.corners(); ++c)
        if ((edge_mask >> gem.edge_of[c]) & 1u)
            std::swap(gem.side[c], gem.stub[c]);
    return decode_gem(gem, g);
}

FramedChordDiagram::FramedChordDiagram(RibbonGraph g) : graph(std::move(g)) {
    graph.validate();
    if (graph.n_vertices() != 1)
        throw MultipleVertices("framed chord diagrams have exactly one vertex");
}

FramedGraph intersection_graph(const FramedChordDiagram& d) {
    const RibbonGraph& g = d.graph;
    const int m = g.n_edges();
    std::vector<int> position(2 * m, -1);
    const auto& rot = g.rotations.front();
    for (int i = 0; i < static_cast<int>(rot.size()); ++i)
        position[rot[i]] = i;

    BitMatrix a(m, m);
    for (int i = 0; i < m; ++i) {
        a.set(i, i, g.edges[i].twisted);
        int lo = std::min(position[g.edges[i].half_a], position[g.edges[i].half_b]);
        int hi = std::max(position[g.edges[i].half_a], position[g.edges[i].half_b]);
        for (int j = i + 1; j < m; ++j) {
            int pj1 = position[g.edges[j].half_a];
            int pj2 = position[g.edges[j].half_b];
            bool in1 = lo < pj1 && pj1 < hi;
            bool in2 = lo < pj2 && pj2 < hi;
            if (in1 != in2) {
                a.set(i, j, true);
                a.set(j, i, true);
            }
        }
    }
    return FramedGraph(g.edge_ground(), a);
}

LagrangianSubspace pi(const RibbonGraph& g) {
    g.validate();
    if (!is_connected(g))
        throw DisconnectedGraph("pi needs a connected graph");
    if (g.n_vertices() == 0)
        return from_symmetric_matrix(GroundSet{}, BitMatrix{});
    if (g.n_vertices() == 1) {
        FramedChordDiagram d(g);
        return from_symmetric_matrix(g.edge_ground(), intersection_graph(d).adjacency());
    }

    const int m = g.n_edges();
    std::vector<std::uint64_t> subsets;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s)
        subsets.push_back(s);
    std::sort(subsets.begin(), subsets.end(), [](std::uint64_t a, std::uint64_t b) {
        if (std::popcount(a) != std::popcount(b))
            return std::popcount(a) < std::popcount(b);
        return a < b;
    });

    for (std::uint64_t s : subsets) {
        RibbonGraph dual = partial_dual(g, s);
        if (dual.n_vertices() == 1) {
            FramedChordDiagram d(std::move(dual));
            LagrangianSubspace one_vertex = from_symmetric_matrix(
                g.edge_ground(), intersection_graph(d).adjacency());
            return local_dual(one_vertex, s);
        }
    }
    throw Error("internal: connected ribbon graph admits no one-vertex partial dual");
}

std::string canonical_ribbon_key(const RibbonGraph& g) {
    g.validate();
    Gem gem = build_gem(g);
    const int nc = gem.corners();

    std::string best;
    bool have = false;
    std::vector<int> order(nc), rank_of(nc);
    for (int start = 0; start < std::max(nc, 1) && nc > 0; ++start) {
        // Deterministic relabel: walk corners breadth-first, neighbors in
        // stub, arc, side order.
        std::fill(rank_of.begin(), rank_of.end(), -1);
        int count = 0;
        order.clear();
        order.push_back(start);
        rank_of[start] = count++;
        for (std::size_t q = 0; q < order.size(); ++q) {
            int c = order[q];
            for (int nb : {gem.stub[c], gem.arc[c], gem.side[c]})
                if (rank_of[nb] < 0) {
                    rank_of[nb] = count++;
                    order.push_back(nb);
                }
        }
        if (count != nc)
            throw InvalidArgument("canonical key requires a connected ribbon graph");

        std::string key;
        for (int r = 0; r < nc; ++r) {
            int c = order[r];
            key.push_back(static_cast<char>(rank_of[gem.stub[c]]));
            key.push_back(static_cast<char>(rank_of[gem.arc[c]]));
            key.push_back(static_cast<char>(rank_of[gem.side[c]]));
            key += g.edges[gem.edge_of[c]].label;
            key.push_back('\0');
        }
        if (!have || key < best) {
            best = std::move(key);
            have = true;
        }
    }
    best += "#v";
    best.push_back(static_cast<char>(g.n_vertices()));
    return best;
}

bool isomorphic(const RibbonGraph& a, const RibbonGraph& b) {
    if (a.n_edges() != b.n_edges() || a.n_vertices() != b.n_vertices())
        return false;
    return canonical_ribbon_key(a) == canonical_ribbon_key(b);
}

namespace {

void extend_matchings(std::vector<int>& partner, std::vector<std::vector<int>>& out) {
    int first = -1;
    for (std::size_t i = 0; i < partner.size(); ++i)
        if (partner[i] < 0) {
            first = static_cast<int>(i);
            break;
        }
    if (first < 0) {
        out.push_back(partner);
        return;
    }
    for (std::size_t j = first + 1; j < partner.size(); ++j) {
        if (partner[j] >= 0)
            continue;
        partner[first] = static_cast<int>(j);
        partner[j] = first;
        extend_matchings(partner, out);
        partner[first] = partner[j] = -1;
    }
}

} // namespace

std::vector<RibbonGraph> all_one_vertex_diagrams(int n_edges) {
    const int m = n_edges;
    std::vector<std::vector<int>> matchings;
    std::vector<int> partner(2 * m, -1);
    extend_matchings(partner, matchings);

    std::vector<RibbonGraph> out;
    for (const auto& match : matchings) {
        for (std::uint64_t twists = 0; twists < (std::uint64_t{1} << m); ++twists) {
            RibbonGraph g;
            std::vector<int> rot(2 * m);
            std::iota(rot.begin(), rot.end(), 0);
            g.rotations.push_back(std::move(rot));
            int label = 1;
            for (int h = 0; h < 2 * m; ++h) {
                if (match[h] < h)
                    continue;
                RibbonGraph::Edge e;
                e.label = std::to_string(label);
                e.half_a = h;
                e.half_b = match[h];
                e.twisted = (twists >> (label - 1)) & 1u;
                g.edges.push_back(std::move(e));
                ++label;
            }
            g.validate();
            out.push_back(std::move(g));
        }
    }
    return out;
}

} // namespace symdelta
