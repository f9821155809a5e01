#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "symdelta/correspondence.hpp"

using namespace symdelta;

namespace {

SymplecticVector sv(int n, std::initializer_list<int> plain,
                    std::initializer_list<int> dual) {
    BitVec v(2 * n);
    for (int e : plain)
        v.set(e, true);
    for (int e : dual)
        v.set(n + e, true);
    return v;
}

LagrangianSubspace example22() {
    return LagrangianSubspace::span(GroundSet::range(2),
                                    {sv(2, {1}, {0, 1}), sv(2, {0, 1}, {})});
}

SetSystem sys(int n, std::initializer_list<std::uint64_t> feasible) {
    return SetSystem(GroundSet::range(n), feasible);
}

BitMatrix symmetric_matrix(int n, std::uint64_t code) {
    BitMatrix a(n, n);
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            bool v = (code >> bit++) & 1u;
            a.set(i, j, v);
            a.set(j, i, v);
        }
    return a;
}

} // namespace

TEST_CASE("nu on the running example, including the full feasibility table") {
    LagrangianSubspace l = example22();
    SetSystem s = nu(l);
    CHECK(s == sys(2, {0b01, 0b10, 0b11}));
    // Row by row: the empty set is the only infeasible subset.
    CHECK_FALSE(s.is_feasible(0b00));
    CHECK(s.is_feasible(0b01));
    CHECK(s.is_feasible(0b10));
    CHECK(s.is_feasible(0b11));
}

TEST_CASE("nu on graphic corners") {
    // All-duals subspace: only the empty set is feasible.
    LagrangianSubspace duals = LagrangianSubspace::span(
        GroundSet::range(2), {sv(2, {}, {0}), sv(2, {}, {1})});
    CHECK(nu(duals) == sys(2, {0b00}));

    // Identity matrix: every subset is feasible.
    LagrangianSubspace loops = LagrangianSubspace::span(
        GroundSet::range(2), {sv(2, {0}, {0}), sv(2, {1}, {1})});
    CHECK(nu(loops) == sys(2, {0b00, 0b01, 0b10, 0b11}));
}

TEST_CASE("nu_inverse reproduces the running example") {
    CHECK(nu_inverse(sys(2, {0b01, 0b10, 0b11})) == example22());
    CHECK_THROWS_AS(nu_inverse(sys(3, {0b000, 0b111})), NotBinary);
    CHECK_THROWS_AS(nu_inverse(sys(2, {})), NotBinary);
}

TEST_CASE("nu is a bijection onto binary delta-matroids, n <= 3") {
    for (int n = 0; n <= 3; ++n) {
        std::set<std::vector<std::uint64_t>> images;
        std::uint64_t count = 0;
        for (const auto& l : enumerate_lagrangians(GroundSet::range(n))) {
            SetSystem s = nu(l);
            CHECK(s.proper());
            CHECK(is_binary(s).binary);
            CHECK(check_sea(s).holds);
            // Round trip both ways.
            CHECK(nu_inverse(s) == l);
            CHECK(images.insert(s.feasible()).second); // injectivity
            ++count;
        }
        CHECK(count == lagrangian_count(n));
    }
}

TEST_CASE("every binary delta-matroid is hit: nu(nu_inverse(s)) == s, n <= 2") {
    // Binary systems enumerated independently as all twists of all
    // non-degeneracy delta-matroids.
    for (int n = 0; n <= 2; ++n) {
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * (n + 1) / 2));
             ++code) {
            FramedGraph g(GroundSet::range(n), symmetric_matrix(n, code));
            SetSystem base = nondegeneracy_dm(g).system();
            for (std::uint64_t tw = 0; tw < (std::uint64_t{1} << n); ++tw) {
                SetSystem s = twist(base, tw);
                CHECK(nu(nu_inverse(s)) == s);
            }
        }
    }
}

TEST_CASE("twist equivariance") {
    LagrangianSubspace l = example22();
    CHECK(check_twist_equivariance(l, 0));
    CHECK_THROWS_AS(check_twist_equivariance(l, 2), InvalidArgument);

    for (int n = 1; n <= 2; ++n)
        for (const auto& lag : enumerate_lagrangians(GroundSet::range(n))) {
            for (int e = 0; e < n; ++e)
                CHECK(check_twist_equivariance(lag, e));
            // Subset version, via commuting single swaps.
            for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
                CHECK(nu(local_dual(lag, s)) == twist(nu(lag), s));
        }
}

TEST_CASE("empty set feasible iff graphic, n <= 3") {
    for (int n = 0; n <= 3; ++n)
        for (const auto& l : enumerate_lagrangians(GroundSet::range(n)))
            CHECK(nu(l).is_feasible(0) == is_graphic(l).graphic);
}

TEST_CASE("graphic subspaces land exactly on non-degeneracy delta-matroids, n <= 2") {
    for (int n = 0; n <= 2; ++n) {
        std::set<std::vector<std::uint64_t>> ndm_families;
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * (n + 1) / 2));
             ++code) {
            FramedGraph g(GroundSet::range(n), symmetric_matrix(n, code));
            ndm_families.insert(nondegeneracy_dm(g).system().feasible());
        }
        std::set<std::vector<std::uint64_t>> graphic_images;
        for (const auto& l : enumerate_lagrangians(GroundSet::range(n)))
            if (is_graphic(l).graphic)
                graphic_images.insert(nu(l).feasible());
        CHECK(graphic_images == ndm_families);
    }
}

TEST_CASE("graphic_bridge: pinned examples") {
    // Zero matrix.
    FramedGraph g0(GroundSet::range(2), BitMatrix(2, 2));
    auto [l0, d0] = graphic_bridge(g0);
    CHECK(l0 == LagrangianSubspace::span(GroundSet::range(2),
                                         {sv(2, {}, {0}), sv(2, {}, {1})}));
    CHECK(d0.system() == sys(2, {0b00}));
    CHECK(nu(l0) == d0.system());

    // Identity matrix: all subsets feasible.
    FramedGraph g1(GroundSet::range(2), BitMatrix::identity(2));
    auto [l1, d1] = graphic_bridge(g1);
    CHECK(d1.system() == sys(2, {0b00, 0b01, 0b10, 0b11}));
    CHECK(nu(l1) == d1.system());

    // Single edge, framings zero.
    BitMatrix edge(2, 2);
    edge.set(0, 1, true);
    edge.set(1, 0, true);
    auto [l2, d2] = graphic_bridge(FramedGraph(GroundSet::range(2), edge));
    CHECK(l2 == LagrangianSubspace::span(GroundSet::range(2),
                                         {sv(2, {1}, {0}), sv(2, {0}, {1})}));
    CHECK(d2.system() == sys(2, {0b00, 0b11}));
    CHECK(nu(l2) == d2.system());
}

TEST_CASE("feasibility of the reduction is the subspace containment test, n <= 3") {
    // Y inside I is feasible for nu(reduce(L, I)) iff every vector of L
    // supported on <Y-dual ∪ (E\Y)> is supported on E\I.
    for (int n = 1; n <= 3; ++n)
        for (const auto& l : enumerate_lagrangians(GroundSet::range(n))) {
            auto elements = l.elements();
            const std::uint64_t full = l.ground().full_mask();
            for (std::uint64_t i = 0; i <= full; ++i) {
                SetSystem reduced = nu(reduce(l, i));
                for (std::uint64_t y = i;; y = (y - 1) & i) {
                    std::uint64_t allowed = (y << n) | (full & ~y);
                    std::uint64_t small = full & ~i; // E \ I, coordinates
                    bool contained = true;
                    for (const auto& v : elements) {
                        std::uint64_t bits = v.bits();
                        if ((bits & ~allowed) == 0 && (bits & ~small) != 0)
                            contained = false;
                    }
                    std::uint64_t y_in_i = compress(BitVec(n, y), i).bits();
                    CHECK(reduced.is_feasible(y_in_i) == contained);
                    if (y == 0)
                        break;
                }
            }
        }
}

TEST_CASE("nu_inverse is insensitive to the feasible-set choice") {
    // Reconstruct through every feasible base point by twisting first:
    // nu_inverse(twist(s, phi)) dualized back must give the same subspace.
    LagrangianSubspace l = example22();
    SetSystem s = nu(l);
    for (std::uint64_t phi : s.feasible()) {
        LagrangianSubspace via = local_dual(nu_inverse(twist(s, phi)), phi);
        CHECK(via == l);
    }
}
