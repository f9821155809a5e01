#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "symdelta/set_system.hpp"

using namespace symdelta;

namespace {

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

int upper_bits(int n) { return n * (n + 1) / 2; }

} // namespace

TEST_CASE("sym_diff") {
    CHECK(sym_diff(0b011, 0b110) == 0b101);
    CHECK(sym_diff(0b1011, 0b1011) == 0);
    CHECK(sym_diff(0b101, 0) == 0b101);
}

TEST_CASE("set system normalization") {
    SetSystem s(GroundSet::range(2), {0b10, 0b01, 0b10});
    CHECK(s.feasible() == std::vector<std::uint64_t>{0b01, 0b10});
    CHECK(s.proper());
    CHECK_FALSE(sys(2, {}).proper());
    CHECK_THROWS_AS(sys(1, {0b10}), InvalidArgument);
}

TEST_CASE("check_sea: pinned examples") {
    CHECK(check_sea(sys(2, {0b01, 0b10, 0b11})).holds);
    // From the empty set, exchanging e with the other element reaches {1,2}.
    CHECK(check_sea(sys(2, {0b00, 0b11})).holds);

    SeaCheck bad = check_sea(sys(3, {0b000, 0b111}));
    CHECK_FALSE(bad.holds);
    CHECK(bad.phi1 == 0b000);
    CHECK(bad.phi2 == 0b111);
    CHECK(bad.element == 0);

    CHECK_THROWS_AS(check_sea(sys(2, {})), ImproperSystem);
}

TEST_CASE("twist") {
    SetSystem s = sys(2, {0b00, 0b01});
    CHECK(twist(s, 0) == s);
    CHECK(twist(sys(2, {0b00}), 0b11) == sys(2, {0b11}));
    CHECK_THROWS_AS(twist(sys(1, {0b1}), 0b10), InvalidArgument);

    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        int n = static_cast<int>(rng() % 5);
        std::vector<std::uint64_t> fam;
        for (int i = 0; i < 4; ++i)
            fam.push_back(rng() & ((std::uint64_t{1} << n) - 1));
        SetSystem t(GroundSet::range(n), fam);
        std::uint64_t sub = rng() & ((std::uint64_t{1} << n) - 1);
        CHECK(twist(twist(t, sub), sub) == t);
        CHECK(twist(t, sub).feasible().size() == t.feasible().size());
    }
}

TEST_CASE("nondegeneracy_dm: pinned examples") {
    // Lone vertex, framing 0: only the empty set is non-degenerate.
    FramedGraph v0(GroundSet::range(1), BitMatrix(1, 1));
    CHECK(nondegeneracy_dm(v0).system() == sys(1, {0b0}));

    BitMatrix one(1, 1);
    one.set(0, 0, true);
    FramedGraph v1(GroundSet::range(1), one);
    CHECK(nondegeneracy_dm(v1).system() == sys(1, {0b0, 0b1}));

    BitMatrix edge(2, 2);
    edge.set(0, 1, true);
    edge.set(1, 0, true);
    FramedGraph e01(GroundSet::range(2), edge);
    CHECK(nondegeneracy_dm(e01).system() == sys(2, {0b00, 0b11}));
}

TEST_CASE("framed graphs reject non-symmetric matrices") {
    BitMatrix a(2, 2);
    a.set(0, 1, true);
    CHECK_THROWS_AS(FramedGraph(GroundSet::range(2), a), NotSymmetric);
}

TEST_CASE("non-degeneracy delta-matroids satisfy SEA, with all twists (n <= 3)") {
    for (int n = 0; n <= 3; ++n) {
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << upper_bits(n)); ++code) {
            FramedGraph g(GroundSet::range(n), symmetric_matrix(n, code));
            DeltaMatroid dm = nondegeneracy_dm(g);
            CHECK(check_sea(dm.system()).holds);
            for (std::uint64_t tw = 0; tw < (std::uint64_t{1} << n); ++tw) {
                SetSystem twisted = twist(dm.system(), tw);
                CHECK(check_sea(twisted).holds);
                BinaryWitness w = is_binary(twisted);
                CHECK(w.binary);
                // The witness really reassembles the input.
                CHECK(twist(nondegeneracy_dm(*w.graph).system(), w.twist_set) == twisted);
            }
        }
    }
}

TEST_CASE("is_binary: pinned examples") {
    CHECK(is_binary(sys(2, {0b01, 0b10, 0b11})).binary);
    CHECK_FALSE(is_binary(sys(3, {0b000, 0b111})).binary);
    CHECK_THROWS_AS(is_binary(sys(2, {})), ImproperSystem);

    // Reconstruction is sound: a graphic system rebuilds its own matrix.
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << upper_bits(3)); ++code) {
        BitMatrix a = symmetric_matrix(3, code);
        FramedGraph g(GroundSet::range(3), a);
        BinaryWitness w = is_binary(nondegeneracy_dm(g).system());
        REQUIRE(w.binary);
        CHECK(w.twist_set == 0);
        CHECK(w.graph->adjacency() == a);
    }
}

TEST_CASE("restrict_to") {
    SetSystem s = sys(2, {0b11});
    CHECK(restrict_to(s, 0b11, RestrictMode::naive) == s);
    CHECK(restrict_to(s, 0b11, RestrictMode::minimal_excess) == s);

    SetSystem naive = restrict_to(s, 0b01, RestrictMode::naive);
    CHECK_FALSE(naive.proper());
    CHECK(naive.ground().labels() == std::vector<std::string>{"1"});

    SetSystem me = restrict_to(s, 0b01, RestrictMode::minimal_excess);
    CHECK(me == sys(1, {0b1}));

    // Modes agree whenever the naive family is nonempty.
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4);
        std::vector<std::uint64_t> fam;
        for (int i = 0; i < 3; ++i)
            fam.push_back(rng() & ((std::uint64_t{1} << n) - 1));
        SetSystem t(GroundSet::range(n), fam);
        std::uint64_t sub = rng() & ((std::uint64_t{1} << n) - 1);
        SetSystem nv = restrict_to(t, sub, RestrictMode::naive);
        if (nv.proper())
            CHECK(nv == restrict_to(t, sub, RestrictMode::minimal_excess));
    }
}

TEST_CASE("direct_sum") {
    SetSystem unit(GroundSet{}, {0});
    SetSystem a = sys(1, {0b0, 0b1});
    CHECK(direct_sum(a, unit) == a);

    SetSystem b(GroundSet({"x"}), {0b0});
    SetSystem ab = direct_sum(a, b);
    CHECK(ab.ground().labels() == std::vector<std::string>{"1", "x"});
    CHECK(ab.feasible() == std::vector<std::uint64_t>{0b00, 0b01});

    CHECK(direct_sum(a, a, /*relabel=*/true) ==
          SetSystem(GroundSet::range(2), {0b00, 0b01, 0b10, 0b11}));
    CHECK_THROWS_AS(direct_sum(a, a), InvalidArgument);

    CHECK(direct_sum(sys(2, {0b00, 0b11}), sys(1, {0b0, 0b1}), true).feasible().size() ==
          4);
}

TEST_CASE("canonical_form") {
    SetSystem left = sys(2, {0b01});
    SetSystem right = sys(2, {0b10});
    CHECK(canonical_form(left).key == canonical_form(right).key);
    CHECK(canonical_form(left).key != canonical_form(sys(2, {0b11})).key);

    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4);
        std::vector<std::uint64_t> fam;
        for (int i = 0; i < 4; ++i)
            fam.push_back(rng() & ((std::uint64_t{1} << n) - 1));
        SetSystem t(GroundSet::range(n), fam);

        // Random relabeling leaves the key fixed.
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i)
            perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::uint64_t> relabeled;
        for (std::uint64_t f : fam) {
            std::uint64_t out = 0;
            for (int i = 0; i < n; ++i)
                if ((f >> i) & 1u)
                    out |= std::uint64_t{1} << perm[i];
            relabeled.push_back(out);
        }
        SetSystem t2(GroundSet::range(n), relabeled);
        CHECK(canonical_form(t).key == canonical_form(t2).key);

        // The key decodes to a system with the same key, and the returned
        // permutation realizes it: relabeling t by it gives the
        // representative's family.
        CanonicalForm cf = canonical_form(t);
        SetSystem rep = set_system_from_key(cf.key);
        CHECK(canonical_form(rep).key == cf.key);
        std::vector<std::uint64_t> applied;
        for (std::uint64_t f : t.feasible()) {
            std::uint64_t out = 0;
            for (int i = 0; i < n; ++i)
                if ((f >> i) & 1u)
                    out |= std::uint64_t{1} << cf.permutation[i];
            applied.push_back(out);
        }
        std::sort(applied.begin(), applied.end());
        CHECK(applied == rep.feasible());
    }

    CHECK_THROWS_AS(canonical_form(SetSystem(GroundSet::range(9), {})),
                    GroundSetTooLarge);
}

TEST_CASE("delta-matroid constructor validates") {
    CHECK_THROWS_AS(DeltaMatroid(sys(2, {})), ImproperSystem);
    CHECK_THROWS_AS(DeltaMatroid(sys(3, {0b000, 0b111})), InvalidArgument);
    CHECK(DeltaMatroid(sys(2, {0b01, 0b10, 0b11})).system() ==
          sys(2, {0b01, 0b10, 0b11}));
}
