#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "symdelta/text_io.hpp"

using namespace symdelta;

namespace {

template <typename T, typename Parse>
T reparse(const std::string& text, Parse parse) {
    std::istringstream in(text);
    return parse(in);
}

} // namespace

TEST_CASE("lagrangian format: the worked example file") {
    std::istringstream in("1^+2+2^\n1+2\n");
    LagrangianSubspace l = parse_lagrangian(in);
    CHECK(l.ground() == GroundSet::range(2));
    CHECK(l.n() == 2);

    BitVec v(4);
    v.set(2, true); // 1^
    v.set(1, true); // 2
    v.set(3, true); // 2^
    CHECK(l.contains(v));

    // parse(print(x)) == x on canonical values.
    CHECK(reparse<LagrangianSubspace>(print_lagrangian(l), parse_lagrangian) == l);
}

TEST_CASE("lagrangian format round-trips every subspace, n <= 3") {
    for (int n = 0; n <= 3; ++n)
        for (const auto& l : enumerate_lagrangians(GroundSet::range(n)))
            CHECK(reparse<LagrangianSubspace>(print_lagrangian(l), parse_lagrangian) ==
                  l);
}

TEST_CASE("lagrangian format errors") {
    std::istringstream dup("1+1\n");
    CHECK_THROWS_AS(parse_lagrangian(dup), ParseError);
    std::istringstream not_lagr("1\n1^\n");
    CHECK_THROWS_AS(parse_lagrangian(not_lagr), NotIsotropic);
}

TEST_CASE("delta-matroid format") {
    std::istringstream in("1 2\n-\n1,2\n");
    SetSystem s = parse_set_system(in);
    CHECK(s.ground() == GroundSet::range(2));
    CHECK(s.feasible() == std::vector<std::uint64_t>{0b00, 0b11});
    CHECK(reparse<SetSystem>(print_set_system(s), parse_set_system) == s);

    std::istringstream improper("1 2\n");
    CHECK_FALSE(parse_set_system(improper).proper());

    std::istringstream bad("1 2\n3\n");
    CHECK_THROWS_AS(parse_set_system(bad), ParseError);

    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 100; ++trial) {
        int n = static_cast<int>(rng() % 5);
        std::vector<std::uint64_t> fam;
        for (int i = 0; i < 4; ++i)
            fam.push_back(rng() & ((std::uint64_t{1} << n) - 1));
        SetSystem t(GroundSet::range(n), fam);
        CHECK(reparse<SetSystem>(print_set_system(t), parse_set_system) == t);
    }
}

TEST_CASE("ribbon format") {
    std::string text = "1 2\n0 2 1 3\n1 0 1 0\n2 2 3 1\n";
    std::istringstream in(text);
    RibbonGraph g = parse_ribbon(in);
    CHECK(g.n_vertices() == 1);
    CHECK(g.n_edges() == 2);
    CHECK(g.edges[1].twisted);
    CHECK(print_ribbon(g) == text);

    // Trailing blank line of an isolated vertex survives the round trip.
    std::istringstream iso("2 1\n0 1\n\ne 0 1 0\n");
    RibbonGraph g2 = parse_ribbon(iso);
    CHECK(g2.n_vertices() == 2);
    CHECK(g2.rotations[1].empty());
    CHECK(reparse<RibbonGraph>(print_ribbon(g2), parse_ribbon) == g2);

    std::istringstream bad("1 1\n0 1\ne 0 0 0\n");
    CHECK_THROWS_AS(parse_ribbon(bad), ParseError);
}

TEST_CASE("matrix format errors") {
    std::istringstream short_row("2 2\n10\n1\n");
    CHECK_THROWS_AS(parse_matrix(short_row), ParseError);
    std::istringstream bad_char("1 2\n1x\n");
    CHECK_THROWS_AS(parse_matrix(bad_char), ParseError);
    std::istringstream empty("");
    CHECK_THROWS_AS(parse_matrix(empty), ParseError);
}

TEST_CASE("subset parsing and family formatting") {
    GroundSet g({"1", "2", "3"});
    CHECK(parse_subset(g, "1,3") == 0b101);
    CHECK(parse_subset(g, "") == 0);
    CHECK(parse_subset(g, "-") == 0);
    CHECK_THROWS_AS(parse_subset(g, "4"), InvalidArgument);

    SetSystem s(g, {0b000, 0b011, 0b101});
    CHECK(format_family(s) == "{} {1,2} {1,3}");
    CHECK(format_subset(g, 0b110) == "{2,3}");
}
