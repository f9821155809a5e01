// Acceptance suite: one criterion per line, with the runtime budget enforced.
// Usage: acceptance [golden-four-term-table] [--write-golden]

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "symdelta/correspondence.hpp"
#include "symdelta/verify.hpp"

using namespace symdelta;

namespace {

struct Criterion {
    std::string id;
    verify::SuiteResult result;
    double budget_seconds = 0.0;
};

bool report(const Criterion& c) {
    bool pass = c.result.pass && c.result.seconds < c.budget_seconds;
    std::printf("[%s] %s %s (%.3f s < %.3g s) %s\n", pass ? "PASS" : "FAIL",
                c.id.c_str(), c.result.name.c_str(), c.result.seconds,
                c.budget_seconds, c.result.detail.c_str());
    return pass;
}

/// Criterion 2 owns an independent cardinality oracle: every Lagrangian
/// subspace found by scanning all n-sets of nonzero vectors, cross-checked
/// against the enumerator and the closed form.
verify::SuiteResult bijection_with_oracle() {
    auto start = std::chrono::steady_clock::now();
    verify::SuiteResult inner = verify::bijection(3);
    if (!inner.pass)
        return inner;
    for (int n = 0; n <= 3; ++n) {
        auto brute = oracle::lagrangian_keys_brute(n);
        auto list = enumerate_lagrangians(GroundSet::range(n));
        if (brute.size() != list.size() || brute.size() != lagrangian_count(n)) {
            inner.pass = false;
            inner.detail = "oracle count mismatch at n=" + std::to_string(n);
            break;
        }
        std::set<std::vector<std::uint64_t>> got;
        for (const auto& l : list)
            got.insert(oracle::subspace_key(l));
        if (got != brute) {
            inner.pass = false;
            inner.detail = "oracle subspace sets differ at n=" + std::to_string(n);
            break;
        }
    }
    inner.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (inner.pass)
        inner.detail += "; brute-force oracle agrees for n<=3";
    return inner;
}

} // namespace

int main(int argc, char** argv) {
    std::string golden_path;
    bool write_golden = false;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--write-golden")
            write_golden = true;
        else
            golden_path = arg;
    }

    std::string golden_table;
    if (!golden_path.empty() && !write_golden) {
        std::ifstream in(golden_path);
        if (!in) {
            std::fprintf(stderr, "cannot read golden table %s\n", golden_path.c_str());
            return 2;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        golden_table = buf.str();
    }

    if (write_golden) {
        std::ofstream out(golden_path);
        out << verify::four_term_table(3);
        std::printf("golden table written to %s\n", golden_path.c_str());
        return 0;
    }

    std::vector<Criterion> criteria;
    criteria.push_back({"01", verify::example_two_elements(), 0.001});
    criteria.push_back({"02", bijection_with_oracle(), 10.0});
    criteria.push_back({"03", verify::graphic_correspondence(3, 4), 5.0});
    criteria.push_back({"04", verify::twist_equivariance(3), 5.0});
    criteria.push_back({"05", verify::graphification(3), 5.0});
    criteria.push_back({"06", verify::sea_under_twists(4), 30.0});
    criteria.push_back({"07", verify::ribbon_compatibility(3), 60.0});
    criteria.push_back({"08", verify::hopf_morphism(3), 120.0});
    criteria.push_back({"09", verify::four_term(3, golden_table), 120.0});
    criteria.push_back({"10", verify::property_suites(3), 60.0});

    bool all = true;
    for (const auto& c : criteria)
        all = report(c) && all;
    std::printf("%s\n", all ? "ACCEPTANCE: all criteria passed"
                            : "ACCEPTANCE: some criteria FAILED");
    return all ? 0 : 1;
}
