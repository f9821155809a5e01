#pragma once

#include <string>
#include <vector>

namespace symdelta::verify {

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// Criterion 1: the worked two-element example, with its feasibility table,
/// inverted by nu_inverse.
SuiteResult example_two_elements();

/// Criterion 2: enumeration counts against the closed form, injectivity of
/// nu and the inverse round trip, for n <= max_n.
SuiteResult bijection(int max_n);

/// Criterion 3: 2^(n(n+1)/2) graphic subspaces for n <= max_n, and the
/// matrix round trip for n <= matrix_n.
SuiteResult graphic_correspondence(int max_n, int matrix_n);

/// Criterion 4: nu(L*e) == nu(L)*e for all subspaces and elements, n <= max_n.
SuiteResult twist_equivariance(int max_n);

/// Criterion 5: local_dual(L, graphify(L)) is graphic for all L, n <= max_n.
SuiteResult graphification(int max_n);

/// Criterion 6: SEA for non-degeneracy delta-matroids of all framed graphs
/// with <= max_vertices vertices, and all their twists, plus binary
/// recognition.
SuiteResult sea_under_twists(int max_vertices);

/// Criterion 7: nu(pi(g)) == rho(g) over all one-vertex diagrams with
/// <= max_edges edges and all their partial duals.
SuiteResult ribbon_compatibility(int max_edges);

/// Criterion 8: nu is a bialgebra morphism and both sides satisfy the Hopf
/// axioms on classes of degree <= max_degree.
SuiteResult hopf_morphism(int max_degree);

/// Just the two commuting squares of nu (multiplicativity and
/// comultiplicativity), degree-budgeted as above.
SuiteResult nu_morphism(int max_degree);

/// Criterion 9: four-term quotient dimensions agree across the sides for
/// n <= max_degree under both sign conventions, and nu maps the relation
/// span generator-by-generator.  When golden_table is nonempty the computed
/// table must reproduce it byte for byte.
SuiteResult four_term(int max_degree, const std::string& golden_table = "");

/// The table criterion 9 freezes: one line per (degree, sign, side).
std::string four_term_table(int max_degree);

/// Criterion 10: involutions, move commutation, empty-set/graphic
/// equivalence and Euler consistency; exhaustive to max_n and randomized at
/// max_n + 1.
SuiteResult property_suites(int max_n);

/// Every suite at sizes scaled from max_n (the acceptance sizes at
/// max_n = 3).
std::vector<SuiteResult> run_all(int max_n, const std::string& golden_table = "");

} // namespace symdelta::verify
