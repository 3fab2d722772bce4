#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "turan/graph.hpp"
#include "turan/hypergraph.hpp"
#include "turan/search.hpp"

namespace turan {

/// All trees on exactly v vertices, one representative per isomorphism
/// class, vertices labeled 0..v-1.
std::vector<Graph> nonisomorphic_trees(int v);

/// All forests on at most max_vertices vertices (isolated vertices allowed)
/// with at least min_edges edges, one representative per isomorphism class.
std::vector<Graph> nonisomorphic_forests(int max_vertices, int min_edges = 1);

/// Isomorphism-invariant code of a forest: canonical rooted codes of the
/// components, sorted. Two forests get the same code exactly when they are
/// isomorphic.
std::string forest_canonical_code(const Graph& g);

/// Containment oracle that tries every injective vertex map. Exponential and
/// deliberately independent of the backtracking search.
bool naive_contains(const Hypergraph& host, const Hypergraph& pattern);

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::string detail;
};

/// The acceptance battery: eleven self-contained checks pinning search
/// values, closed-form counts, embedding guarantees and oracle agreement,
/// each with its own wall-clock allowance. Randomized checks run on fixed
/// seeds.
std::vector<CriterionResult> run_verification_suite(int threads = 1);
CriterionResult run_criterion(int id, int threads = 1);
constexpr int criterion_count = 11;

void print_criterion(std::ostream& os, const CriterionResult& r);

/// Named formula suites for the command line, each with a built-in small
/// grid: "matching-upper", "path2-value", "odd-path-value",
/// "even-path-value", "forest-upper", "expansion-lower", "graph-path-upper".
std::vector<VerifyRow> run_formula_suite(const std::string& name, const SearchOptions& options = {});

}  // namespace turan
