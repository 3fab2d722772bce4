#pragma once

#include <string>
#include <vector>

#include "turan/hypergraph.hpp"

namespace turan {

struct SearchBudget {
    long long max_nodes = -1;   // -1: unlimited
    double max_seconds = -1.0;  // -1: unlimited
};

struct SearchOptions {
    long long ceiling = 100;    // largest admissible C(n, k)
    bool symmetry = true;       // anchor the first included edge at the lex-least k-set
    bool clique_fastpath = true;
    int threads = 1;
    int split_depth = 10;       // work-split depth when threads > 1
    SearchBudget budget;
};

struct SearchStats {
    long long nodes = 0;
    long long bound_prunes = 0;
    long long symmetry_prunes = 0;
    double seconds = 0.0;
};

struct SearchCertificate {
    int n = 0;
    int k = 0;
    std::vector<std::string> pattern_names;
    int size = 0;
    Hypergraph witness{1, 0};
    bool exhaustive = false;
    bool clique_fastpath = false;
    SearchStats stats;
};

/// Exact Turan number by branch and bound over the lexicographic list of
/// candidate k-sets. The witness family is re-verified pattern-free through
/// the generic containment search, a code path independent of the
/// incremental checker used while branching. Patterns must all be k-uniform
/// with at least one edge; C(n, k) must stay within options.ceiling.
SearchCertificate turan_exact(int n, int k, const std::vector<Hypergraph>& patterns,
                              const SearchOptions& options = {});

enum class FormulaId {
    matching_upper,   // C(n,k) - C(n-nu,k) vs forbidding a (nu+1)-matching
    path2_value,      // C(n-2, k-2) vs forbidding the 2-edge linear path
    odd_path_value,   // sum of C(n-i, k-1) vs odd linear paths
    even_path_value,  // odd value + C(n-t-2, k-2) vs even linear paths
    forest_upper,     // search <= (v-k) C(n, k-1) against a tight path
    expansion_lower,  // search >= (sigma-1) C(n-sigma+1, k-1) for path expansions
    graph_path_upper, // 2 * search <= (ell-1) n for graph paths
};

struct FormulaPoint {
    int n = 0;
    int k = 0;
    int aux = 0;  // nu, ell or v depending on the formula
};

struct VerifyRow {
    std::string formula;
    std::vector<std::pair<std::string, long long>> params;
    long long search_value = 0;
    long long reference_value = 0;
    std::string relation;  // "==", "<=", ">="
    bool ok = false;
    bool exhaustive = false;
};

/// Runs the exact search across a parameter grid and compares against the
/// closed-form side of the chosen formula. Rows report, they do not throw:
/// asymptotic formulas may genuinely disagree with exact values at small n.
std::vector<VerifyRow> verify_formula(FormulaId id, const std::vector<FormulaPoint>& grid,
                                      const SearchOptions& options = {});

const char* formula_name(FormulaId id);

}  // namespace turan
