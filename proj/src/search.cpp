#include "turan/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "turan/constructions.hpp"
#include "turan/core.hpp"
#include "turan/embed.hpp"
#include "turan/growth.hpp"

namespace turan {

namespace {

using Clock = std::chrono::steady_clock;

// Mutable state shared between workers. The best size is the only value the
// subtrees exchange; everything else is bookkeeping.
struct Shared {
    std::atomic<int> best{0};
    std::atomic<long long> nodes{0};
    std::atomic<long long> bound_prunes{0};
    std::atomic<long long> symmetry_prunes{0};
    std::atomic<bool> stop{false};
    std::mutex best_mu;
    std::vector<VertexSet> best_family;

    long long max_nodes = -1;
    bool has_deadline = false;
    Clock::time_point deadline;

    // Returns false once the budget is gone; the flag is sticky so all
    // workers wind down.
    bool tick() {
        const long long node = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (max_nodes >= 0 && node > max_nodes) stop.store(true, std::memory_order_relaxed);
        if (has_deadline && (node & 1023) == 0 && Clock::now() > deadline)
            stop.store(true, std::memory_order_relaxed);
        return !stop.load(std::memory_order_relaxed);
    }

    void record(const std::vector<VertexSet>& family) {
        const int sz = static_cast<int>(family.size());
        if (sz <= best.load(std::memory_order_relaxed)) return;
        std::lock_guard<std::mutex> lock(best_mu);
        if (sz > best.load(std::memory_order_relaxed)) {
            best_family = family;
            best.store(sz, std::memory_order_relaxed);
        }
    }
};

struct SearchContext {
    const std::vector<VertexSet>& cands;
    const std::vector<Hypergraph>& patterns;
    int n;
    const SearchOptions& opt;
    Shared& sh;
};

// Appends e when the grown family stays pattern-free; containment checks are
// restricted to embeddings through the new edge, which is the only way a
// pattern can newly appear.
bool admit(SearchContext& c, std::vector<VertexSet>& chosen, VertexSet e) {
    chosen.push_back(e);
    const int forced = static_cast<int>(chosen.size()) - 1;
    for (const Hypergraph& p : c.patterns) {
        if (contains_using_edge(chosen, c.n, p, forced)) {
            chosen.pop_back();
            return false;
        }
    }
    return true;
}

void dfs(SearchContext& c, std::vector<VertexSet>& chosen, int idx) {
    if (!c.sh.tick()) return;
    const int m = static_cast<int>(c.cands.size());
    if (idx == m) return;
    if (static_cast<int>(chosen.size()) + (m - idx) <= c.sh.best.load(std::memory_order_relaxed)) {
        c.sh.bound_prunes.fetch_add(1, std::memory_order_relaxed);
        return;
    }
    if (admit(c, chosen, c.cands[static_cast<std::size_t>(idx)])) {
        c.sh.record(chosen);
        dfs(c, chosen, idx + 1);
        chosen.pop_back();
    }
    if (idx == 0 && c.opt.symmetry) {
        // Relabeling moves any nonempty family onto one whose least edge is
        // the lex-least k-set, so the exclude branch at the root only
        // repeats sizes seen in the include branch.
        c.sh.symmetry_prunes.fetch_add(1, std::memory_order_relaxed);
        return;
    }
    dfs(c, chosen, idx + 1);
}

struct Task {
    std::vector<VertexSet> prefix;
    int idx;
};

// Walks the top of the include/exclude tree; subtrees `depth` levels down
// become tasks for the worker pool.
void gen_tasks(SearchContext& c, std::vector<VertexSet>& chosen, int idx, int depth,
               std::vector<Task>& out) {
    if (!c.sh.tick()) return;
    const int m = static_cast<int>(c.cands.size());
    if (idx == m) return;
    if (static_cast<int>(chosen.size()) + (m - idx) <= c.sh.best.load(std::memory_order_relaxed)) {
        c.sh.bound_prunes.fetch_add(1, std::memory_order_relaxed);
        return;
    }
    if (depth == 0) {
        out.push_back(Task{chosen, idx});
        return;
    }
    if (admit(c, chosen, c.cands[static_cast<std::size_t>(idx)])) {
        c.sh.record(chosen);
        gen_tasks(c, chosen, idx + 1, depth - 1, out);
        chosen.pop_back();
    }
    if (idx == 0 && c.opt.symmetry) {
        c.sh.symmetry_prunes.fetch_add(1, std::memory_order_relaxed);
        return;
    }
    gen_tasks(c, chosen, idx + 1, depth - 1, out);
}

// Deterministic witness reconstruction: the first family of the target size
// in canonical include-first order, independent of how many threads raced
// during the size phase. Never budget-limited; the target is known feasible.
bool hunt(SearchContext& c, std::vector<VertexSet>& chosen, int idx, int target,
          std::vector<VertexSet>& out) {
    if (static_cast<int>(chosen.size()) == target) {
        out = chosen;
        return true;
    }
    const int m = static_cast<int>(c.cands.size());
    if (idx == m) return false;
    if (static_cast<int>(chosen.size()) + (m - idx) < target) return false;
    if (admit(c, chosen, c.cands[static_cast<std::size_t>(idx)])) {
        if (hunt(c, chosen, idx + 1, target, out)) return true;
        chosen.pop_back();
    }
    if (idx == 0 && c.opt.symmetry) return false;
    return hunt(c, chosen, idx + 1, target, out);
}

// ---- clique fast path ------------------------------------------------------
//
// When every pattern has exactly two edges, a family is pattern-free exactly
// when no pair of its edges meets in a forbidden number of vertices, and the
// extremal family is a maximum clique of the compatibility graph.

class MaxClique {
public:
    explicit MaxClique(int nv)
        : nv_(nv), words_(static_cast<std::size_t>((nv + 63) / 64)),
          rows_(static_cast<std::size_t>(nv) * words_, 0) {}

    void add_edge(int u, int v) {
        rows_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] |=
            std::uint64_t{1} << (v % 64);
        rows_[static_cast<std::size_t>(v) * words_ + static_cast<std::size_t>(u) / 64] |=
            std::uint64_t{1} << (u % 64);
    }

    bool adjacent(int u, int v) const {
        return (rows_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] >>
                (v % 64)) & 1u;
    }

    void run(Shared& sh) {
        std::vector<int> p(static_cast<std::size_t>(nv_));
        for (int i = 0; i < nv_; ++i) p[static_cast<std::size_t>(i)] = i;
        std::vector<int> r;
        expand(r, p, sh);
    }

    const std::vector<int>& best() const { return best_; }

private:
    // Greedy coloring bound, highest color branched first.
    void expand(std::vector<int>& r, const std::vector<int>& p, Shared& sh) {
        if (!sh.tick()) return;
        if (p.empty()) {
            if (r.size() > best_.size()) best_ = r;
            return;
        }
        std::vector<std::vector<int>> classes;
        for (const int v : p) {
            bool placed = false;
            for (auto& cls : classes) {
                bool conflict = false;
                for (const int u : cls) {
                    if (adjacent(u, v)) {
                        conflict = true;
                        break;
                    }
                }
                if (!conflict) {
                    cls.push_back(v);
                    placed = true;
                    break;
                }
            }
            if (!placed) classes.push_back({v});
        }
        std::vector<int> order;
        std::vector<int> color;
        order.reserve(p.size());
        color.reserve(p.size());
        for (std::size_t ci = 0; ci < classes.size(); ++ci) {
            for (const int v : classes[ci]) {
                order.push_back(v);
                color.push_back(static_cast<int>(ci) + 1);
            }
        }
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (sh.stop.load(std::memory_order_relaxed)) return;
            if (static_cast<int>(r.size()) + color[static_cast<std::size_t>(i)] <=
                static_cast<int>(best_.size())) {
                sh.bound_prunes.fetch_add(1, std::memory_order_relaxed);
                return;
            }
            const int v = order[static_cast<std::size_t>(i)];
            std::vector<int> nested;
            for (int j = 0; j < i; ++j) {
                const int u = order[static_cast<std::size_t>(j)];
                if (adjacent(u, v)) nested.push_back(u);
            }
            r.push_back(v);
            expand(r, nested, sh);
            r.pop_back();
        }
    }

    int nv_;
    std::size_t words_;
    std::vector<std::uint64_t> rows_;
    std::vector<int> best_;
};

}  // namespace

SearchCertificate turan_exact(int n, int k, const std::vector<Hypergraph>& patterns,
                              const SearchOptions& options) {
    if (n < 0 || n > VertexSet::max_universe)
        throw std::invalid_argument("universe size out of range");
    if (k < 1) throw std::invalid_argument("uniformity must be >= 1");
    if (binomial(n, k) > options.ceiling)
        throw std::invalid_argument("candidate space exceeds the ceiling");
    std::vector<Hypergraph> applicable;
    std::vector<std::string> names;
    for (const Hypergraph& p : patterns) {
        if (p.k() != k) throw std::invalid_argument("pattern uniformity differs");
        if (p.edge_count() == 0)
            throw std::invalid_argument("empty pattern forbids nothing");
        names.push_back("k" + std::to_string(p.k()) + "-n" + std::to_string(p.n()) +
                        "-m" + std::to_string(p.edge_count()));
        if (p.n() <= n) applicable.push_back(p);
    }

    SearchCertificate cert;
    cert.n = n;
    cert.k = k;
    cert.pattern_names = std::move(names);

    const std::vector<VertexSet> cands = lex_ksubsets(n, k);
    Shared sh;
    sh.max_nodes = options.budget.max_nodes;
    if (options.budget.max_seconds >= 0) {
        sh.has_deadline = true;
        sh.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                         std::chrono::duration<double>(options.budget.max_seconds));
    }
    const auto started = Clock::now();

    if (applicable.empty()) {
        // Nothing can embed; the complete family is extremal.
        cert.size = static_cast<int>(cands.size());
        cert.witness = Hypergraph(k, n, cands);
        cert.exhaustive = true;
        cert.stats.seconds = std::chrono::duration<double>(Clock::now() - started).count();
        return cert;
    }

    bool all_two_edge = true;
    for (const Hypergraph& p : applicable)
        if (p.edge_count() != 2) all_two_edge = false;

    SearchContext ctx{cands, applicable, n, options, sh};
    std::vector<VertexSet> witness_edges;

    if (options.clique_fastpath && all_two_edge) {
        VertexSet forbidden_overlap;  // forbidden |a & b| values, as a bitset
        for (const Hypergraph& p : applicable)
            forbidden_overlap.add((p.edge(0) & p.edge(1)).size());
        const int m = static_cast<int>(cands.size());
        MaxClique mc(m);
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b)
                if (!forbidden_overlap.contains(
                        (cands[static_cast<std::size_t>(a)] & cands[static_cast<std::size_t>(b)]).size()))
                    mc.add_edge(a, b);
        mc.run(sh);
        for (const int i : mc.best()) witness_edges.push_back(cands[static_cast<std::size_t>(i)]);
        sh.best.store(static_cast<int>(witness_edges.size()), std::memory_order_relaxed);
        cert.clique_fastpath = true;
    } else {
        const int threads = std::max(1, options.threads);
        if (threads == 1) {
            std::vector<VertexSet> chosen;
            dfs(ctx, chosen, 0);
        } else {
            std::vector<Task> tasks;
            {
                std::vector<VertexSet> chosen;
                gen_tasks(ctx, chosen, 0, std::max(0, options.split_depth), tasks);
            }
            std::atomic<std::size_t> next{0};
            std::vector<std::thread> pool;
            pool.reserve(static_cast<std::size_t>(threads));
            for (int t = 0; t < threads; ++t) {
                pool.emplace_back([&]() {
                    for (;;) {
                        const std::size_t ti = next.fetch_add(1);
                        if (ti >= tasks.size()) return;
                        std::vector<VertexSet> chosen = tasks[ti].prefix;
                        dfs(ctx, chosen, tasks[ti].idx);
                    }
                });
            }
            for (auto& th : pool) th.join();
        }
        // Canonical witness, identical for every thread count.
        const int target = sh.best.load(std::memory_order_relaxed);
        std::vector<VertexSet> chosen;
        if (!hunt(ctx, chosen, 0, target, witness_edges) ||
            static_cast<int>(witness_edges.size()) != target)
            throw std::logic_error("witness reconstruction missed the found size");
    }

    cert.size = sh.best.load(std::memory_order_relaxed);
    cert.witness = Hypergraph(k, n, witness_edges);
    cert.exhaustive = !sh.stop.load(std::memory_order_relaxed);
    cert.stats.nodes = sh.nodes.load(std::memory_order_relaxed);
    cert.stats.bound_prunes = sh.bound_prunes.load(std::memory_order_relaxed);
    cert.stats.symmetry_prunes = sh.symmetry_prunes.load(std::memory_order_relaxed);
    cert.stats.seconds = std::chrono::duration<double>(Clock::now() - started).count();

    // Independent re-check of the certificate through the generic embedder.
    for (const Hypergraph& p : applicable)
        if (contains(cert.witness, p))
            throw std::logic_error("witness failed independent re-verification");
    return cert;
}

const char* formula_name(FormulaId id) {
    switch (id) {
        case FormulaId::matching_upper: return "matching-upper";
        case FormulaId::path2_value: return "path2-value";
        case FormulaId::odd_path_value: return "odd-path-value";
        case FormulaId::even_path_value: return "even-path-value";
        case FormulaId::forest_upper: return "forest-upper";
        case FormulaId::expansion_lower: return "expansion-lower";
        case FormulaId::graph_path_upper: return "graph-path-upper";
    }
    throw std::invalid_argument("unknown formula id");
}

std::vector<VerifyRow> verify_formula(FormulaId id, const std::vector<FormulaPoint>& grid,
                                      const SearchOptions& options) {
    std::vector<VerifyRow> rows;
    rows.reserve(grid.size());
    for (const FormulaPoint& pt : grid) {
        VerifyRow row;
        row.formula = formula_name(id);
        Hypergraph pattern(std::max(1, pt.k), 0);
        switch (id) {
            case FormulaId::matching_upper:
                if (pt.aux < 1) throw std::invalid_argument("need nu >= 1");
                pattern = matching_family(pt.k, pt.aux + 1);
                row.params = {{"n", pt.n}, {"k", pt.k}, {"nu", pt.aux}};
                row.reference_value = erdos_matching_bound(pt.n, pt.k, pt.aux);
                row.relation = "<=";
                break;
            case FormulaId::path2_value:
                pattern = linear_path(pt.k, 2);
                row.params = {{"n", pt.n}, {"k", pt.k}};
                row.reference_value = binomial(pt.n - 2, pt.k - 2);
                row.relation = "==";
                break;
            case FormulaId::odd_path_value:
                if (pt.aux % 2 != 1) throw std::invalid_argument("need odd ell");
                pattern = linear_path(pt.k, pt.aux);
                row.params = {{"n", pt.n}, {"k", pt.k}, {"ell", pt.aux}};
                row.reference_value = path_extremal_value(pt.n, pt.k, pt.aux);
                row.relation = "==";
                break;
            case FormulaId::even_path_value:
                if (pt.aux % 2 != 0) throw std::invalid_argument("need even ell");
                pattern = linear_path(pt.k, pt.aux);
                row.params = {{"n", pt.n}, {"k", pt.k}, {"ell", pt.aux}};
                row.reference_value = path_extremal_value(pt.n, pt.k, pt.aux);
                row.relation = "==";
                break;
            case FormulaId::forest_upper:
                if (pt.aux < pt.k) throw std::invalid_argument("need v >= k");
                pattern = growth_to_hypergraph(tight_path_growth(pt.k, pt.aux - pt.k + 1));
                row.params = {{"n", pt.n}, {"k", pt.k}, {"v", pt.aux}};
                row.reference_value = forest_turan_bound(pt.aux, pt.k, pt.n);
                row.relation = "<=";
                break;
            case FormulaId::expansion_lower: {
                const Forest tree(path_graph(pt.aux));
                const int sig = sigma(tree).value;
                pattern = expand(tree.graph(), pt.k).result;
                row.params = {{"n", pt.n}, {"k", pt.k}, {"ell", pt.aux}};
                row.reference_value =
                    (sig - 1) * binomial(pt.n - sig + 1, pt.k - 1);
                row.relation = ">=";
                break;
            }
            case FormulaId::graph_path_upper:
                if (pt.k != 2) throw std::invalid_argument("graph bound needs k = 2");
                pattern = linear_path(2, pt.aux);
                row.params = {{"n", pt.n}, {"ell", pt.aux}};
                // floor((ell-1) n / 2): for integers, being at most the
                // rational bound and at most its floor are the same thing.
                row.reference_value = (static_cast<long long>(pt.aux) - 1) * pt.n / 2;
                row.relation = "<=";
                break;
        }
        const SearchCertificate cert = turan_exact(pt.n, pt.k, {pattern}, options);
        row.search_value = cert.size;
        row.exhaustive = cert.exhaustive;
        if (row.relation == "==")
            row.ok = row.search_value == row.reference_value;
        else if (row.relation == "<=")
            row.ok = row.search_value <= row.reference_value;
        else
            row.ok = row.search_value >= row.reference_value;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace turan
