#include "turan/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "turan/constructions.hpp"
#include "turan/core.hpp"
#include "turan/embed.hpp"
#include "turan/growth.hpp"
#include "turan/kernel_graph.hpp"

namespace turan {

namespace {

using Clock = std::chrono::steady_clock;

// Wall-clock allowances, where the checks state one.
constexpr double kIntersectingSeconds = 10.0;
constexpr double kPathValuesSeconds = 60.0;
constexpr double kSigmaCrossCutSeconds = 300.0;
constexpr double kGraphPathSeconds = 120.0;

// Deterministic Fisher-Yates; std::shuffle's trajectory is not pinned by the
// standard, this one is.
template <typename T>
void shuffle_fixed(std::vector<T>& v, std::mt19937& rng) {
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[rng() % i]);
}

int pick(std::mt19937& rng, int lo, int hi) {  // inclusive range
    return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
}

// ---- tree and forest enumeration ------------------------------------------

Graph prufer_decode(const std::vector<int>& seq, int v) {
    std::vector<int> deg(static_cast<std::size_t>(v), 1);
    for (const int s : seq) ++deg[static_cast<std::size_t>(s)];
    Graph g(v);
    std::vector<char> used(static_cast<std::size_t>(v), 0);
    for (const int s : seq) {
        for (int leaf = 0; leaf < v; ++leaf) {
            if (deg[static_cast<std::size_t>(leaf)] == 1 && !used[static_cast<std::size_t>(leaf)]) {
                g.add_edge(std::min(leaf, s), std::max(leaf, s));
                used[static_cast<std::size_t>(leaf)] = 1;
                --deg[static_cast<std::size_t>(s)];
                break;
            }
        }
    }
    int a = -1;
    for (int i = 0; i < v; ++i) {
        if (!used[static_cast<std::size_t>(i)] && deg[static_cast<std::size_t>(i)] == 1) {
            if (a < 0)
                a = i;
            else
                g.add_edge(a, i);
        }
    }
    return g;
}

std::string rooted_code(const Graph& g, int root, int parent) {
    std::vector<std::string> child;
    for (const int c : g.adjacency(root)) {
        if (c == parent) continue;
        child.push_back(rooted_code(g, c, root));
    }
    std::sort(child.begin(), child.end());
    std::string out = "(";
    for (const std::string& s : child) out += s;
    out += ")";
    return out;
}

// Center(s) of one tree component: strip leaves until one or two vertices
// remain.
std::vector<int> component_centers(const Graph& g, const std::vector<int>& vertices) {
    std::map<int, int> deg;
    for (const int v : vertices) deg[v] = g.degree(v);
    std::set<int> alive(vertices.begin(), vertices.end());
    while (alive.size() > 2) {
        std::vector<int> leaves;
        for (const int v : alive)
            if (deg[v] <= 1) leaves.push_back(v);
        for (const int leaf : leaves) {
            alive.erase(leaf);
            for (const int u : g.adjacency(leaf))
                if (alive.count(u)) --deg[u];
        }
    }
    return {alive.begin(), alive.end()};
}

std::string component_code(const Graph& g, const std::vector<int>& vertices) {
    std::string best;
    for (const int c : component_centers(g, vertices)) {
        std::string code = rooted_code(g, c, -1);
        if (best.empty() || code < best) best = code;
    }
    // Prefix with the vertex count so codes of different sizes never collide.
    return std::to_string(vertices.size()) + ":" + best;
}

std::vector<std::vector<int>> components_of(const Graph& g) {
    std::vector<int> comp(static_cast<std::size_t>(g.n()), -1);
    std::vector<std::vector<int>> out;
    for (int start = 0; start < g.n(); ++start) {
        if (comp[static_cast<std::size_t>(start)] >= 0) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{start};
        comp[static_cast<std::size_t>(start)] = id;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            out[static_cast<std::size_t>(id)].push_back(v);
            for (const int u : g.adjacency(v)) {
                if (comp[static_cast<std::size_t>(u)] < 0) {
                    comp[static_cast<std::size_t>(u)] = id;
                    stack.push_back(u);
                }
            }
        }
    }
    for (auto& vs : out) std::sort(vs.begin(), vs.end());
    return out;
}

}  // namespace

std::string forest_canonical_code(const Graph& g) {
    std::vector<std::string> codes;
    for (const auto& comp : components_of(g)) codes.push_back(component_code(g, comp));
    std::sort(codes.begin(), codes.end());
    std::string out;
    for (const std::string& c : codes) out += c + "|";
    return out;
}

std::vector<Graph> nonisomorphic_trees(int v) {
    if (v < 1) throw std::invalid_argument("trees need at least one vertex");
    if (v == 1) return {Graph(1)};
    if (v == 2) return {Graph(2, {{0, 1}})};
    std::vector<Graph> out;
    std::set<std::string> seen;
    std::vector<int> seq(static_cast<std::size_t>(v - 2), 0);
    for (;;) {
        const Graph t = prufer_decode(seq, v);
        if (seen.insert(forest_canonical_code(t)).second) out.push_back(t);
        int pos = v - 3;
        while (pos >= 0 && seq[static_cast<std::size_t>(pos)] == v - 1) {
            seq[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++seq[static_cast<std::size_t>(pos)];
    }
    return out;
}

std::vector<Graph> nonisomorphic_forests(int max_vertices, int min_edges) {
    if (max_vertices < 1) throw std::invalid_argument("need at least one vertex");
    std::vector<std::vector<Graph>> trees(static_cast<std::size_t>(max_vertices) + 1);
    for (int s = 1; s <= max_vertices; ++s) trees[static_cast<std::size_t>(s)] = nonisomorphic_trees(s);

    std::vector<Graph> out;
    // Components are chosen as a multiset: sizes non-increasing and, within
    // one size, tree indices non-decreasing, so each forest appears once.
    struct Part {
        int size;
        int index;
    };
    std::vector<Part> chosen;
    auto emit = [&]() {
        int total = 0;
        int edges = 0;
        for (const Part& p : chosen) {
            total += p.size;
            edges += p.size - 1;
        }
        if (total == 0 || edges < min_edges) return;
        Graph g(total);
        int offset = 0;
        for (const Part& p : chosen) {
            const Graph& t = trees[static_cast<std::size_t>(p.size)][static_cast<std::size_t>(p.index)];
            for (const auto& [u, v] : t.edges()) g.add_edge(offset + u, offset + v);
            offset += p.size;
        }
        out.push_back(g);
    };
    auto rec = [&](auto&& self, int remaining, int max_size, int min_index) -> void {
        emit();
        for (int s = std::min(remaining, max_size); s >= 1; --s) {
            const int from = (s == max_size) ? min_index : 0;
            for (int i = from; i < static_cast<int>(trees[static_cast<std::size_t>(s)].size()); ++i) {
                chosen.push_back(Part{s, i});
                self(self, remaining - s, s, i);
                chosen.pop_back();
            }
        }
    };
    rec(rec, max_vertices, max_vertices, 0);
    return out;
}

bool naive_contains(const Hypergraph& host, const Hypergraph& pattern) {
    if (host.k() != pattern.k())
        throw std::invalid_argument("containment needs equal uniformity");
    if (pattern.n() > host.n()) return false;
    std::vector<int> image(static_cast<std::size_t>(pattern.n()), -1);
    VertexSet used;
    auto rec = [&](auto&& self, int pv) -> bool {
        if (pv == pattern.n()) {
            for (const VertexSet e : pattern.edges()) {
                VertexSet img;
                for (const int x : e) img.add(image[static_cast<std::size_t>(x)]);
                if (!host.has_edge(img)) return false;
            }
            return true;
        }
        for (int hv = 0; hv < host.n(); ++hv) {
            if (used.contains(hv)) continue;
            image[static_cast<std::size_t>(pv)] = hv;
            used.add(hv);
            if (self(self, pv + 1)) return true;
            used.remove(hv);
        }
        return false;
    };
    return rec(rec, 0);
}

namespace {

// ---- the eleven checks -----------------------------------------------------

SearchOptions options_with(int threads) {
    SearchOptions opt;
    opt.threads = threads;
    return opt;
}

CriterionResult check_intersecting_family(int threads) {
    CriterionResult r;
    r.name = "intersecting-family-search";
    const auto cert = turan_exact(6, 3, {matching_family(3, 2)}, options_with(threads));
    const long long expected = binomial(5, 2);
    std::ostringstream detail;
    detail << "ex(6,3 | two disjoint edges) = " << cert.size << ", expected " << expected
           << ", exhaustive = " << (cert.exhaustive ? "yes" : "no");
    r.pass = cert.size == expected && cert.exhaustive;
    r.detail = detail.str();
    return r;
}

CriterionResult check_path_values(int threads) {
    CriterionResult r;
    r.name = "two-edge-path-values";
    const int expected[] = {4, 4, 5, 6};
    std::ostringstream detail;
    bool ok = true;
    for (int n = 4; n <= 7; ++n) {
        const auto cert = turan_exact(n, 3, {linear_path(3, 2)}, options_with(threads));
        const int rule = (n % 4 == 0) ? n : n - 1;
        const bool point = cert.size == expected[n - 4] && cert.size == rule && cert.exhaustive;
        ok = ok && point;
        detail << "n=" << n << ":" << cert.size << (point ? "" : "(!)") << " ";
    }
    r.pass = ok;
    r.detail = detail.str() + "expected 4 4 5 6";
    return r;
}

CriterionResult check_sigma_cross_cut(int) {
    CriterionResult r;
    r.name = "sigma-equals-cross-cut";
    const std::vector<Graph> forests = nonisomorphic_forests(8, 1);
    int checked = 0;
    std::ostringstream bad;
    for (const Graph& g : forests) {
        const Forest t(g);
        const int sig = sigma(t).value;
        for (const int k : {3, 4, 5}) {
            const Hypergraph ex = expand(g, k).result;
            const CrossCutResult cc = one_cross_cut_number(ex);
            ++checked;
            if (!cc.value || *cc.value != sig) {
                bad << " [forest " << forest_canonical_code(g) << " k=" << k << " sigma=" << sig
                    << " tau1=" << (cc.value ? std::to_string(*cc.value) : "none") << "]";
            }
        }
    }
    r.pass = bad.str().empty();
    r.detail = std::to_string(forests.size()) + " forests, " + std::to_string(checked) +
               " expansions checked" + (r.pass ? "" : "; mismatches:" + bad.str());
    return r;
}

CriterionResult check_cross_family(int) {
    CriterionResult r;
    r.name = "cross-family-avoids-expansion";
    std::vector<std::pair<std::string, Forest>> trees;
    trees.emplace_back("path3", Forest(path_graph(3)));
    trees.emplace_back("path5", Forest(path_graph(5)));
    trees.emplace_back("caterpillar(2,1)", example_tree_sec4(2, 1));
    std::ostringstream bad;
    int checked = 0;
    for (const auto& [name, t] : trees) {
        const int sig = sigma(t).value;
        for (const int k : {3, 4}) {
            const Hypergraph pattern = expand(t.graph(), k).result;
            for (int n = sig - 1 + k; n <= 14; ++n) {
                const Hypergraph fam = lower_bound_family(n, k, t);
                const long long want = (sig - 1) * binomial(n - sig + 1, k - 1);
                ++checked;
                const bool count_ok = fam.edge_count() == want;
                const bool free_ok = !contains(fam, pattern).has_value();
                if (!count_ok || !free_ok)
                    bad << " [" << name << " k=" << k << " n=" << n
                        << (count_ok ? "" : " count") << (free_ok ? "" : " embeds") << "]";
            }
        }
    }
    r.pass = bad.str().empty();
    r.detail = std::to_string(checked) + " (tree,k,n) points" +
               (r.pass ? "" : "; failures:" + bad.str());
    return r;
}

// Random tight growth on v vertices: every new edge picks k-1 vertices
// inside a random earlier edge and adds the next fresh vertex.
GrowthSequence random_tight_tree(int k, int v, std::mt19937& rng) {
    GrowthSequence seq(k);
    seq.push(VertexSet::range(0, k), VertexSet{});
    for (int next = k; next < v; ++next) {
        const GrowthStep& base = seq.step(pick(rng, 0, seq.edge_count() - 1));
        std::vector<int> ids = base.edge.to_vector();
        shuffle_fixed(ids, rng);
        VertexSet defining;
        for (int i = 0; i < k - 1; ++i) defining.add(ids[static_cast<std::size_t>(i)]);
        seq.push(defining | VertexSet::single(next), defining);
    }
    return seq;
}

CriterionResult check_dense_embeds(int) {
    CriterionResult r;
    r.name = "dense-family-embeds-tight-tree";
    // (k, v, n) with (v-k) C(n,k-1) < C(n,k), so an over-the-bound family fits.
    const std::vector<std::array<int, 3>> feasible = {
        {3, 3, 5}, {3, 3, 8},  {3, 4, 6},  {3, 4, 9}, {3, 4, 12}, {3, 5, 9},
        {3, 5, 11}, {3, 6, 12}, {4, 4, 6},  {4, 4, 10}, {4, 5, 8}, {4, 5, 11},
        {4, 5, 12}, {4, 6, 12},
    };
    std::mt19937 rng(20260823u);
    std::ostringstream bad;
    for (int trial = 0; trial < 100; ++trial) {
        const auto [k, v, n] = feasible[rng() % feasible.size()];
        const long long bound = forest_turan_bound(v, k, n);
        std::vector<VertexSet> pool = lex_ksubsets(n, k);
        shuffle_fixed(pool, rng);
        pool.resize(static_cast<std::size_t>(bound) + 1);
        const Hypergraph f(k, n, pool);
        const GrowthSequence t = random_tight_tree(k, v, rng);

        const ShadowPeel peel = peel_shadow(f, v - k);
        long long removed = 0;
        for (const PeelLogEntry& e : peel.log) removed += static_cast<long long>(e.removed.size());
        const auto emb = embed_tight_forest(f, t);
        const bool emb_ok = emb && validate_embedding(f, growth_to_hypergraph(t), *emb);
        if (!emb_ok || removed > bound) {
            bad << " [trial " << trial << " k=" << k << " v=" << v << " n=" << n
                << (emb_ok ? "" : " no-embedding") << (removed > bound ? " peel-overrun" : "")
                << "]";
        }
    }
    r.pass = bad.str().empty();
    r.detail = std::string("100 over-the-bound families") + (r.pass ? "" : ";" + bad.str());
    return r;
}

CriterionResult check_caterpillar(int) {
    CriterionResult r;
    r.name = "caterpillar-tau-sigma";
    std::ostringstream detail;
    bool ok = true;
    for (const auto& [d, c] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}}) {
        const Forest t = example_tree_sec4(d, c);
        const int tau = transversal_number(t.graph().to_hypergraph()).value;
        const int sig = sigma(t).value;
        const bool point = tau == 4 && sig == 2 * c + 3;
        ok = ok && point;
        detail << "(d=" << d << ",c=" << c << "): tau=" << tau << " sigma=" << sig
               << (point ? " " : "(!) ");
    }
    r.pass = ok;
    r.detail = detail.str() + "expected tau=4, sigma=2c+3";
    return r;
}

CriterionResult check_matching_kernel(int) {
    CriterionResult r;
    r.name = "matching-kernel-counterexample";
    std::ostringstream bad;
    for (const int t : {2, 3, 4}) {
        const Hypergraph h = counterexample_f3(t);
        if (h.edge_count() != t * t || h.n() != 3 * t) {
            bad << " [t=" << t << " wrong shape]";
            continue;
        }
        Graph expected(3 * t);
        for (int i = 0; i < t; ++i) expected.add_edge(2 * i, 2 * i + 1);
        for (int s = 2; s <= t; ++s) {
            const KernelGraph kg = kernel_graph(h, s);
            if (!(kg.graph() == expected)) {
                bad << " [t=" << t << " s=" << s << " not the matching]";
                continue;
            }
            for (const auto& [x, y] : kg.graph().edges())
                if (!is_valid_delta_system(h, kg.witness(x, y)))
                    bad << " [t=" << t << " s=" << s << " bad witness]";
        }
    }
    r.pass = bad.str().empty();
    r.detail = std::string("t in {2,3,4}, thresholds 2..t") + (r.pass ? "" : ";" + bad.str());
    return r;
}

CriterionResult check_kernel_route(int) {
    CriterionResult r;
    r.name = "kernel-route-embedding";
    std::mt19937 rng(871209u);
    std::ostringstream bad;
    for (int trial = 0; trial < 50; ++trial) {
        const int k = pick(rng, 3, 4);
        const int p = pick(rng, 3, 5);
        Graph h(p);
        const int q = pick(rng, 1, 3);
        while (h.edge_count() < q) {
            const int u = pick(rng, 0, p - 1);
            const int v = pick(rng, 0, p - 1);
            if (u != v && !h.has_edge(u, v)) h.add_edge(std::min(u, v), std::max(u, v));
        }
        const int s = k * h.edge_count();
        const ExpandedForest ex = expand(h, k);
        const int petal_base = ex.result.n();
        const int n = petal_base + s * (k - 2);

        Hypergraph host(k, n);
        for (const VertexSet e : ex.result.edges()) host.add_edge(e);
        for (const auto& [x, y] : h.edges()) {
            for (int i = 0; i < s; ++i) {
                VertexSet e = VertexSet::of({x, y});
                for (int j = 0; j < k - 2; ++j) e.add(petal_base + i * (k - 2) + j);
                if (!host.has_edge(e)) host.add_edge(e);
            }
        }
        for (int noise = 0; noise < 5; ++noise) {
            VertexSet e;
            while (e.size() < k) e.add(pick(rng, 0, n - 1));
            if (!host.has_edge(e)) host.add_edge(e);
        }

        const KernelEmbedResult res = embed_expansion_via_kernel(host, h);
        const bool ok = res.outcome == KernelEmbedOutcome::found && res.embedding &&
                        validate_embedding(host, ex.result, *res.embedding);
        if (!ok) bad << " [trial " << trial << " k=" << k << " q=" << h.edge_count() << "]";
    }
    r.pass = bad.str().empty();
    r.detail = std::string("50 padded hosts") + (r.pass ? "" : "; failures:" + bad.str());
    return r;
}

CriterionResult check_averaging_inequality(int) {
    CriterionResult r;
    r.name = "binomial-averaging-inequality";
    std::mt19937 rng(424242u);
    std::ostringstream bad;
    for (int trial = 0; trial < 1000; ++trial) {
        const int t = pick(rng, 1, 6);
        const int z1 = pick(rng, t, 20);
        const int len = pick(rng, 1, 8);
        std::vector<int> z{z1};
        for (int i = 1; i < len; ++i) z.push_back(pick(rng, 0, z1));
        std::sort(z.begin() + 1, z.end(), std::greater<int>());
        // z1 * sum C(zi, t) <= (sum zi) * C(z1, t), all in exact integers
        __int128 lhs = 0;
        __int128 total = 0;
        for (const int zi : z) {
            lhs += static_cast<__int128>(binomial(zi, t));
            total += zi;
        }
        lhs *= z1;
        const __int128 rhs = total * static_cast<__int128>(binomial(z1, t));
        if (lhs > rhs) bad << " [trial " << trial << " t=" << t << " z1=" << z1 << "]";
    }
    r.pass = bad.str().empty();
    r.detail = std::string("1000 non-increasing sequences") + (r.pass ? "" : ";" + bad.str());
    return r;
}

long long clique_tiling_value(int n, int block) {
    return (n / block) * binomial(block, 2) + binomial(n % block, 2);
}

CriterionResult check_graph_path_extremal(int threads) {
    CriterionResult r;
    r.name = "graph-path-extremal-divisibility";
    std::ostringstream bad;
    std::ostringstream note;
    bool corrected_ok = true;
    for (const int ell : {2, 3, 4}) {
        for (int n = 2; n <= 10; ++n) {
            const auto cert = turan_exact(n, 2, {linear_path(2, ell)}, options_with(threads));
            if (!cert.exhaustive) bad << " [ell=" << ell << " n=" << n << " nonexhaustive]";
            // The bound direction holds everywhere.
            if (2LL * cert.size > static_cast<long long>(ell - 1) * n)
                bad << " [ell=" << ell << " n=" << n << " bound]";
            // Equality whenever (ell+1) | n, with a disjoint-clique witness.
            if (n % (ell + 1) == 0) {
                const bool equal = 2LL * cert.size == static_cast<long long>(ell - 1) * n;
                const bool witness = clique_tiling_value(n, ell) == cert.size;
                if (!equal || !witness)
                    bad << " [ell=" << ell << " n=" << n << " ex=" << cert.size
                        << (equal ? "" : " 2ex!=(ell-1)n") << (witness ? "" : " tiling!=ex") << "]";
            }
            // For comparison: the divisibility that does give equality.
            if (n % ell == 0) {
                const bool equal = 2LL * cert.size == static_cast<long long>(ell - 1) * n &&
                                   clique_tiling_value(n, ell) == cert.size;
                corrected_ok = corrected_ok && equal;
            }
        }
    }
    r.pass = bad.str().empty();
    note << "bound everywhere, equality at (ell+1)|n as stated"
         << (r.pass ? "" : "; failing:" + bad.str())
         << "; equality at ell|n instead: " << (corrected_ok ? "all points pass" : "fails too");
    r.detail = note.str();
    return r;
}

CriterionResult check_oracle_agreement(int) {
    CriterionResult r;
    r.name = "containment-oracle-agreement";
    std::mt19937 rng(90210u);
    std::ostringstream bad;
    for (int trial = 0; trial < 200; ++trial) {
        const int k = pick(rng, 2, 4);
        const int hn = pick(rng, std::max(4, k), 9);
        const int pn = pick(rng, k, 6);
        const std::vector<VertexSet> hcands = lex_ksubsets(hn, k);
        const std::vector<VertexSet> pcands = lex_ksubsets(pn, k);
        Hypergraph host(k, hn);
        Hypergraph pattern(k, pn);
        const int hm = pick(rng, 0, std::min<int>(12, static_cast<int>(hcands.size())));
        const int pm = pick(rng, 1, std::min<int>(4, static_cast<int>(pcands.size())));
        std::vector<VertexSet> hpool = hcands;
        shuffle_fixed(hpool, rng);
        for (int i = 0; i < hm; ++i) host.add_edge(hpool[static_cast<std::size_t>(i)]);
        std::vector<VertexSet> ppool = pcands;
        shuffle_fixed(ppool, rng);
        for (int i = 0; i < pm; ++i) pattern.add_edge(ppool[static_cast<std::size_t>(i)]);

        const bool fast = contains(host, pattern).has_value();
        const bool slow = naive_contains(host, pattern);
        if (fast != slow)
            bad << " [trial " << trial << " k=" << k << " hn=" << hn << " pn=" << pn
                << " search=" << fast << " naive=" << slow << "]";
    }
    r.pass = bad.str().empty();
    r.detail = std::string("200 random (host, pattern) pairs") + (r.pass ? "" : ";" + bad.str());
    return r;
}

struct CriterionSpec {
    CriterionResult (*fn)(int);
    double seconds_allowed;  // <= 0: no wall-clock clause
};

const CriterionSpec kCriteria[] = {
    {check_intersecting_family, kIntersectingSeconds},
    {check_path_values, kPathValuesSeconds},
    {check_sigma_cross_cut, kSigmaCrossCutSeconds},
    {check_cross_family, 0.0},
    {check_dense_embeds, 0.0},
    {check_caterpillar, 0.0},
    {check_matching_kernel, 0.0},
    {check_kernel_route, 0.0},
    {check_averaging_inequality, 0.0},
    {check_graph_path_extremal, kGraphPathSeconds},
    {check_oracle_agreement, 0.0},
};

}  // namespace

CriterionResult run_criterion(int id, int threads) {
    if (id < 1 || id > criterion_count) throw std::invalid_argument("criterion id out of range");
    const CriterionSpec& spec = kCriteria[id - 1];
    const auto start = Clock::now();
    CriterionResult r = spec.fn(threads);
    r.id = id;
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (spec.seconds_allowed > 0 && r.seconds >= spec.seconds_allowed) {
        r.pass = false;
        r.detail += "; over the " + std::to_string(spec.seconds_allowed) + "s allowance";
    }
    return r;
}

std::vector<CriterionResult> run_verification_suite(int threads) {
    std::vector<CriterionResult> out;
    out.reserve(criterion_count);
    for (int id = 1; id <= criterion_count; ++id) out.push_back(run_criterion(id, threads));
    return out;
}

void print_criterion(std::ostream& os, const CriterionResult& r) {
    os << (r.pass ? "[PASS]" : "[FAIL]") << " criterion " << r.id << " " << r.name << " ("
       << r.seconds << "s) " << r.detail << "\n";
}

std::vector<VerifyRow> run_formula_suite(const std::string& name, const SearchOptions& options) {
    std::vector<FormulaPoint> grid;
    FormulaId id;
    if (name == "matching-upper") {
        id = FormulaId::matching_upper;
        // below n = k(nu+1) the forbidden matching does not even fit
        for (int n = 6; n <= 9; ++n) grid.push_back({n, 3, 1});
    } else if (name == "path2-value") {
        id = FormulaId::path2_value;
        for (int n = 5; n <= 9; ++n) grid.push_back({n, 3, 2});
        for (int n = 7; n <= 8; ++n) grid.push_back({n, 4, 2});
    } else if (name == "odd-path-value") {
        id = FormulaId::odd_path_value;
        grid.push_back({7, 3, 3});
    } else if (name == "even-path-value") {
        id = FormulaId::even_path_value;
        for (int n = 6; n <= 8; ++n) grid.push_back({n, 3, 2});
        for (int n = 7; n <= 8; ++n) grid.push_back({n, 4, 2});
    } else if (name == "forest-upper") {
        id = FormulaId::forest_upper;
        for (int n = 5; n <= 8; ++n) grid.push_back({n, 3, 4});
        for (int n = 6; n <= 7; ++n) grid.push_back({n, 3, 5});
    } else if (name == "expansion-lower") {
        id = FormulaId::expansion_lower;
        // n = 8 would also pass but costs minutes: the 3-edge pattern spans 7
        // vertices and the bound prune barely bites while optimality of the
        // full star is being proved
        for (int n = 6; n <= 7; ++n) grid.push_back({n, 3, 3});
    } else if (name == "graph-path-upper") {
        id = FormulaId::graph_path_upper;
        for (const int ell : {2, 3, 4})
            for (int n = 4; n <= 9; ++n) grid.push_back({n, 2, ell});
    } else {
        throw std::invalid_argument("unknown formula suite: " + name);
    }
    return verify_formula(id, grid, options);
}

}  // namespace turan
