#include "turan/embed.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "turan/kernel_graph.hpp"

namespace turan {

namespace {

// Visit pattern edges most-constrained first: start from `first`, then
// repeatedly take the edge sharing the most vertices with those already
// placed (ties to the lower index).
std::vector<int> constrained_order(const Hypergraph& pattern, int first) {
    const int m = pattern.edge_count();
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(m));
    std::vector<char> taken(static_cast<std::size_t>(m), 0);
    order.push_back(first);
    taken[static_cast<std::size_t>(first)] = 1;
    VertexSet placed = pattern.edge(first);
    while (static_cast<int>(order.size()) < m) {
        int best = -1;
        int best_share = -1;
        for (int i = 0; i < m; ++i) {
            if (taken[static_cast<std::size_t>(i)]) continue;
            const int share = (pattern.edge(i) & placed).size();
            if (share > best_share) {
                best = i;
                best_share = share;
            }
        }
        order.push_back(best);
        taken[static_cast<std::size_t>(best)] = 1;
        placed |= pattern.edge(best);
    }
    return order;
}

class ContainmentSearch {
public:
    ContainmentSearch(const std::vector<VertexSet>& host_edges, int host_n,
                      const Hypergraph& pattern)
        : host_(host_edges),
          host_n_(host_n),
          pattern_(pattern),
          image_(static_cast<std::size_t>(pattern.n()), -1),
          edge_image_(static_cast<std::size_t>(pattern.edge_count()), -1),
          host_degree_(static_cast<std::size_t>(host_n), 0) {
        for (const VertexSet e : host_)
            for (const int v : e) ++host_degree_[static_cast<std::size_t>(v)];
    }

    // forced < 0: unrestricted. Otherwise only embeddings whose edge map
    // hits host_[forced] are accepted.
    std::optional<Embedding> run(int forced) {
        if (pattern_.n() > host_n_) return std::nullopt;
        const int m = pattern_.edge_count();
        if (m > static_cast<int>(host_.size())) return std::nullopt;
        if (m == 0) return finalize();
        if (forced < 0) {
            order_ = constrained_order(pattern_, 0);
            return match(0, -1);
        }
        // The forced host edge may back any pattern edge; root the order at
        // each in turn so the restriction stays a plain root filter.
        for (int first = 0; first < m; ++first) {
            order_ = constrained_order(pattern_, first);
            if (auto found = match(0, forced)) return found;
        }
        return std::nullopt;
    }

private:
    std::optional<Embedding> match(int pos, int forced_root) {
        if (pos == static_cast<int>(order_.size())) return finalize();
        const int pe = order_[static_cast<std::size_t>(pos)];
        const VertexSet pedge = pattern_.edge(pe);
        VertexSet anchors;
        std::vector<int> unmapped;
        for (const int pv : pedge) {
            const int hv = image_[static_cast<std::size_t>(pv)];
            if (hv >= 0)
                anchors.add(hv);
            else
                unmapped.push_back(pv);
        }
        for (int he = 0; he < static_cast<int>(host_.size()); ++he) {
            if (pos == 0 && forced_root >= 0 && he != forced_root) continue;
            const VertexSet hedge = host_[static_cast<std::size_t>(he)];
            if (!anchors.subset_of(hedge)) continue;
            const VertexSet fresh = hedge - anchors;
            if (fresh.intersects(used_)) continue;
            if (auto found = assign(pos, pe, he, unmapped, fresh)) return found;
        }
        return std::nullopt;
    }

    // Try every injection of the edge's unmapped pattern vertices onto the
    // fresh host vertices. High-degree host vertices go first so that
    // heavily reused pattern vertices land on hubs early.
    std::optional<Embedding> assign(int pos, int pe, int he,
                                    const std::vector<int>& unmapped, VertexSet fresh) {
        std::vector<int> pool = fresh.to_vector();
        std::sort(pool.begin(), pool.end(), [&](int a, int b) {
            const int da = host_degree_[static_cast<std::size_t>(a)];
            const int db = host_degree_[static_cast<std::size_t>(b)];
            if (da != db) return da > db;
            return a < b;
        });
        std::vector<int> perm(pool.size());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            for (std::size_t j = 0; j < unmapped.size(); ++j) {
                const int hv = pool[static_cast<std::size_t>(perm[j])];
                image_[static_cast<std::size_t>(unmapped[j])] = hv;
                used_.add(hv);
            }
            edge_image_[static_cast<std::size_t>(pe)] = he;
            auto found = match(pos + 1, -1);
            edge_image_[static_cast<std::size_t>(pe)] = -1;
            for (const int pv : unmapped) {
                used_.remove(image_[static_cast<std::size_t>(pv)]);
                image_[static_cast<std::size_t>(pv)] = -1;
            }
            if (found) return found;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return std::nullopt;
    }

    // All pattern edges are matched; place isolated pattern vertices on the
    // smallest unused host vertices. Enough room exists because the whole
    // search is gated on pattern.n() <= host_n_.
    std::optional<Embedding> finalize() {
        Embedding emb;
        emb.vertex_map = image_;
        emb.edge_map = edge_image_;
        int next = 0;
        for (int pv = 0; pv < pattern_.n(); ++pv) {
            if (emb.vertex_map[static_cast<std::size_t>(pv)] >= 0) continue;
            while (next < host_n_ && used_.contains(next)) ++next;
            if (next == host_n_) return std::nullopt;
            emb.vertex_map[static_cast<std::size_t>(pv)] = next;
            ++next;
        }
        return emb;
    }

    const std::vector<VertexSet>& host_;
    int host_n_;
    const Hypergraph& pattern_;
    std::vector<int> order_;
    std::vector<int> image_;
    std::vector<int> edge_image_;
    std::vector<int> host_degree_;
    VertexSet used_;
};

}  // namespace

bool validate_embedding(const Hypergraph& host, const Hypergraph& pattern,
                        const Embedding& emb) {
    if (host.k() != pattern.k()) return false;
    if (static_cast<int>(emb.vertex_map.size()) != pattern.n()) return false;
    if (static_cast<int>(emb.edge_map.size()) != pattern.edge_count()) return false;
    VertexSet seen;
    for (const int hv : emb.vertex_map) {
        if (hv < 0 || hv >= host.n() || seen.contains(hv)) return false;
        seen.add(hv);
    }
    for (int i = 0; i < pattern.edge_count(); ++i) {
        const int he = emb.edge_map[static_cast<std::size_t>(i)];
        if (he < 0 || he >= host.edge_count()) return false;
        VertexSet img;
        for (const int pv : pattern.edge(i))
            img.add(emb.vertex_map[static_cast<std::size_t>(pv)]);
        if (img != host.edge(he)) return false;
    }
    return true;
}

std::optional<Embedding> contains(const Hypergraph& host, const Hypergraph& pattern) {
    if (host.k() != pattern.k())
        throw std::invalid_argument("containment needs equal uniformity");
    ContainmentSearch search(host.edges(), host.n(), pattern);
    return search.run(-1);
}

bool contains_using_edge(const std::vector<VertexSet>& host_edges, int host_n,
                         const Hypergraph& pattern, int forced) {
    if (forced < 0 || forced >= static_cast<int>(host_edges.size()))
        throw std::out_of_range("forced edge index out of range");
    ContainmentSearch search(host_edges, host_n, pattern);
    return search.run(forced).has_value();
}

ShadowPeel peel_shadow(const Hypergraph& f, int threshold) {
    if (threshold < 0) throw std::invalid_argument("peel threshold must be >= 0");
    std::vector<VertexSet> edges = f.edges();
    std::vector<PeelLogEntry> log;
    const std::vector<VertexSet> shadows = lex_ksubsets(f.n(), f.k() - 1);
    bool removed_any = true;
    while (removed_any) {
        removed_any = false;
        for (const VertexSet x : shadows) {
            std::vector<VertexSet> through;
            std::vector<VertexSet> rest;
            for (const VertexSet e : edges)
                (x.subset_of(e) ? through : rest).push_back(e);
            if (!through.empty() && static_cast<int>(through.size()) <= threshold) {
                log.push_back(PeelLogEntry{x, std::move(through)});
                edges = std::move(rest);
                removed_any = true;
                break;
            }
        }
    }
    return ShadowPeel{Hypergraph(f.k(), f.n(), edges), std::move(log)};
}

std::optional<Embedding> embed_tight_forest(const Hypergraph& f, const GrowthSequence& t) {
    if (f.k() != t.k())
        throw std::invalid_argument("forest uniformity differs from the host");
    if (!validate_growth(t))
        throw std::invalid_argument("not a valid growth sequence");
    if (!is_tight(t))
        throw std::invalid_argument("growth sequence is not tight");
    const GrowthSequence dense = relabel_dense(t);
    const Hypergraph pattern = growth_to_hypergraph(t);
    if (pattern.edge_count() == 0) return Embedding{};

    // A disconnected tight forest is completed to a tight tree on the same
    // vertices; embedding the completion embeds the forest.
    GrowthSequence work = dense;
    for (const GrowthStep& st : dense.steps()) {
        if (st.defining.size() < dense.k() - 1) {
            work = tight_completion(dense);
            break;
        }
    }

    const int v = dense.span().size();
    const int k = f.k();
    const ShadowPeel peel = peel_shadow(f, v - k);
    const Hypergraph& residue = peel.residue;
    if (residue.empty()) {
        if (pattern.n() > f.n()) return std::nullopt;
        return contains(f, pattern);
    }

    // Inside the residue every (k-1)-set lying in some edge has degree at
    // least v - k + 1, so growing the tree edge by edge cannot run out of
    // fresh vertices: at step i at most k + i - 1 host vertices are used and
    // only i - 1 < v - k + 1 of the candidates can be blocked.
    std::vector<int> image(static_cast<std::size_t>(v), -1);
    VertexSet used;
    for (int i = 0; i < work.edge_count(); ++i) {
        const GrowthStep& st = work.step(i);
        if (i == 0) {
            const std::vector<int> pattern_side = st.edge.to_vector();
            const std::vector<int> host_side = residue.edge(0).to_vector();
            for (std::size_t j = 0; j < pattern_side.size(); ++j) {
                image[static_cast<std::size_t>(pattern_side[j])] = host_side[j];
                used.add(host_side[j]);
            }
            continue;
        }
        VertexSet anchor_image;
        for (const int a : st.defining) anchor_image.add(image[static_cast<std::size_t>(a)]);
        const int fresh_pattern = (st.edge - st.defining).min();
        int fresh_host = -1;
        for (const VertexSet he : residue.edges()) {
            if (!anchor_image.subset_of(he)) continue;
            const int w = (he - anchor_image).min();
            if (used.contains(w)) continue;
            fresh_host = w;
            break;
        }
        if (fresh_host < 0)
            throw std::logic_error("residue degree guarantee violated");
        image[static_cast<std::size_t>(fresh_pattern)] = fresh_host;
        used.add(fresh_host);
    }

    Embedding emb;
    emb.vertex_map = image;
    emb.edge_map.assign(static_cast<std::size_t>(pattern.edge_count()), -1);
    for (const GrowthStep& st : dense.steps()) {
        VertexSet img;
        for (const int pv : st.edge) img.add(image[static_cast<std::size_t>(pv)]);
        const int host_index = f.edge_index(img);
        if (host_index < 0)
            throw std::logic_error("embedded edge missing from the host");
        emb.edge_map[static_cast<std::size_t>(pattern.edge_index(st.edge))] = host_index;
    }
    return emb;
}

namespace {

// Backtracking map of the support of h onto kernel-graph vertices, smallest
// candidates first. Returns the image per h-vertex (-1 for isolated ones).
std::optional<std::vector<int>> kernel_subgraph(const Graph& h, const Graph& g2) {
    std::vector<int> support = h.support().to_vector();
    std::vector<int> image(static_cast<std::size_t>(h.n()), -1);
    VertexSet used;
    auto place = [&](auto&& self, std::size_t pos) -> bool {
        if (pos == support.size()) return true;
        const int x = support[pos];
        for (int w = 0; w < g2.n(); ++w) {
            if (used.contains(w)) continue;
            bool compatible = true;
            for (const int y : h.adjacency(x)) {
                const int wy = image[static_cast<std::size_t>(y)];
                if (wy >= 0 && !g2.has_edge(w, wy)) {
                    compatible = false;
                    break;
                }
            }
            if (!compatible) continue;
            image[static_cast<std::size_t>(x)] = w;
            used.add(w);
            if (self(self, pos + 1)) return true;
            used.remove(w);
            image[static_cast<std::size_t>(x)] = -1;
        }
        return false;
    };
    if (!place(place, 0)) return std::nullopt;
    return image;
}

}  // namespace

KernelEmbedResult embed_expansion_via_kernel(const Hypergraph& f, const Graph& h,
                                             std::optional<int> s_override) {
    const int k = f.k();
    if (k < 3) throw std::invalid_argument("kernel route needs uniformity >= 3");
    const int q = h.edge_count();
    const int s = s_override.value_or(k * q);
    if (q == 0) {
        // Nothing to route through sunflowers; only the isolated vertices of
        // h need room.
        if (h.n() > f.n()) return KernelEmbedResult{KernelEmbedOutcome::not_found_inconclusive, std::nullopt, s};
        Embedding emb;
        emb.vertex_map.resize(static_cast<std::size_t>(h.n()));
        std::iota(emb.vertex_map.begin(), emb.vertex_map.end(), 0);
        return KernelEmbedResult{KernelEmbedOutcome::found, emb, s};
    }
    if (s < 1) throw std::invalid_argument("kernel degree threshold must be >= 1");

    const KernelGraph kg = kernel_graph(f, s);
    const auto base_image = kernel_subgraph(h, kg.graph());
    if (!base_image)
        return KernelEmbedResult{KernelEmbedOutcome::not_found_inconclusive, std::nullopt, s};

    const ExpandedForest ex = expand(h, k);
    std::vector<int> vmap(static_cast<std::size_t>(ex.result.n()), -1);
    VertexSet used;
    for (int x = 0; x < h.n(); ++x) {
        const int w = (*base_image)[static_cast<std::size_t>(x)];
        if (w >= 0) {
            vmap[static_cast<std::size_t>(x)] = w;
            used.add(w);
        }
    }

    // One fresh petal per base edge. At the default threshold s = k * e(h)
    // the used set can never block all petals of a witness sunflower; a
    // caller-chosen smaller s can, which is an honest non-answer.
    std::vector<int> edge_map(static_cast<std::size_t>(q), -1);
    for (int j = 0; j < q; ++j) {
        const auto [x, y] = h.edges()[static_cast<std::size_t>(j)];
        const int hx = vmap[static_cast<std::size_t>(x)];
        const int hy = vmap[static_cast<std::size_t>(y)];
        const DeltaSystem& ds = kg.witness(hx, hy);
        VertexSet petal;
        bool picked = false;
        for (const VertexSet p : ds.petals) {
            if (!p.intersects(used)) {
                petal = p;
                picked = true;
                break;
            }
        }
        if (!picked)
            return KernelEmbedResult{KernelEmbedOutcome::not_found_inconclusive, std::nullopt, s};
        const std::vector<int> fresh_ids = ex.fresh[static_cast<std::size_t>(j)].to_vector();
        const std::vector<int> petal_ids = petal.to_vector();
        for (std::size_t i = 0; i < fresh_ids.size(); ++i) {
            vmap[static_cast<std::size_t>(fresh_ids[i])] = petal_ids[i];
            used.add(petal_ids[i]);
        }
        const int host_index = f.edge_index(ds.kernel | petal);
        if (host_index < 0)
            throw std::logic_error("sunflower member missing from the host");
        VertexSet pattern_edge = ex.fresh[static_cast<std::size_t>(j)];
        pattern_edge.add(x).add(y);
        edge_map[static_cast<std::size_t>(ex.result.edge_index(pattern_edge))] = host_index;
    }

    // Isolated base vertices go last so their images never block a petal.
    int next = 0;
    for (int x = 0; x < h.n(); ++x) {
        if (vmap[static_cast<std::size_t>(x)] >= 0) continue;
        while (next < f.n() && used.contains(next)) ++next;
        if (next == f.n())
            return KernelEmbedResult{KernelEmbedOutcome::not_found_inconclusive, std::nullopt, s};
        vmap[static_cast<std::size_t>(x)] = next;
        used.add(next);
    }

    Embedding emb;
    emb.vertex_map = std::move(vmap);
    emb.edge_map = std::move(edge_map);
    if (!validate_embedding(f, ex.result, emb))
        throw std::logic_error("kernel route assembled an invalid embedding");
    return KernelEmbedResult{KernelEmbedOutcome::found, std::move(emb), s};
}

CenterPartition classify_centers(const Hypergraph& f, const Graph& g2) {
    if (g2.n() != f.n())
        throw std::invalid_argument("kernel graph universe differs from the family");
    CenterPartition out;
    out.center.assign(static_cast<std::size_t>(f.edge_count()), -1);
    for (int i = 0; i < f.edge_count(); ++i) {
        const VertexSet e = f.edge(i);
        for (const int x : e) {
            if ((e - VertexSet::single(x)).subset_of(g2.adjacency(x))) {
                out.center[static_cast<std::size_t>(i)] = x;
                break;
            }
        }
        (out.center[static_cast<std::size_t>(i)] < 0 ? out.f1 : out.f2).push_back(i);
    }
    return out;
}

}  // namespace turan
