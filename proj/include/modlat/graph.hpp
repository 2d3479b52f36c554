#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "modlat/bounds.hpp"
#include "modlat/enumerate.hpp"
#include "modlat/module.hpp"
#include "modlat/planarity.hpp"

namespace modlat {

// Intersection graph of the proper submodules: vertex set excludes 0 and V,
// and two distinct vertices are adjacent exactly when their meet is nonzero.
// Vertex ids follow the lattice member order (sorted by length, then key),
// so every downstream report is deterministic.
struct IntersectionGraph {
    unsigned n = 0;
    size_t edge_count = 0;
    std::vector<size_t> member_index;       // vertex -> lattice member
    std::vector<std::vector<bool>> adj;
    std::vector<std::vector<int>> neighbors;

    bool adjacent(unsigned u, unsigned v) const { return adj[u][v]; }
    unsigned degree(unsigned v) const { return static_cast<unsigned>(neighbors[v].size()); }
};

inline IntersectionGraph build_graph(const SubmoduleLattice& L) {
    IntersectionGraph g;
    for (size_t i = 0; i < L.size(); ++i)
        if (i != L.zero_index && i != L.full_index) g.member_index.push_back(i);
    g.n = static_cast<unsigned>(g.member_index.size());
    g.adj.assign(g.n, std::vector<bool>(g.n, false));
    g.neighbors.assign(g.n, {});
    for (unsigned u = 0; u < g.n; ++u)
        for (unsigned v = u + 1; v < g.n; ++v) {
            const Submodule m =
                meet(L.ambient, L.members[g.member_index[u]], L.members[g.member_index[v]]);
            if (m.length > 0) {
                g.adj[u][v] = g.adj[v][u] = true;
                g.neighbors[u].push_back(static_cast<int>(v));
                g.neighbors[v].push_back(static_cast<int>(u));
                ++g.edge_count;
            }
        }
    return g;
}

struct ComponentsDiameter {
    unsigned component_count = 0;
    std::vector<int> component_of;      // per vertex
    std::vector<unsigned> diameters;    // per component
};

inline ComponentsDiameter components_and_diameter(const IntersectionGraph& g) {
    ComponentsDiameter out;
    out.component_of.assign(g.n, -1);
    for (unsigned s = 0; s < g.n; ++s) {
        if (out.component_of[s] != -1) continue;
        const int comp = static_cast<int>(out.component_count++);
        std::deque<unsigned> q{s};
        out.component_of[s] = comp;
        while (!q.empty()) {
            const unsigned v = q.front();
            q.pop_front();
            for (int to : g.neighbors[v])
                if (out.component_of[to] == -1) {
                    out.component_of[to] = comp;
                    q.push_back(static_cast<unsigned>(to));
                }
        }
    }
    out.diameters.assign(out.component_count, 0);
    for (unsigned s = 0; s < g.n; ++s) {
        std::vector<int> dist(g.n, -1);
        dist[s] = 0;
        std::deque<unsigned> q{s};
        while (!q.empty()) {
            const unsigned v = q.front();
            q.pop_front();
            for (int to : g.neighbors[v])
                if (dist[to] == -1) {
                    dist[to] = dist[v] + 1;
                    q.push_back(static_cast<unsigned>(to));
                }
        }
        auto& d = out.diameters[out.component_of[s]];
        for (unsigned v = 0; v < g.n; ++v)
            if (dist[v] > static_cast<int>(d)) d = static_cast<unsigned>(dist[v]);
    }
    return out;
}

// Articulation points by DFS low-link.
inline std::vector<unsigned> cut_vertices(const IntersectionGraph& g) {
    std::vector<int> depth(g.n, -1), low(g.n, 0);
    std::vector<bool> is_cut(g.n, false);
    const auto dfs = [&](auto&& self, unsigned v, int parent) -> void {
        low[v] = depth[v];
        int children = 0;
        for (int to : g.neighbors[v]) {
            if (to == parent) continue;  // simple graph: a single parent edge
            if (depth[to] == -1) {
                depth[to] = depth[v] + 1;
                ++children;
                self(self, static_cast<unsigned>(to), static_cast<int>(v));
                low[v] = std::min(low[v], low[to]);
                if (depth[v] > 0 && low[to] >= depth[v]) is_cut[v] = true;
            } else {
                low[v] = std::min(low[v], depth[to]);
            }
        }
        if (depth[v] == 0 && children > 1) is_cut[v] = true;
    };
    for (unsigned v = 0; v < g.n; ++v)
        if (depth[v] == -1) {
            depth[v] = 0;
            dfs(dfs, v, -1);
        }
    std::vector<unsigned> out;
    for (unsigned v = 0; v < g.n; ++v)
        if (is_cut[v]) out.push_back(v);
    return out;
}

// Bridges by DFS low-link; pairs are reported with the smaller id first.
inline std::vector<std::pair<unsigned, unsigned>> cut_edges(const IntersectionGraph& g) {
    std::vector<int> depth(g.n, -1), low(g.n, 0);
    std::vector<std::pair<unsigned, unsigned>> out;
    const auto dfs = [&](auto&& self, unsigned v, int parent) -> void {
        low[v] = depth[v];
        for (int to : g.neighbors[v]) {
            if (to == parent) continue;
            if (depth[to] == -1) {
                depth[to] = depth[v] + 1;
                self(self, static_cast<unsigned>(to), static_cast<int>(v));
                low[v] = std::min(low[v], low[to]);
                if (low[to] > depth[v])
                    out.emplace_back(std::min(v, static_cast<unsigned>(to)),
                                     std::max(v, static_cast<unsigned>(to)));
            } else {
                low[v] = std::min(low[v], depth[to]);
            }
        }
    };
    for (unsigned v = 0; v < g.n; ++v)
        if (depth[v] == -1) {
            depth[v] = 0;
            dfs(dfs, v, -1);
        }
    std::sort(out.begin(), out.end());
    return out;
}

struct GirthBipartite {
    std::optional<unsigned> girth;  // nullopt: acyclic
    bool bipartite = true;
};

inline GirthBipartite girth_bipartite(const IntersectionGraph& g) {
    GirthBipartite out;
    unsigned best = 0;
    bool found = false;
    // shortest cycle through BFS from every vertex
    for (unsigned s = 0; s < g.n; ++s) {
        std::vector<int> dist(g.n, -1), par(g.n, -1);
        dist[s] = 0;
        std::deque<unsigned> q{s};
        while (!q.empty()) {
            const unsigned v = q.front();
            q.pop_front();
            for (int to : g.neighbors[v]) {
                if (dist[to] == -1) {
                    dist[to] = dist[v] + 1;
                    par[to] = static_cast<int>(v);
                    q.push_back(static_cast<unsigned>(to));
                } else if (par[v] != to) {
                    const unsigned len = static_cast<unsigned>(dist[v] + dist[to] + 1);
                    if (!found || len < best) { best = len; found = true; }
                }
            }
        }
    }
    if (found) out.girth = best;
    // 2-coloring
    std::vector<int> color(g.n, -1);
    for (unsigned s = 0; s < g.n && out.bipartite; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::deque<unsigned> q{s};
        while (!q.empty() && out.bipartite) {
            const unsigned v = q.front();
            q.pop_front();
            for (int to : g.neighbors[v]) {
                if (color[to] == -1) {
                    color[to] = 1 - color[v];
                    q.push_back(static_cast<unsigned>(to));
                } else if (color[to] == color[v]) {
                    out.bipartite = false;
                    break;
                }
            }
        }
    }
    return out;
}

namespace detail {

inline uint64_t closed_neighborhood_mask(const IntersectionGraph& g, unsigned v) {
    uint64_t m = uint64_t{1} << v;
    for (int to : g.neighbors[v]) m |= uint64_t{1} << to;
    return m;
}

}  // namespace detail

// Exact minimum dominating set by branch and bound over the vertex whose
// closed neighborhood is hardest to cover. Every isolated vertex is forced
// into the set (an edgeless graph is dominated only by all of its vertices).
inline std::optional<std::vector<unsigned>> min_dominating_set(const IntersectionGraph& g) {
    if (g.n > kMaxSolverVertices) return std::nullopt;
    if (g.n == 0) return std::vector<unsigned>{};
    const uint64_t all = (g.n == 64) ? ~uint64_t{0} : ((uint64_t{1} << g.n) - 1);
    std::vector<uint64_t> nbh(g.n);
    for (unsigned v = 0; v < g.n; ++v) nbh[v] = detail::closed_neighborhood_mask(g, v);

    // greedy upper bound
    std::vector<unsigned> best;
    {
        uint64_t covered = 0;
        while (covered != all) {
            unsigned pick = 0;
            int gain = -1;
            for (unsigned v = 0; v < g.n; ++v) {
                const int add = __builtin_popcountll(nbh[v] & ~covered);
                if (add > gain) { gain = add; pick = v; }
            }
            best.push_back(pick);
            covered |= nbh[pick];
        }
        std::sort(best.begin(), best.end());
    }

    unsigned max_cover = 1;
    for (unsigned v = 0; v < g.n; ++v)
        max_cover = std::max(max_cover, static_cast<unsigned>(__builtin_popcountll(nbh[v])));

    std::vector<unsigned> current;
    const auto bb = [&](auto&& self, uint64_t covered) -> void {
        if (covered == all) {
            if (current.size() < best.size()) {
                best = current;
                std::sort(best.begin(), best.end());
            }
            return;
        }
        const unsigned uncovered = static_cast<unsigned>(__builtin_popcountll(all & ~covered));
        if (current.size() + (uncovered + max_cover - 1) / max_cover >= best.size()) return;
        // first uncovered vertex; some dominator must come from its closed
        // neighborhood
        unsigned v = 0;
        while (covered >> v & 1) ++v;
        for (unsigned u : [&] {
                 std::vector<unsigned> cands{v};
                 for (int to : g.neighbors[v]) cands.push_back(static_cast<unsigned>(to));
                 return cands;
             }()) {
            current.push_back(u);
            self(self, covered | nbh[u]);
            current.pop_back();
        }
    };
    bb(bb, 0);
    return best;
}

// Exact chromatic number: DSATUR-ordered backtracking, deepening on the
// color count from a clique lower bound to the greedy upper bound.
inline std::optional<unsigned> chromatic_number(const IntersectionGraph& g);

// Exact maximum clique: branch and bound with a greedy-coloring bound.
inline std::optional<unsigned> max_clique(const IntersectionGraph& g) {
    if (g.n > kMaxSolverVertices) return std::nullopt;
    if (g.n == 0) return 0u;
    unsigned best = 0;
    std::vector<unsigned> order(g.n);
    for (unsigned i = 0; i < g.n; ++i) order[i] = i;
    const auto expand = [&](auto&& self, const std::vector<unsigned>& cand, unsigned size) -> void {
        if (cand.empty()) {
            best = std::max(best, size);
            return;
        }
        // greedy coloring bound on the candidate set
        std::vector<unsigned> color(cand.size(), 0);
        unsigned colors_used = 0;
        for (size_t i = 0; i < cand.size(); ++i) {
            uint64_t banned = 0;
            for (size_t j = 0; j < i; ++j)
                if (g.adjacent(cand[i], cand[j])) banned |= uint64_t{1} << color[j];
            unsigned c = 0;
            while (banned >> c & 1) ++c;
            color[i] = c;
            colors_used = std::max(colors_used, c + 1);
        }
        if (size + colors_used <= best) return;
        // branch on candidates in reverse color order (highest color first)
        std::vector<size_t> idx(cand.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return color[a] > color[b]; });
        for (size_t pos : idx) {
            if (size + color[pos] + 1 <= best) return;
            const unsigned v = cand[pos];
            std::vector<unsigned> next;
            for (unsigned u : cand)
                if (u != v && g.adjacent(u, v)) next.push_back(u);
            self(self, next, size + 1);
        }
    };
    expand(expand, order, 0);
    return best;
}

inline std::optional<unsigned> chromatic_number(const IntersectionGraph& g) {
    if (g.n > kMaxSolverVertices) return std::nullopt;
    if (g.n == 0) return 0u;
    if (g.edge_count == 0) return 1u;

    const unsigned lower = *max_clique(g);
    // DSATUR greedy upper bound and ordering
    const auto dsatur_greedy = [&]() -> unsigned {
        std::vector<int> color(g.n, -1);
        for (unsigned step = 0; step < g.n; ++step) {
            int pick = -1;
            int best_sat = -1, best_deg = -1;
            for (unsigned v = 0; v < g.n; ++v) {
                if (color[v] != -1) continue;
                uint64_t sat = 0;
                for (int to : g.neighbors[v])
                    if (color[to] != -1) sat |= uint64_t{1} << color[to];
                const int s = __builtin_popcountll(sat);
                const int d = static_cast<int>(g.degree(v));
                if (s > best_sat || (s == best_sat && d > best_deg)) {
                    best_sat = s;
                    best_deg = d;
                    pick = static_cast<int>(v);
                }
            }
            uint64_t banned = 0;
            for (int to : g.neighbors[pick])
                if (color[to] != -1) banned |= uint64_t{1} << color[to];
            unsigned c = 0;
            while (banned >> c & 1) ++c;
            color[pick] = static_cast<int>(c);
        }
        unsigned used = 0;
        for (unsigned v = 0; v < g.n; ++v) used = std::max(used, static_cast<unsigned>(color[v]) + 1);
        return used;
    };
    const unsigned upper = dsatur_greedy();

    // feasibility of a k-coloring by DSATUR-ordered backtracking
    const auto colorable = [&](unsigned k) -> bool {
        std::vector<int> color(g.n, -1);
        const auto rec = [&](auto&& self, unsigned colored, unsigned used) -> bool {
            if (colored == g.n) return true;
            int pick = -1, best_sat = -1, best_deg = -1;
            for (unsigned v = 0; v < g.n; ++v) {
                if (color[v] != -1) continue;
                uint64_t sat = 0;
                for (int to : g.neighbors[v])
                    if (color[to] != -1) sat |= uint64_t{1} << color[to];
                const int s = __builtin_popcountll(sat);
                const int d = static_cast<int>(g.degree(v));
                if (s > best_sat || (s == best_sat && (d > best_deg ||
                                                       (d == best_deg && (pick == -1 || v < static_cast<unsigned>(pick)))))) {
                    best_sat = s;
                    best_deg = d;
                    pick = static_cast<int>(v);
                }
            }
            uint64_t banned = 0;
            for (int to : g.neighbors[pick])
                if (color[to] != -1) banned |= uint64_t{1} << color[to];
            const unsigned limit = std::min(k, used + 1);  // one fresh color at most
            for (unsigned c = 0; c < limit; ++c) {
                if (banned >> c & 1) continue;
                color[pick] = static_cast<int>(c);
                if (self(self, colored + 1, std::max(used, c + 1))) return true;
                color[pick] = -1;
            }
            return false;
        };
        return rec(rec, 0, 0);
    };

    for (unsigned k = lower; k < upper; ++k)
        if (colorable(k)) return k;
    return upper;
}

// Planarity decision within the size cap; nullopt = skipped.
inline std::optional<bool> graph_is_planar(const IntersectionGraph& g) {
    if (g.n > kMaxPlanarVertices) return std::nullopt;
    std::vector<std::pair<unsigned, unsigned>> edges;
    for (unsigned u = 0; u < g.n; ++u)
        for (int v : g.neighbors[u])
            if (u < static_cast<unsigned>(v)) edges.emplace_back(u, static_cast<unsigned>(v));
    return is_planar_graph(g.n, edges);
}

// Lemma-style lift of a dominating set of G(U) to one of G(V): pick a maximal
// W with W meet U = 0 and send T to T + W. The result is verified to dominate
// before it is returned.
inline std::vector<Submodule> lift_dominating_set(const SubmoduleLattice& L, const Submodule& U,
                                                  const std::vector<Submodule>& A) {
    const ModuleSpec& V = L.ambient;
    if (U.length == 0) throw std::invalid_argument("lift needs a nonzero submodule");
    const size_t u = L.find(U);
    bool has_proper_part = false;
    for (size_t i = 0; i < L.size() && !has_proper_part; ++i)
        has_proper_part = i != L.zero_index && i != u && L.ge(u, i);
    if (!has_proper_part) throw std::invalid_argument("lift needs a non-simple submodule");
    // maximal element of {X : X meet U = 0}, by exhaustive scan
    std::vector<size_t> disjoint;
    for (size_t i = 0; i < L.size(); ++i)
        if (meet(V, L.members[i], U).length == 0) disjoint.push_back(i);
    size_t w_index = L.zero_index;
    for (size_t i : disjoint) {
        bool maximal = true;
        for (size_t j : disjoint)
            if (j != i && L.ge(j, i)) { maximal = false; break; }
        if (maximal) { w_index = i; break; }
    }
    const Submodule& W = L.members[w_index];
    std::map<std::string, Submodule> lifted;
    for (const Submodule& T : A) {
        Submodule sum = join(V, T, W);
        lifted.emplace(sum.key(), std::move(sum));
    }
    // verify domination of G(V) directly
    for (size_t i = 0; i < L.size(); ++i) {
        if (i == L.zero_index || i == L.full_index) continue;
        bool dominated = lifted.count(L.members[i].key()) != 0;
        for (const auto& [k, D] : lifted)
            dominated = dominated || meet(V, L.members[i], D).length > 0;
        if (!dominated) throw std::logic_error("lifted set fails to dominate");
    }
    std::vector<Submodule> out;
    for (auto& [k, s] : lifted) out.push_back(std::move(s));
    return out;
}

}  // namespace modlat
