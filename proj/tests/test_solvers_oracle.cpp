#include <catch2/catch.hpp>

#include "modlat/graph.hpp"
#include "modlat/planarity.hpp"

#include <random>

using namespace modlat;

namespace {

IntersectionGraph graph_from_edges(unsigned n, const std::vector<std::pair<unsigned, unsigned>>& edges) {
    IntersectionGraph g;
    g.n = n;
    g.member_index.assign(n, 0);
    g.adj.assign(n, std::vector<bool>(n, false));
    g.neighbors.assign(n, {});
    for (auto [u, v] : edges) {
        if (g.adj[u][v]) continue;
        g.adj[u][v] = g.adj[v][u] = true;
        g.neighbors[u].push_back(static_cast<int>(v));
        g.neighbors[v].push_back(static_cast<int>(u));
        ++g.edge_count;
    }
    for (auto& nb : g.neighbors) std::sort(nb.begin(), nb.end());
    return g;
}

unsigned brute_chromatic(const IntersectionGraph& g) {
    for (unsigned k = 1;; ++k) {
        std::vector<unsigned> color(g.n, 0);
        const auto rec = [&](auto&& self, unsigned v) -> bool {
            if (v == g.n) return true;
            for (unsigned c = 0; c < k; ++c) {
                bool ok = true;
                for (int to : g.neighbors[v])
                    if (static_cast<unsigned>(to) < v && color[to] == c) ok = false;
                if (!ok) continue;
                color[v] = c;
                if (self(self, v + 1)) return true;
            }
            return false;
        };
        if (g.n == 0) return 0;
        if (rec(rec, 0)) return k;
    }
}

unsigned brute_domination(const IntersectionGraph& g) {
    if (g.n == 0) return 0;
    for (unsigned size = 0;; ++size) {
        for (uint32_t mask = 0; mask < (1u << g.n); ++mask) {
            if (static_cast<unsigned>(__builtin_popcount(mask)) != size) continue;
            bool ok = true;
            for (unsigned v = 0; v < g.n && ok; ++v) {
                if (mask >> v & 1) continue;
                bool covered = false;
                for (int to : g.neighbors[v]) covered = covered || (mask >> to & 1);
                ok = covered;
            }
            if (ok) return size;
        }
    }
}

unsigned brute_clique(const IntersectionGraph& g) {
    unsigned best = 0;
    for (uint32_t mask = 0; mask < (1u << g.n); ++mask) {
        bool ok = true;
        for (unsigned a = 0; a < g.n && ok; ++a)
            for (unsigned b = a + 1; b < g.n && ok; ++b)
                if ((mask >> a & 1) && (mask >> b & 1) && !g.adj[a][b]) ok = false;
        if (ok) best = std::max(best, static_cast<unsigned>(__builtin_popcount(mask)));
    }
    return best;
}

// Kuratowski oracle on at most six vertices: nonplanar exactly when the
// graph holds K5, K33, or K5 with one edge subdivided once.
bool oracle_planar6(unsigned n, const std::vector<std::pair<unsigned, unsigned>>& edges) {
    REQUIRE(n <= 6);
    bool adj[6][6] = {};
    for (auto [u, v] : edges) adj[u][v] = adj[v][u] = true;
    // K5 on any 5-subset
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != 5) continue;
        std::vector<unsigned> vs;
        for (unsigned v = 0; v < n; ++v)
            if (mask >> v & 1) vs.push_back(v);
        bool complete = true;
        for (unsigned a = 0; a < 5; ++a)
            for (unsigned b = a + 1; b < 5; ++b) complete &= adj[vs[a]][vs[b]];
        if (complete) return false;
    }
    if (n == 6) {
        // K33 over the bipartitions of all six vertices
        for (uint32_t mask = 0; mask < 64; ++mask) {
            if (__builtin_popcount(mask) != 3) continue;
            std::vector<unsigned> a, b;
            for (unsigned v = 0; v < 6; ++v) (mask >> v & 1 ? a : b).push_back(v);
            bool complete = true;
            for (unsigned x : a)
                for (unsigned y : b) complete &= adj[x][y];
            if (complete) return false;
        }
        // K5 with one edge subdivided through the sixth vertex
        for (unsigned w = 0; w < 6; ++w) {
            std::vector<unsigned> branch;
            for (unsigned v = 0; v < 6; ++v)
                if (v != w) branch.push_back(v);
            for (unsigned i = 0; i < 5; ++i)
                for (unsigned j = i + 1; j < 5; ++j) {
                    if (!adj[w][branch[i]] || !adj[w][branch[j]]) continue;
                    bool rest = true;
                    for (unsigned a = 0; a < 5 && rest; ++a)
                        for (unsigned b = a + 1; b < 5 && rest; ++b) {
                            if (a == i && b == j) continue;
                            rest = adj[branch[a]][branch[b]];
                        }
                    if (rest) return false;
                }
        }
    }
    return true;
}

}  // namespace

TEST_CASE("solvers agree with brute force on random graphs", "[solvers][property]") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        const unsigned n = 1 + rng() % 9;
        std::vector<std::pair<unsigned, unsigned>> edges;
        const unsigned density = 1 + rng() % 4;
        for (unsigned a = 0; a < n; ++a)
            for (unsigned b = a + 1; b < n; ++b)
                if (rng() % 4 < density) edges.emplace_back(a, b);
        const IntersectionGraph g = graph_from_edges(n, edges);
        INFO("n=" << n << " m=" << g.edge_count << " trial=" << trial);
        CHECK(chromatic_number(g).value() == brute_chromatic(g));
        CHECK(min_dominating_set(g).value().size() == brute_domination(g));
        CHECK(max_clique(g).value() == brute_clique(g));
    }
}

TEST_CASE("planarity matches the Kuratowski oracle on every 5-vertex graph", "[solvers]") {
    for (uint32_t mask = 0; mask < (1u << 10); ++mask) {
        std::vector<std::pair<unsigned, unsigned>> edges;
        unsigned bit = 0;
        for (unsigned a = 0; a < 5; ++a)
            for (unsigned b = a + 1; b < 5; ++b, ++bit)
                if (mask >> bit & 1) edges.emplace_back(a, b);
        const bool expect = oracle_planar6(5, edges);
        INFO("edge mask " << mask);
        REQUIRE(is_planar_graph(5, edges) == expect);
    }
}

TEST_CASE("planarity matches the Kuratowski oracle on every 6-vertex graph", "[solvers]") {
    for (uint32_t mask = 0; mask < (1u << 15); ++mask) {
        std::vector<std::pair<unsigned, unsigned>> edges;
        unsigned bit = 0;
        for (unsigned a = 0; a < 6; ++a)
            for (unsigned b = a + 1; b < 6; ++b, ++bit)
                if (mask >> bit & 1) edges.emplace_back(a, b);
        const bool expect = oracle_planar6(6, edges);
        INFO("edge mask " << mask);
        REQUIRE(is_planar_graph(6, edges) == expect);
    }
}
