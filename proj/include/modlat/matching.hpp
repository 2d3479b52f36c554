#pragma once

#include <queue>
#include <vector>

namespace modlat {

// Maximum matching in a general undirected graph (blossom contraction,
// O(V^3)). Deterministic: vertices are processed in index order. Returns
// match[v] = partner index or -1.
inline std::vector<int> max_matching(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> match(n, -1), parent(n, -1), base(n);
    std::vector<bool> used(n, false), blossom(n, false);

    auto lowest_common_ancestor = [&](int a, int b) {
        std::vector<bool> visited(n, false);
        while (true) {
            a = base[a];
            visited[a] = true;
            if (match[a] == -1) break;
            a = parent[match[a]];
        }
        while (true) {
            b = base[b];
            if (visited[b]) return b;
            b = parent[match[b]];
        }
    };

    auto mark_path = [&](int v, int b, int child) {
        while (base[v] != b) {
            blossom[base[v]] = true;
            blossom[base[match[v]]] = true;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    };

    auto find_augmenting_path = [&](int root) -> int {
        std::fill(used.begin(), used.end(), false);
        std::fill(parent.begin(), parent.end(), -1);
        for (int i = 0; i < n; ++i) base[i] = i;
        used[root] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (int to : adj[v]) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
                    // odd cycle: contract the blossom
                    const int cur_base = lowest_common_ancestor(v, to);
                    std::fill(blossom.begin(), blossom.end(), false);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n; ++i)
                        if (blossom[base[i]]) {
                            base[i] = cur_base;
                            if (!used[i]) {
                                used[i] = true;
                                q.push(i);
                            }
                        }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (match[to] == -1) return to;  // augmenting path found
                    used[match[to]] = true;
                    q.push(match[to]);
                }
            }
        }
        return -1;
    };

    for (int v = 0; v < n; ++v) {
        if (match[v] != -1) continue;
        int u = find_augmenting_path(v);
        while (u != -1) {
            const int pv = parent[u];
            const int next = match[pv];
            match[u] = pv;
            match[pv] = u;
            u = next;
        }
    }
    return match;
}

inline size_t matching_size(const std::vector<int>& match) {
    size_t matched = 0;
    for (int m : match) matched += (m != -1);
    return matched / 2;
}

}  // namespace modlat
