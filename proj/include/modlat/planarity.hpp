#pragma once

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

namespace modlat {

// Left-right planarity test (edge-addition family) on a simple undirected
// graph given as an edge list. Decision only, no embedding. Phase one
// orients the graph by DFS and computes lowpoints and nesting depths; phase
// two re-walks the DFS in nesting order maintaining a stack of conflict
// pairs of return-edge intervals, failing exactly when two return edges are
// forced onto the same side with interleaving lowpoints.
class LeftRightPlanarity {
public:
    LeftRightPlanarity(unsigned n, std::vector<std::pair<unsigned, unsigned>> edge_list)
        : n_(n), edges_(std::move(edge_list)) {}

    bool planar() {
        const size_t m = edges_.size();
        if (n_ <= 4 || m < 9) return true;           // smallest nonplanar graph is K5
        if (m > 3 * static_cast<size_t>(n_) - 6) return false;  // Euler bound

        build_adjacency();
        height_.assign(n_, kNone);
        lowpt_.assign(m, 0);
        lowpt2_.assign(m, 0);
        nesting_depth_.assign(m, 0);
        parent_edge_.assign(n_, kNoneE);
        oriented_.assign(m, false);
        out_.assign(m, false);
        roots_.clear();
        for (unsigned v = 0; v < n_; ++v)
            if (height_[v] == kNone) {
                height_[v] = 0;
                roots_.push_back(v);
                dfs_orient(v);
            }

        sort_adjacency_by_nesting();
        ref_.assign(m, kNoneE);
        lowpt_edge_.assign(m, kNoneE);
        stack_bottom_.assign(m, kNoneS);
        stack_.clear();
        for (unsigned r : roots_)
            if (!dfs_test(r)) return false;
        return true;
    }

private:
    static constexpr int kNone = -1;
    static constexpr int kNoneE = -1;
    static constexpr int kNoneS = -1;

    struct Interval {
        int low = kNoneE, high = kNoneE;
        bool empty() const { return low == kNoneE && high == kNoneE; }
    };
    struct ConflictPair {
        Interval L, R;
    };

    unsigned n_;
    std::vector<std::pair<unsigned, unsigned>> edges_;   // oriented during DFS1
    std::vector<std::vector<int>> adj_;                  // edge ids per vertex
    std::vector<int> height_, parent_edge_;
    std::vector<int> lowpt_, lowpt2_, nesting_depth_;
    std::vector<bool> oriented_, out_;                   // out_[e]: orientation source->target as stored
    std::vector<unsigned> roots_;
    std::vector<int> ref_, lowpt_edge_, stack_bottom_;
    std::vector<ConflictPair> stack_;

    unsigned source(int e) const { return out_[e] ? edges_[e].first : edges_[e].second; }
    unsigned target(int e) const { return out_[e] ? edges_[e].second : edges_[e].first; }

    void build_adjacency() {
        adj_.assign(n_, {});
        for (size_t e = 0; e < edges_.size(); ++e) {
            const auto [u, v] = edges_[e];
            if (u == v) throw std::invalid_argument("loops are not allowed");
            adj_[u].push_back(static_cast<int>(e));
            adj_[v].push_back(static_cast<int>(e));
        }
    }

    void dfs_orient(unsigned v) {
        const int e = parent_edge_[v];
        for (int ei : adj_[v]) {
            if (oriented_[ei]) continue;
            oriented_[ei] = true;
            out_[ei] = edges_[ei].first == v;
            const unsigned w = target(ei);
            lowpt_[ei] = height_[v];
            lowpt2_[ei] = height_[v];
            if (height_[w] == kNone) {  // tree edge
                parent_edge_[w] = ei;
                height_[w] = height_[v] + 1;
                dfs_orient(w);
            } else {  // back edge
                lowpt_[ei] = height_[w];
            }
            nesting_depth_[ei] = 2 * lowpt_[ei];
            if (lowpt2_[ei] < height_[v]) ++nesting_depth_[ei];  // chordal adjustment
            if (e != kNoneE) {
                if (lowpt_[ei] < lowpt_[e]) {
                    lowpt2_[e] = std::min(lowpt_[e], lowpt2_[ei]);
                    lowpt_[e] = lowpt_[ei];
                } else if (lowpt_[ei] > lowpt_[e]) {
                    lowpt2_[e] = std::min(lowpt2_[e], lowpt_[ei]);
                } else {
                    lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[ei]);
                }
            }
        }
    }

    void sort_adjacency_by_nesting() {
        for (unsigned v = 0; v < n_; ++v) {
            std::vector<int> outgoing;
            for (int ei : adj_[v])
                if (oriented_[ei] && source(ei) == v) outgoing.push_back(ei);
            std::sort(outgoing.begin(), outgoing.end(),
                      [&](int a, int b) { return nesting_depth_[a] < nesting_depth_[b]; });
            adj_[v] = std::move(outgoing);
        }
    }

    bool lowpt_conflicting(const Interval& i, int b) const {
        return !i.empty() && lowpt_[i.high] > lowpt_[b];
    }

    int pair_lowest(const ConflictPair& p) const {
        if (p.L.empty()) return lowpt_[p.R.low];
        if (p.R.empty()) return lowpt_[p.L.low];
        return std::min(lowpt_[p.L.low], lowpt_[p.R.low]);
    }

    bool dfs_test(unsigned v) {
        const int e = parent_edge_[v];
        for (size_t i = 0; i < adj_[v].size(); ++i) {
            const int ei = adj_[v][i];
            stack_bottom_[ei] = static_cast<int>(stack_.size());
            if (ei == parent_edge_[target(ei)]) {  // tree edge
                if (!dfs_test(target(ei))) return false;
            } else {  // back edge
                lowpt_edge_[ei] = ei;
                stack_.push_back(ConflictPair{Interval{}, Interval{ei, ei}});
            }
            if (lowpt_[ei] < height_[v]) {  // ei has a return edge
                if (i == 0) {
                    lowpt_edge_[e] = lowpt_edge_[ei];
                } else {
                    if (!add_constraints(ei, e)) return false;
                }
            }
        }
        if (e != kNoneE) {
            const unsigned u = source(e);
            trim_back_edges(u);
            if (lowpt_[e] < height_[u] && !stack_.empty()) {  // e has return edges itself
                const int hl = stack_.back().L.high;
                const int hr = stack_.back().R.high;
                if (hl != kNoneE && (hr == kNoneE || lowpt_[hl] > lowpt_[hr])) ref_[e] = hl;
                else ref_[e] = hr;
            }
        }
        return true;
    }

    bool add_constraints(int ei, int e) {
        ConflictPair p;
        // merge return edges of ei into p.R
        while (true) {
            ConflictPair q = stack_.back();
            stack_.pop_back();
            if (!q.L.empty()) std::swap(q.L, q.R);
            if (!q.L.empty()) return false;  // interleaving on both sides
            if (lowpt_[q.R.low] > lowpt_[e]) {  // merge into conflicting side
                if (p.R.empty()) p.R.high = q.R.high;
                else ref_[p.R.low] = q.R.high;
                p.R.low = q.R.low;
            } else {  // align
                ref_[q.R.low] = lowpt_edge_[e];
            }
            if (static_cast<int>(stack_.size()) == stack_bottom_[ei]) break;
        }
        // merge conflicting return edges of previous siblings into p.L
        while (!stack_.empty() &&
               (lowpt_conflicting(stack_.back().L, ei) || lowpt_conflicting(stack_.back().R, ei))) {
            ConflictPair q = stack_.back();
            stack_.pop_back();
            if (lowpt_conflicting(q.R, ei)) std::swap(q.L, q.R);
            if (lowpt_conflicting(q.R, ei)) return false;  // interleaving on both sides
            // merge q.R below lowpt(ei) into p.R, q.L into p.L
            ref_[p.R.low] = q.R.high;
            if (q.R.low != kNoneE) p.R.low = q.R.low;
            if (p.L.empty()) p.L.high = q.L.high;
            else ref_[p.L.low] = q.L.high;
            p.L.low = q.L.low;
        }
        if (!(p.L.empty() && p.R.empty())) stack_.push_back(p);
        return true;
    }

    void trim_back_edges(unsigned u) {
        // drop entire conflict pairs ending at the parent
        while (!stack_.empty() && pair_lowest(stack_.back()) == height_[u]) stack_.pop_back();
        if (stack_.empty()) return;
        ConflictPair p = stack_.back();
        stack_.pop_back();
        // trim left interval
        while (p.L.high != kNoneE && target(p.L.high) == u) p.L.high = ref_[p.L.high];
        if (p.L.high == kNoneE && p.L.low != kNoneE) {
            ref_[p.L.low] = p.R.low;
            p.L.low = kNoneE;
        }
        // trim right interval
        while (p.R.high != kNoneE && target(p.R.high) == u) p.R.high = ref_[p.R.high];
        if (p.R.high == kNoneE && p.R.low != kNoneE) {
            ref_[p.R.low] = p.L.low;
            p.R.low = kNoneE;
        }
        stack_.push_back(p);
    }
};

inline bool is_planar_graph(unsigned n, const std::vector<std::pair<unsigned, unsigned>>& edges) {
    return LeftRightPlanarity(n, edges).planar();
}

}  // namespace modlat
