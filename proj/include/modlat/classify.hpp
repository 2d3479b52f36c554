#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "modlat/counting.hpp"
#include "modlat/enumerate.hpp"
#include "modlat/graph.hpp"
#include "modlat/module.hpp"

namespace modlat {

// One isotypic class of a semisimple module, recovered from the lattice:
// mult copies of one simple type whose endomorphism field has end_size
// elements (undetermined when mult = 1; it is never needed then).
struct IsotypicClass {
    unsigned mult = 1;
    uint64_t num_simples = 1;
    std::optional<unsigned> end_size;
};

// Structural facts of the ambient module, derived order-theoretically so the
// same path serves both models.
struct StructuralFacts {
    unsigned length = 0;
    bool simple = false;
    bool semisimple = false;
    size_t socle_index = 0;
    unsigned socle_length = 0;
    bool socle_is_maximal = false;
    std::vector<size_t> minimal_indices;
    std::vector<size_t> maximal_indices;
    std::vector<IsotypicClass> classes;  // populated when semisimple
};

namespace detail {

// Minimal members of the interval [0, top]; these are global minimal members
// contained in top.
inline std::vector<size_t> interval_minimals(const SubmoduleLattice& L, size_t top) {
    std::vector<size_t> out;
    for (size_t i = 0; i < L.size(); ++i) {
        if (i == L.zero_index || !L.ge(top, i)) continue;
        bool minimal = true;
        for (size_t j = 0; j < L.size() && minimal; ++j)
            if (j != i && j != L.zero_index && L.ge(i, j)) minimal = false;
        if (minimal) out.push_back(i);
    }
    return out;
}

inline std::vector<size_t> interval_maximals(const SubmoduleLattice& L, size_t top) {
    std::vector<size_t> out;
    for (size_t i = 0; i < L.size(); ++i) {
        if (i == top || !L.ge(top, i)) continue;
        bool maximal = true;
        for (size_t j = 0; j < L.size() && maximal; ++j)
            if (j != i && j != top && L.ge(top, j) && L.ge(j, i)) maximal = false;
        if (maximal) out.push_back(i);
    }
    return out;
}

inline size_t join_of(const SubmoduleLattice& L, const std::vector<size_t>& members) {
    Submodule acc = zero_submodule(L.ambient);
    for (size_t i : members) acc = join(L.ambient, acc, L.members[i]);
    return L.find(acc);
}

// Facts for the interval [0, top] viewed as a module lattice of its own.
struct IntervalFacts {
    unsigned length = 0;
    uint64_t num_maximals = 0;
    uint64_t num_simples = 0;
    bool semisimple = false;
};

inline IntervalFacts interval_facts(const SubmoduleLattice& L, size_t top) {
    IntervalFacts f;
    f.length = L.members[top].length;
    const auto minimals = interval_minimals(L, top);
    f.num_simples = minimals.size();
    f.num_maximals = interval_maximals(L, top).size();
    f.semisimple = L.members[top].length == 0 || join_of(L, minimals) == top;
    return f;
}

// Solve (d^mult - 1)/(d - 1) = num_simples for d >= 2; exact or nullopt.
inline std::optional<unsigned> solve_end_size(unsigned mult, uint64_t num_simples) {
    if (mult < 2) return std::nullopt;
    for (uint64_t d = 2; d <= num_simples; ++d) {
        uint64_t sum = 0, power = 1;
        for (unsigned i = 0; i < mult; ++i) { sum += power; power *= d; }
        if (sum == num_simples) return static_cast<unsigned>(d);
        if (sum > num_simples) break;
    }
    return std::nullopt;
}

// Isotypic classes of a semisimple module: two distinct simples share a type
// exactly when their join holds a third simple.
inline std::vector<IsotypicClass> isotypic_classes(const SubmoduleLattice& L,
                                                   const std::vector<size_t>& minimals) {
    const size_t m = minimals.size();
    std::vector<size_t> parent(m);
    for (size_t i = 0; i < m; ++i) parent[i] = i;
    const auto find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) {
            const size_t jn = L.join_index(minimals[i], minimals[j]);
            unsigned inside = 0;
            for (size_t k : minimals) inside += L.ge(jn, k);
            if (inside >= 3 && find(i) != find(j)) parent[find(i)] = find(j);
        }
    std::map<size_t, std::vector<size_t>> groups;
    for (size_t i = 0; i < m; ++i) groups[find(i)].push_back(minimals[i]);
    std::vector<IsotypicClass> out;
    for (const auto& [root, members] : groups) {
        IsotypicClass c;
        c.num_simples = members.size();
        c.mult = L.members[join_of(L, members)].length;
        c.end_size = solve_end_size(c.mult, c.num_simples);
        out.push_back(c);
    }
    std::sort(out.begin(), out.end(), [](const IsotypicClass& a, const IsotypicClass& b) {
        if (a.mult != b.mult) return a.mult > b.mult;
        return a.num_simples > b.num_simples;
    });
    return out;
}

}  // namespace detail

inline StructuralFacts derive_facts(const SubmoduleLattice& L) {
    StructuralFacts f;
    f.length = composition_length(L.ambient);
    f.simple = L.size() == 2;
    f.minimal_indices = detail::interval_minimals(L, L.full_index);
    f.maximal_indices = detail::interval_maximals(L, L.full_index);
    f.socle_index = detail::join_of(L, f.minimal_indices);
    f.socle_length = L.members[f.socle_index].length;
    f.semisimple = f.socle_index == L.full_index;
    if (f.socle_index != L.full_index) {
        bool maximal = true;
        for (size_t j = 0; j < L.size() && maximal; ++j)
            if (j != f.socle_index && j != L.full_index && L.ge(j, f.socle_index))
                maximal = false;
        f.socle_is_maximal = maximal;
    }
    if (f.semisimple) {
        if (L.ambient.is_semisimple_model()) {
            for (const auto& c : L.ambient.components()) {
                IsotypicClass cls;
                cls.mult = c.mult;
                cls.num_simples = count_maximal_homogeneous(c.mult, c.field.q()).to_uint64();
                cls.end_size = c.field.q();
                f.classes.push_back(cls);
            }
            std::sort(f.classes.begin(), f.classes.end(),
                      [](const IsotypicClass& a, const IsotypicClass& b) {
                          if (a.mult != b.mult) return a.mult > b.mult;
                          return a.num_simples > b.num_simples;
                      });
        } else {
            f.classes = detail::isotypic_classes(L, f.minimal_indices);
        }
    }
    return f;
}

// Per-theorem structural predictions about the intersection graph, evaluated
// without looking at the graph itself.
struct ClassifierVerdicts {
    bool edgeless = false;                       // length <= 2
    std::optional<bool> connected;               // undefined for a simple module
    bool has_cut_vertex = false;                 // socle = two simples, maximal
    std::optional<size_t> cut_vertex_member;     // the socle, when predicted
    std::vector<size_t> bridge_simple_members;   // simples inside a unique maximal
    bool has_cut_edge = false;                   // length 3 + such a simple
    bool acyclic = false;                        // no cycles <=> no triangles <=> bipartite
    bool no_k3 = false, no_k4 = false, no_k5 = false;
    bool planar = false;                         // exactly the no-K5 conditions
    uint64_t gamma = 0;
    bool chi_applicable = false;                 // semisimple of length > 2
    bool chi_open_case = false;                  // all multiplicities even
    std::optional<BigUint> chi;
};

inline ClassifierVerdicts classify_structure(const SubmoduleLattice& L) {
    const StructuralFacts f = derive_facts(L);
    ClassifierVerdicts v;
    const unsigned n = f.length;
    const uint64_t fm = f.maximal_indices.size();

    v.edgeless = n <= 2;
    if (!f.simple) v.connected = !f.semisimple || n >= 3;

    v.has_cut_vertex = f.socle_length == 2 && f.socle_is_maximal && !f.semisimple;
    if (v.has_cut_vertex) v.cut_vertex_member = f.socle_index;

    if (n == 3) {
        for (size_t s : f.minimal_indices) {
            unsigned above = 0;
            for (size_t mx : f.maximal_indices) above += L.ge(mx, s);
            if (above == 1) v.bridge_simple_members.push_back(s);
        }
    }
    v.has_cut_edge = !v.bridge_simple_members.empty();

    v.no_k3 = n <= 2 || (n == 3 && fm == 1);
    v.acyclic = v.no_k3;

    const auto facts_of = [&](size_t top) { return detail::interval_facts(L, top); };

    // no K4
    v.no_k4 = false;
    if (n <= 2) v.no_k4 = true;
    else if (n == 3 && !f.semisimple && fm <= 2) v.no_k4 = true;
    else if (n == 3 && f.semisimple && f.classes.size() == 3) v.no_k4 = true;
    else if (n == 4 && fm == 1) {
        const auto j = facts_of(f.maximal_indices[0]);
        if (j.num_maximals == 1) v.no_k4 = true;
    }

    // no K5
    v.no_k5 = false;
    if (n <= 2) v.no_k5 = true;
    else if (n == 3 && !f.semisimple && fm <= 3) v.no_k5 = true;
    else if (n == 3 && f.semisimple && f.classes.size() == 3) v.no_k5 = true;
    else if (n == 3 && f.semisimple && f.classes.size() == 2 && f.classes[0].mult == 2 &&
             f.classes[1].mult == 1 && f.classes[0].end_size == 2u)
        v.no_k5 = true;
    else if (n == 4 && fm == 1) {
        const auto j = facts_of(f.maximal_indices[0]);
        if (j.num_maximals <= 2) v.no_k5 = true;
        else if (j.semisimple && j.length == 3 && j.num_maximals == 3) v.no_k5 = true;
    } else if (n == 4 && fm == 2) {
        const auto j1 = facts_of(f.maximal_indices[0]);
        const auto j2 = facts_of(f.maximal_indices[1]);
        if (j1.num_maximals == 1 && j2.num_maximals == 1) v.no_k5 = true;
    } else if (n == 5 && fm == 1) {
        const auto j1 = facts_of(f.maximal_indices[0]);
        if (j1.num_maximals == 1) {
            const auto j1_max = detail::interval_maximals(L, f.maximal_indices[0]);
            const auto j2 = facts_of(j1_max[0]);
            if (j2.num_maximals == 1) v.no_k5 = true;
        }
    }

    v.planar = v.no_k5;

    DominationFacts df;
    df.is_simple = f.simple;
    df.is_semisimple = f.semisimple;
    df.homogeneous = f.semisimple && f.classes.size() == 1;
    if (df.homogeneous && !f.simple) {
        if (!f.classes[0].end_size)
            throw std::logic_error("homogeneous class without a derivable endomorphism size");
        df.end_size = *f.classes[0].end_size;
    }
    v.gamma = domination_formula(df);

    if (f.semisimple && n > 2) {
        v.chi_applicable = true;
        // synthesize per-class data; a multiplicity-1 class never consults its
        // endomorphism size, so a placeholder field is sound there
        std::vector<SemisimpleComponent> comps;
        for (size_t i = 0; i < f.classes.size(); ++i) {
            const unsigned q = f.classes[i].end_size ? *f.classes[i].end_size : 2;
            comps.push_back({"C" + std::to_string(i), f.classes[i].mult, Field::of_size(q)});
        }
        const ModuleSpec synthetic = ModuleSpec::semisimple(comps);
        v.chi = chromatic_formula(synthetic);
        v.chi_open_case = !v.chi.has_value();
    }
    return v;
}

// Upper bound on the chromatic number for a module with a proper nonzero
// socle: chi(G(Soc V)) + (n-2) chi(Gt) + m - 1, where Gt is the subgraph of
// G(Soc V) induced by the socles of submodules incomparable with Soc V,
// n bounds the submodule count above any simple and m counts submodules
// above the socle.
inline uint64_t chromatic_upper_bound(const SubmoduleLattice& L) {
    if (L.ambient.is_semisimple_model())
        throw std::invalid_argument("bound needs a module with a proper socle");
    const StructuralFacts f = derive_facts(L);
    if (f.semisimple) throw std::invalid_argument("bound needs a module with a proper socle");
    const size_t soc = f.socle_index;

    const auto induced = [&](const std::vector<size_t>& members) {
        IntersectionGraph g;
        g.member_index = members;
        g.n = static_cast<unsigned>(members.size());
        g.adj.assign(g.n, std::vector<bool>(g.n, false));
        g.neighbors.assign(g.n, {});
        for (unsigned a = 0; a < g.n; ++a)
            for (unsigned b = a + 1; b < g.n; ++b) {
                if (meet(L.ambient, L.members[members[a]], L.members[members[b]]).length > 0) {
                    g.adj[a][b] = g.adj[b][a] = true;
                    g.neighbors[a].push_back(static_cast<int>(b));
                    g.neighbors[b].push_back(static_cast<int>(a));
                    ++g.edge_count;
                }
            }
        return g;
    };

    // proper nonzero submodules of the socle
    std::vector<size_t> socle_vertices;
    for (size_t i = 0; i < L.size(); ++i)
        if (i != L.zero_index && i != soc && L.ge(soc, i)) socle_vertices.push_back(i);
    const std::optional<unsigned> chi_soc = chromatic_number(induced(socle_vertices));
    if (!chi_soc) throw BoundExceeded("socle graph exceeds the solver cap");

    // socles of submodules incomparable with the socle
    std::set<size_t> tilde_set;
    for (size_t i = 0; i < L.size(); ++i) {
        if (L.ge(soc, i) || L.ge(i, soc)) continue;
        tilde_set.insert(L.find(meet(L.ambient, L.members[i], L.members[soc])));
    }
    const std::vector<size_t> tilde(tilde_set.begin(), tilde_set.end());
    const std::optional<unsigned> chi_tilde = chromatic_number(induced(tilde));
    if (!chi_tilde) throw BoundExceeded("induced socle graph exceeds the solver cap");

    uint64_t n_bound = 0;
    for (size_t s : f.minimal_indices)
        n_bound = std::max(n_bound, interval_count(L, L.members[s]));
    const uint64_t m = interval_count(L, L.members[soc]);
    return *chi_soc + (n_bound - 2) * *chi_tilde + m - 1;
}

// Full invariant report: solver results, classifier verdicts, and the
// agreement between them. Every solver field is optional; nullopt means the
// size cap skipped it, never a guess.
struct InvariantReport {
    unsigned vertices = 0;
    size_t edges = 0;
    unsigned components = 0;
    std::vector<unsigned> diameters;
    bool diameter_le_2 = true;
    std::vector<unsigned> cut_vertex_ids;
    std::vector<std::pair<unsigned, unsigned>> cut_edge_ids;
    std::optional<unsigned> girth;
    bool bipartite = true;
    std::optional<uint64_t> gamma;
    std::optional<unsigned> chi;
    std::optional<unsigned> omega;
    std::optional<bool> planar;
    ClassifierVerdicts verdicts;

    // solver-vs-structure agreement; nullopt when a side was skipped or the
    // statement does not apply
    std::optional<bool> edgeless_match, connected_match, cut_vertex_match, cut_edge_match,
        girth_match, bipartite_match, gamma_match, chi_match, k3_match, k4_match, k5_match,
        planar_match;
};

inline InvariantReport compute_invariants(const SubmoduleLattice& L) {
    InvariantReport r;
    const IntersectionGraph g = build_graph(L);
    r.vertices = g.n;
    r.edges = g.edge_count;
    const auto cd = components_and_diameter(g);
    r.components = cd.component_count;
    r.diameters = cd.diameters;
    for (unsigned d : r.diameters) r.diameter_le_2 &= d <= 2;
    r.cut_vertex_ids = cut_vertices(g);
    r.cut_edge_ids = cut_edges(g);
    const auto gb = girth_bipartite(g);
    r.girth = gb.girth;
    r.bipartite = gb.bipartite;
    if (const auto ds = min_dominating_set(g)) r.gamma = ds->size();
    r.chi = chromatic_number(g);
    r.omega = max_clique(g);
    r.planar = graph_is_planar(g);
    r.verdicts = classify_structure(L);

    r.edgeless_match = (r.edges == 0) == r.verdicts.edgeless;
    if (r.verdicts.connected.has_value() && g.n > 0)
        r.connected_match = (r.components <= 1) == *r.verdicts.connected;

    // cut vertices: predicted set is {socle} or empty
    {
        std::vector<size_t> actual;
        for (unsigned v : r.cut_vertex_ids) actual.push_back(g.member_index[v]);
        std::vector<size_t> predicted;
        if (r.verdicts.cut_vertex_member) predicted.push_back(*r.verdicts.cut_vertex_member);
        r.cut_vertex_match = actual == predicted;
    }
    // cut edges: predicted are exactly the edges incident to the flagged simples
    {
        std::set<std::pair<unsigned, unsigned>> predicted;
        for (size_t s : r.verdicts.bridge_simple_members) {
            unsigned sv = 0;
            bool found = false;
            for (unsigned v = 0; v < g.n; ++v)
                if (g.member_index[v] == s) { sv = v; found = true; break; }
            if (!found) continue;
            for (int to : g.neighbors[sv])
                predicted.emplace(std::min(sv, static_cast<unsigned>(to)),
                                  std::max(sv, static_cast<unsigned>(to)));
        }
        const std::set<std::pair<unsigned, unsigned>> actual(r.cut_edge_ids.begin(),
                                                             r.cut_edge_ids.end());
        r.cut_edge_match = actual == predicted;
    }
    r.girth_match = r.verdicts.acyclic ? !r.girth.has_value() : r.girth == 3u;
    r.bipartite_match = r.bipartite == r.verdicts.acyclic;
    if (r.gamma) r.gamma_match = *r.gamma == r.verdicts.gamma;
    if (r.chi && r.verdicts.chi_applicable && r.verdicts.chi)
        r.chi_match = BigUint{*r.chi} == *r.verdicts.chi;
    if (r.omega) {
        r.k3_match = (*r.omega <= 2) == r.verdicts.no_k3;
        r.k4_match = (*r.omega <= 3) == r.verdicts.no_k4;
        r.k5_match = (*r.omega <= 4) == r.verdicts.no_k5;
    }
    if (r.planar) r.planar_match = *r.planar == r.verdicts.planar;
    return r;
}

}  // namespace modlat
