// Acceptance suite: runs every acceptance criterion exactly as stated and
// prints one PASS/FAIL line per criterion. Exits nonzero on any failure.

#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "modlat/harness.hpp"

using namespace modlat;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
                detail.empty() ? "" : " — ", detail.c_str());
    if (!ok) ++failures;
}

ModuleSpec zmod(std::vector<unsigned> moduli) {
    return ModuleSpec::explicit_module({std::move(moduli), {}});
}
ModuleSpec homogeneous(unsigned n, unsigned q) {
    return ModuleSpec::semisimple({{"S", n, Field::of_size(q)}});
}
ModuleSpec s2t_f2() {
    return ModuleSpec::semisimple({{"S", 2, field_make(2)}, {"T", 1, field_make(2)}});
}
ModuleSpec st_f2() {
    return ModuleSpec::semisimple({{"S", 1, field_make(2)}, {"T", 1, field_make(2)}});
}
ModuleSpec s2tu_f2() {
    return ModuleSpec::semisimple(
        {{"S", 2, field_make(2)}, {"T", 1, field_make(2)}, {"U", 1, field_make(2)}});
}

}  // namespace

int main() {
    criterion(1, "maximal-count formula vs brute force, d in {2,3}, n in 1..4", [](std::string& d) {
        bool ok = true;
        std::ostringstream out;
        for (unsigned q : {2u, 3u})
            for (unsigned n = 1; n <= 4; ++n) {
                const ModuleSpec V = homogeneous(n, q);
                const BigUint formula = count_maximal_homogeneous(n, q);
                const size_t scan = radical_and_maximals(V).second.size();
                ok = ok && formula == BigUint{scan};
                if (q == 2 && n == 3) {
                    ok = ok && formula == BigUint{7};
                    out << "(d=2,n=3) -> " << scan;
                }
            }
        d = out.str();
        return ok;
    });

    criterion(2, "maximal count of 2S+T over F_2 is 4 by formula and scan", [](std::string& d) {
        const ModuleSpec V = s2t_f2();
        const BigUint formula = count_maximal(V);
        const size_t scan = radical_and_maximals(V).second.size();
        d = "formula " + formula.str() + ", scan " + std::to_string(scan);
        return formula == BigUint{4} && scan == 4;
    });

    criterion(3, "strata of F_2^4 are [1,15,35,15,1]", [](std::string& d) {
        const std::vector<size_t> want{1, 15, 35, 15, 1};
        std::ostringstream out;
        bool ok = true;
        for (unsigned i = 0; i <= 4; ++i) {
            const size_t got = enumerate_subspaces(field_make(2), 4, i).size();
            ok = ok && got == want[i] &&
                 gaussian_binomial(4, i, 2) == BigUint{got};
            out << (i ? "," : "[") << got;
        }
        d = out.str() + "]";
        return ok;
    });

    criterion(4, "intersection-profile counts for n=3, d=2, all (j,i,m)", [](std::string& d) {
        const ModuleSpec V = homogeneous(3, 2);
        const SubmoduleLattice L = enumerate_submodules(V);
        for (unsigned j = 0; j <= 3; ++j)
            for (unsigned i = 0; i <= 3; ++i)
                for (unsigned m = 0; m <= std::min(i, j); ++m) {
                    if (i - m > 3 - j) continue;
                    const BigUint formula = count_intersecting(3, 2, j, i, m);
                    for (size_t u : L.strata[j]) {
                        uint64_t found = 0;
                        for (size_t w : L.strata[i])
                            if (meet(V, L.members[u], L.members[w]).length == m) ++found;
                        if (formula != BigUint{found}) {
                            d = "mismatch at (j,i,m)=(" + std::to_string(j) + "," +
                                std::to_string(i) + "," + std::to_string(m) + ")";
                            return false;
                        }
                    }
                }
        // complements specialization: d^{(n-j)j}
        for (unsigned j = 0; j <= 3; ++j) {
            const BigUint via_formula = count_intersecting(3, 2, j, 3 - j, 0);
            const BigUint power = BigUint::pow(BigUint{2}, (3 - j) * j);
            const size_t direct = complements_of(L, L.members[L.strata[j][0]]).size();
            if (via_formula != power || via_formula != BigUint{direct}) {
                d = "complement specialization fails at j=" + std::to_string(j);
                return false;
            }
        }
        d = "all profiles and the complement specialization agree";
        return true;
    });

    criterion(5, "domination numbers match the formula on the named family", [](std::string& d) {
        const std::vector<std::pair<ModuleSpec, uint64_t>> cases = {
            {zmod({4}), 1},          {st_f2(), 2},          {s2t_f2(), 2},
            {homogeneous(3, 2), 3},  {homogeneous(3, 3), 4}};
        std::ostringstream out;
        for (const auto& [V, want] : cases) {
            const SubmoduleLattice L = enumerate_submodules(V);
            const auto ds = min_dominating_set(build_graph(L));
            const ClassifierVerdicts v = classify_structure(L);
            if (!ds || ds->size() != want || v.gamma != want) {
                d = "expected " + std::to_string(want) + ", solver " +
                    (ds ? std::to_string(ds->size()) : "skipped") + ", formula " +
                    std::to_string(v.gamma);
                return false;
            }
            out << (out.str().empty() ? "" : ", ") << want;
        }
        d = "gamma = " + out.str();
        return true;
    });

    criterion(6, "chromatic number of 3S over F_2 is 7 on 14 vertices", [](std::string& d) {
        const SubmoduleLattice L = enumerate_submodules(homogeneous(3, 2));
        const IntersectionGraph g = build_graph(L);
        const auto chi = chromatic_number(g);
        d = std::to_string(g.n) + " vertices, chi " + (chi ? std::to_string(*chi) : "skipped");
        return g.n == 14 && chi == 7u;
    });

    criterion(7, "chromatic number of 2S+T+U over F_2 is 9 = 8/2 + 5", [](std::string& d) {
        const ModuleSpec V = s2tu_f2();
        const SubmoduleLattice L = enumerate_submodules(V);
        const IntersectionGraph g = build_graph(L);
        const auto chi = chromatic_number(g);
        const auto formula = chromatic_formula(V);
        d = std::to_string(g.n) + " vertices, solver " +
            (chi ? std::to_string(*chi) : "skipped") + ", formula " +
            (formula ? formula->str() : "open");
        return g.n == 18 && chi == 9u && formula && *formula == BigUint{9} &&
               L.strata[2].size() == 8 && L.strata[3].size() == 5;
    });

    criterion(8, "planarity table with clique facts matches the classifier", [](std::string& d) {
        struct Row {
            ModuleSpec V;
            bool planar;
        };
        const std::vector<Row> table = {{zmod({16}), true},         {zmod({32}), true},
                                        {zmod({64}), false},        {homogeneous(3, 2), false},
                                        {s2t_f2(), true},           {zmod({4, 2}), true}};
        for (const auto& row : table) {
            const SubmoduleLattice L = enumerate_submodules(row.V);
            const IntersectionGraph g = build_graph(L);
            const auto tested = graph_is_planar(g);
            const ClassifierVerdicts v = classify_structure(L);
            if (!tested || *tested != row.planar || v.planar != row.planar) {
                d = "planarity disagreement";
                return false;
            }
        }
        // Z/4+Z/2 carries K4 and no K5
        const SubmoduleLattice L = enumerate_submodules(zmod({4, 2}));
        const auto omega = max_clique(build_graph(L));
        const ClassifierVerdicts v = classify_structure(L);
        d = "six instances, Z/4+Z/2 omega = " + (omega ? std::to_string(*omega) : "skipped");
        return omega == 4u && !v.no_k4 && v.no_k5;
    });

    criterion(9, "section-2 structure: diameters, cut vertex, bridges", [](std::string& d) {
        const std::vector<ModuleSpec> family = {
            zmod({4}),  zmod({8}),  zmod({9}),  zmod({16}), zmod({27}),         zmod({32}),
            zmod({64}), zmod({4, 2}), st_f2(),  s2t_f2(),   homogeneous(3, 2),  s2tu_f2(),
            homogeneous(2, 2), homogeneous(3, 3)};
        for (const ModuleSpec& V : family) {
            const InvariantReport r = compute_invariants(enumerate_submodules(V));
            if (!r.diameter_le_2) {
                d = "diameter above 2";
                return false;
            }
            if (!r.cut_vertex_match.value_or(false) || !r.cut_edge_match.value_or(false)) {
                d = "cut structure disagrees with the characterization";
                return false;
            }
        }
        const InvariantReport rz = compute_invariants(enumerate_submodules(zmod({4, 2})));
        const InvariantReport r8 = compute_invariants(enumerate_submodules(zmod({8})));
        d = "Z/4+Z/2 has 1 cut vertex and 2 bridges; Z/8 has 1 bridge";
        return rz.cut_vertex_ids.size() == 1 && rz.cut_edge_ids.size() == 2 &&
               r8.cut_edge_ids.size() == 1;
    });

    criterion(10, "Goursat round trip and counts 5, 8, 4", [](std::string& d) {
        struct Row {
            ModuleSpec U, W;
            size_t count;
        };
        const std::vector<Row> rows = {{zmod({2}), zmod({2}), 5},
                                       {zmod({4}), zmod({2}), 8},
                                       {zmod({2}), zmod({3}), 4}};
        std::ostringstream out;
        for (const auto& row : rows) {
            const auto subs = enumerate_product_submodules(row.U, row.W);
            const ProductModule P = ProductModule::make(row.U, row.W);
            const SubmoduleLattice L = enumerate_submodules(P.product);
            if (subs.size() != row.count || L.size() != row.count) {
                d = "count mismatch: quintuples " + std::to_string(subs.size()) + ", closure " +
                    std::to_string(L.size());
                return false;
            }
            for (const Submodule& M : L.members) {
                const GoursatQuintuple q = quintuple_of(P, M);
                if (!(submodule_of(P, q) == M)) {
                    d = "round trip broke";
                    return false;
                }
                if (!(quintuple_of(P, submodule_of(P, q)) == q)) {
                    d = "reverse round trip broke";
                    return false;
                }
            }
            out << (out.str().empty() ? "" : ", ") << subs.size();
        }
        d = "counts " + out.str();
        return true;
    });

    criterion(11, "complement bijections and half pairings", [](std::string& d) {
        for (const ModuleSpec& V : {homogeneous(2, 2), homogeneous(3, 2), s2t_f2()}) {
            const SubmoduleLattice L = enumerate_submodules(V);
            const auto phi = complement_bijection(L);
            for (size_t i = 0; i < L.size(); ++i) {
                if (meet(V, L.members[i], L.members[phi[i]]).length != 0 ||
                    !(join(V, L.members[i], L.members[phi[i]]) == full_submodule(V))) {
                    d = "complement map violates meet/join";
                    return false;
                }
            }
        }
        const SubmoduleLattice Lst = enumerate_submodules(st_f2());
        const HalfPairing a = half_pairing(Lst, 1);
        const SubmoduleLattice Lbig = enumerate_submodules(s2tu_f2());
        const HalfPairing b = half_pairing(Lbig, 2);
        d = "pairings: S+T split 1+1, 2S+T+U split 4+4";
        return a.kind == HalfPairing::Kind::Paired && a.A.size() == 1 &&
               b.kind == HalfPairing::Kind::Paired && b.A.size() == 4 && b.B.size() == 4;
    });

    criterion(12, "property suites over the acceptance manifest", [](std::string& d) {
        const Harness h(MODLAT_MANIFEST_DIR);
        std::ostringstream out;
        bool ok = true;
        for (const char* id : {"Modularity", "Cor6.5", "Rem7.2", "Lem7.4", "Lem7.5",
                                      "Lem8.2", "Rem6.3"}) {
            const CheckReport rep = h.run_check(id, Scale::Small);
            if (!rep.passed()) {
                ok = false;
                for (const auto& r : rep.instances)
                    if (r.status == "fail") out << id << "/" << r.instance << ": " << r.detail << "; ";
            }
        }
        d = ok ? "modularity, symmetry, coloring bounds, clique bounds, lattice oracle"
               : out.str();
        return ok;
    });

    std::printf("%s: %d of 12 criteria failed\n", failures ? "RESULT" : "RESULT", failures);
    return failures ? 1 : 0;
}
