#include <catch2/catch.hpp>

#include "modlat/enumerate.hpp"
#include "modlat/module.hpp"

#include <algorithm>
#include <set>

using namespace modlat;

namespace {

ModuleSpec z4z2() { return ModuleSpec::explicit_module({{4, 2}, {}}); }
ModuleSpec z8() { return ModuleSpec::explicit_module({{8}, {}}); }

ModuleSpec two_s_f2() {
    return ModuleSpec::semisimple({{"S", 2, field_make(2)}});
}
ModuleSpec two_s_one_t_f2() {
    return ModuleSpec::semisimple({{"S", 2, field_make(2)}, {"T", 1, field_make(2)}});
}

Submodule explicit_sub(const ModuleSpec& V, std::vector<std::vector<unsigned>> gens) {
    std::vector<uint32_t> enc;
    for (auto& g : gens) enc.push_back(V.presentation().encode(g));
    return make_explicit_sub(V, subgroup_normal_form(V.presentation(), enc));
}

std::set<uint32_t> element_set(const ModuleSpec& V, const Submodule& s) {
    const auto v = nf_elements(V.presentation(), s.nf);
    return {v.begin(), v.end()};
}

Submodule line(const ModuleSpec& V, size_t comp, std::vector<uint8_t> vec) {
    std::vector<FqMatrix> bases;
    for (size_t i = 0; i < V.components().size(); ++i) {
        const auto& c = V.components()[i];
        if (i == comp) {
            FqMatrix m(c.field, 1, c.mult);
            for (unsigned j = 0; j < c.mult; ++j) m.at(0, j) = vec[j];
            bases.push_back(subspace_basis(m));
        } else {
            bases.push_back(FqMatrix(c.field, 0, c.mult));
        }
    }
    return make_semisimple_sub(V, std::move(bases));
}

}  // namespace

TEST_CASE("meet is idempotent", "[module]") {
    const ModuleSpec V = z4z2();
    const Submodule a = explicit_sub(V, {{1, 0}});
    CHECK(meet(V, a, a) == a);
    CHECK(join(V, a, a) == a);
}

TEST_CASE("meet of the two cyclic order-4 subgroups of Z/4+Z/2", "[module]") {
    const ModuleSpec V = z4z2();
    const Submodule a = explicit_sub(V, {{1, 0}});
    const Submodule b = explicit_sub(V, {{1, 1}});
    // oracle: intersect the explicit 4-element sets
    std::set<uint32_t> expect;
    const auto sa = element_set(V, a), sb = element_set(V, b);
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                          std::inserter(expect, expect.begin()));
    const Submodule m = meet(V, a, b);
    CHECK(element_set(V, m) == expect);
    CHECK(m == explicit_sub(V, {{2, 0}}));
    CHECK(m.length == 1);
}

TEST_CASE("complementary lines of 2S meet in zero", "[module]") {
    const ModuleSpec V = two_s_f2();
    const Submodule a = line(V, 0, {1, 0});
    const Submodule b = line(V, 0, {0, 1});
    CHECK(meet(V, a, b) == zero_submodule(V));
    CHECK(join(V, a, b) == full_submodule(V));
}

TEST_CASE("join with zero and the socle join in Z/4+Z/2", "[module]") {
    const ModuleSpec V = z4z2();
    const Submodule a = explicit_sub(V, {{2, 0}});
    CHECK(join(V, a, zero_submodule(V)) == a);
    const Submodule s = join(V, a, explicit_sub(V, {{0, 1}}));
    CHECK(s.nf.subgroup_order == 4);
    CHECK(element_set(V, s) ==
          std::set<uint32_t>{0, V.presentation().encode({2, 0}), V.presentation().encode({0, 1}),
                             V.presentation().encode({2, 1})});
}

TEST_CASE("composition lengths", "[module]") {
    CHECK(composition_length(two_s_one_t_f2()) == 3);
    CHECK(composition_length(z8()) == 3);
    CHECK(zero_submodule(z8()).length == 0);
    // longest-chain oracle for Z/8: depth of V in its enumerated lattice
    const ModuleSpec V = z8();
    const SubmoduleLattice L = enumerate_submodules(V);
    unsigned best = 0;
    std::vector<unsigned> depth(L.size(), 0);
    for (size_t i = 0; i < L.size(); ++i) {  // members sorted by length
        for (size_t j = 0; j < L.size(); ++j)
            if (j != i && L.ge(i, j)) depth[i] = std::max(depth[i], depth[j] + 1);
        best = std::max(best, depth[i]);
    }
    CHECK(best == 3);
}

TEST_CASE("socle of a semisimple model is the module itself", "[module]") {
    const ModuleSpec V = two_s_one_t_f2();
    CHECK(socle(V) == full_submodule(V));
}

TEST_CASE("socle of Z/4+Z/2 and of Z/8", "[module]") {
    const ModuleSpec V = z4z2();
    const Submodule s = socle(V);
    CHECK(s == explicit_sub(V, {{2, 0}, {0, 1}}));
    CHECK(s.length == 2);
    const ModuleSpec W = z8();
    CHECK(socle(W) == explicit_sub(W, {{4}}));
}

TEST_CASE("structural flags", "[module]") {
    const StructuralFlags z8f = structural_flags(z8());
    CHECK(z8f.is_uniform);
    CHECK_FALSE(z8f.is_semisimple);
    CHECK_FALSE(z8f.is_simple);

    const StructuralFlags ssf = structural_flags(two_s_f2());
    CHECK_FALSE(ssf.is_uniform);
    CHECK(ssf.is_semisimple);
    CHECK_FALSE(ssf.is_simple);

    const StructuralFlags simple = structural_flags(ModuleSpec::semisimple({{"S", 1, field_make(2)}}));
    CHECK(simple.is_semisimple);
    CHECK(simple.is_simple);
    CHECK(simple.is_uniform);

    const StructuralFlags z2 = structural_flags(ModuleSpec::explicit_module({{2}, {}}));
    CHECK(z2.is_semisimple);
    CHECK(z2.is_simple);
    CHECK(z2.is_uniform);
}

TEST_CASE("cyclic submodules", "[module]") {
    const ModuleSpec V = z4z2();
    CHECK(cyclic_submodule(V, 0) == zero_submodule(V));
    const Submodule c = cyclic_submodule(V, V.presentation().encode({1, 1}));
    CHECK(element_set(V, c) ==
          std::set<uint32_t>{0, V.presentation().encode({1, 1}), V.presentation().encode({2, 0}),
                             V.presentation().encode({3, 1})});
    const ModuleSpec W = z8();
    CHECK(cyclic_submodule(W, 2).nf.subgroup_order == 4);
}

TEST_CASE("interval counts", "[module]") {
    const ModuleSpec V = z4z2();
    const SubmoduleLattice L = enumerate_submodules(V);
    CHECK(interval_count(L, full_submodule(V)) == 1);
    CHECK(interval_count(L, socle(V)) == 2);

    const ModuleSpec W = ModuleSpec::semisimple({{"S", 3, field_make(2)}});
    const SubmoduleLattice LW = enumerate_submodules(W);
    const Submodule l = line(W, 0, {1, 0, 0});
    CHECK(interval_count(LW, l) == 5);  // the interval is the subspace lattice of F_2^2
    CHECK_THROWS_AS(interval_count(L, l), std::invalid_argument);
}

TEST_CASE("lattice modularity on desk-scale lattices", "[module][property]") {
    for (const ModuleSpec& V :
         {z4z2(), z8(), two_s_one_t_f2(), ModuleSpec::explicit_module({{3, 3}, {}})}) {
        const SubmoduleLattice L = enumerate_submodules(V);
        for (size_t a = 0; a < L.size(); ++a)
            for (size_t c = 0; c < L.size(); ++c) {
                if (!L.ge(c, a)) continue;  // need A <= C
                for (size_t b = 0; b < L.size(); ++b) {
                    const Submodule lhs = join(V, L.members[a], meet(V, L.members[b], L.members[c]));
                    const Submodule rhs = meet(V, join(V, L.members[a], L.members[b]), L.members[c]);
                    REQUIRE(lhs == rhs);
                }
            }
    }
}

TEST_CASE("length is modular on semisimple models", "[module][property]") {
    const ModuleSpec V = two_s_one_t_f2();
    const SubmoduleLattice L = enumerate_submodules(V);
    for (const Submodule& a : L.members)
        for (const Submodule& b : L.members) {
            CHECK(meet(V, a, b).length + join(V, a, b).length == a.length + b.length);
        }
}

TEST_CASE("long pairs always meet", "[module][property]") {
    // l(A) + l(B) > l(V) forces a nonzero meet
    for (const ModuleSpec& V : {z4z2(), two_s_one_t_f2(), z8()}) {
        const SubmoduleLattice L = enumerate_submodules(V);
        const unsigned n = composition_length(V);
        for (const Submodule& a : L.members)
            for (const Submodule& b : L.members)
                if (a.length + b.length > n) REQUIRE(meet(V, a, b).length > 0);
    }
}

TEST_CASE("ambient mismatch is rejected", "[module]") {
    const ModuleSpec V = two_s_f2();
    const ModuleSpec W = two_s_one_t_f2();
    CHECK_THROWS_AS(meet(W, line(V, 0, {1, 0}), zero_submodule(W)), std::invalid_argument);
}
