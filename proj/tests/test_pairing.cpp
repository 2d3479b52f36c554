#include <catch2/catch.hpp>

#include "modlat/pairing.hpp"

using namespace modlat;

namespace {

ModuleSpec nS(unsigned n, unsigned q) { return ModuleSpec::semisimple({{"S", n, Field::of_size(q)}}); }

void check_complement_map(const ModuleSpec& V) {
    const SubmoduleLattice L = enumerate_submodules(V);
    const std::vector<size_t> phi = complement_bijection(L);
    const unsigned n = composition_length(V);
    std::vector<bool> hit(L.size(), false);
    for (size_t i = 0; i < L.size(); ++i) {
        const Submodule& x = L.members[i];
        const Submodule& y = L.members[phi[i]];
        CHECK(meet(V, x, y).length == 0);
        CHECK(join(V, x, y) == full_submodule(V));
        CHECK(x.length + y.length == n);
        CHECK_FALSE(hit[phi[i]]);
        hit[phi[i]] = true;
    }
}

}  // namespace

TEST_CASE("complement bijection pins zero to V", "[pairing]") {
    const ModuleSpec V = nS(2, 2);
    const SubmoduleLattice L = enumerate_submodules(V);
    const auto phi = complement_bijection(L);
    CHECK(phi[L.zero_index] == L.full_index);
    CHECK(phi[L.full_index] == L.zero_index);
}

TEST_CASE("complement bijection pairs the three lines of 2S over F_2", "[pairing]") {
    const ModuleSpec V = nS(2, 2);
    const SubmoduleLattice L = enumerate_submodules(V);
    const auto phi = complement_bijection(L);
    for (size_t i : L.strata[1]) {
        CHECK(phi[i] != i);
        CHECK(L.members[phi[i]].length == 1);
        CHECK(meet(V, L.members[i], L.members[phi[i]]).length == 0);
    }
}

TEST_CASE("complement bijection on 3S over F_2 maps lines onto planes", "[pairing]") {
    const ModuleSpec V = nS(3, 2);
    const SubmoduleLattice L = enumerate_submodules(V);
    const auto phi = complement_bijection(L);
    std::set<size_t> plane_images;
    for (size_t i : L.strata[1]) {
        CHECK(L.members[phi[i]].length == 2);
        plane_images.insert(phi[i]);
    }
    CHECK(plane_images.size() == L.strata[2].size());
    check_complement_map(V);
}

TEST_CASE("complement bijection properties on the acceptance family", "[pairing][property]") {
    check_complement_map(nS(2, 2));
    check_complement_map(nS(3, 2));
    check_complement_map(nS(2, 3));
    check_complement_map(ModuleSpec::semisimple({{"S", 2, field_make(2)}, {"T", 1, field_make(2)}}));
    check_complement_map(ModuleSpec::semisimple(
        {{"S", 2, field_make(2)}, {"T", 1, field_make(2)}, {"U", 1, field_make(2)}}));
    check_complement_map(ModuleSpec::semisimple({{"S", 2, field_make(2)}, {"T", 2, field_make(2)}}));
}

TEST_CASE("half pairing with distinct simple types", "[pairing]") {
    const ModuleSpec V = ModuleSpec::semisimple({{"S", 1, field_make(2)}, {"T", 1, field_make(3)}});
    const SubmoduleLattice L = enumerate_submodules(V);
    const HalfPairing hp = half_pairing(L, 1);
    REQUIRE(hp.kind == HalfPairing::Kind::Paired);
    REQUIRE(hp.A.size() == 1);
    REQUIRE(hp.B.size() == 1);
    const size_t a = hp.A[0], b = hp.alpha.at(hp.A[0]);
    CHECK(meet(V, L.members[a], L.members[b]).length == 0);
}

TEST_CASE("half pairing of 2S over F_2 excludes one line", "[pairing]") {
    const ModuleSpec V = nS(2, 2);
    const SubmoduleLattice L = enumerate_submodules(V);
    const HalfPairing hp = half_pairing(L, 1);
    REQUIRE(hp.kind == HalfPairing::Kind::ExcludedVertex);
    REQUIRE(hp.excluded.has_value());
    CHECK(hp.A.size() == 1);
    CHECK(hp.B.size() == 1);
    CHECK(meet(V, L.members[hp.A[0]], L.members[hp.alpha.at(hp.A[0])]).length == 0);
}

TEST_CASE("half pairing of 2S+T+U over F_2 splits 8 into 4+4", "[pairing]") {
    const ModuleSpec V = ModuleSpec::semisimple(
        {{"S", 2, field_make(2)}, {"T", 1, field_make(2)}, {"U", 1, field_make(2)}});
    const SubmoduleLattice L = enumerate_submodules(V);
    const HalfPairing hp = half_pairing(L, 2);
    REQUIRE(hp.kind == HalfPairing::Kind::Paired);
    CHECK(hp.A.size() == 4);
    CHECK(hp.B.size() == 4);
    CHECK(L.strata[2].size() == 8);
    for (size_t a : hp.A) {
        const size_t b = hp.alpha.at(a);
        CHECK(meet(V, L.members[a], L.members[b]).length == 0);
        CHECK(std::find(hp.B.begin(), hp.B.end(), b) != hp.B.end());
    }
}

TEST_CASE("half pairing with all multiplicities even but an odd d", "[pairing]") {
    // 2S over F_3 + 2T over F_2: n = 4, k = 2; the F_3 component drives the split
    const ModuleSpec V = ModuleSpec::semisimple({{"S", 2, field_make(3)}, {"T", 2, field_make(2)}});
    const SubmoduleLattice L = enumerate_submodules(V);
    const HalfPairing hp = half_pairing(L, 2);
    REQUIRE(hp.kind == HalfPairing::Kind::Paired);
    CHECK(hp.A.size() == hp.B.size());
    CHECK(hp.A.size() + hp.B.size() == L.strata[2].size());
    std::set<size_t> b_used;
    for (size_t a : hp.A) {
        const size_t b = hp.alpha.at(a);
        CHECK(meet(V, L.members[a], L.members[b]).length == 0);
        CHECK(b_used.insert(b).second);
    }
}

TEST_CASE("half pairing open case is reported unsupported", "[pairing]") {
    const ModuleSpec V = ModuleSpec::semisimple({{"S", 2, field_make(2)}, {"T", 2, field_make(2)}});
    const SubmoduleLattice L = enumerate_submodules(V);
    CHECK(half_pairing(L, 2).kind == HalfPairing::Kind::Unsupported);
}

TEST_CASE("half pairing rejects odd total length", "[pairing]") {
    const ModuleSpec V = nS(3, 2);
    const SubmoduleLattice L = enumerate_submodules(V);
    CHECK_THROWS_AS(half_pairing(L, 1), std::invalid_argument);
}
