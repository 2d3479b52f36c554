#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "modlat/abelian.hpp"
#include "modlat/bounds.hpp"
#include "modlat/field.hpp"
#include "modlat/matrix.hpp"

namespace modlat {

enum class ModelKind { Semisimple, Explicit };

// One isotypic component of a semisimple module: mult copies of a simple
// whose endomorphism ring is the finite field `field`.
struct SemisimpleComponent {
    std::string type_id;
    unsigned mult = 1;
    Field field;
};

// A finite module, in one of two models. The semisimple model is a list of
// isotypic components (submodules are tuples of subspaces); the explicit
// model is a finite abelian group with a validated matrix action.
class ModuleSpec {
public:
    static ModuleSpec semisimple(std::vector<SemisimpleComponent> comps) {
        if (comps.empty()) throw std::invalid_argument("semisimple module needs a component");
        for (size_t i = 0; i < comps.size(); ++i) {
            if (comps[i].mult < 1 || comps[i].mult > kMaxAmbientDim)
                throw std::invalid_argument("component multiplicity out of range");
            for (size_t j = i + 1; j < comps.size(); ++j)
                if (comps[i].type_id == comps[j].type_id)
                    throw std::invalid_argument("component type ids must be distinct");
        }
        ModuleSpec m;
        m.kind_ = ModelKind::Semisimple;
        m.comps_ = std::move(comps);
        return m;
    }

    static ModuleSpec explicit_module(AbelianPresentation pres) {
        const auto violations = validate_action(pres);
        if (!violations.empty()) {
            const auto& v = violations.front();
            throw std::invalid_argument(
                "action matrix " + std::to_string(v.matrix_index) + " violates compatibility at (" +
                std::to_string(v.row) + "," + std::to_string(v.col) + ")");
        }
        ModuleSpec m;
        m.kind_ = ModelKind::Explicit;
        m.pres_ = std::move(pres);
        return m;
    }

    ModelKind kind() const { return kind_; }
    bool is_semisimple_model() const { return kind_ == ModelKind::Semisimple; }
    const std::vector<SemisimpleComponent>& components() const { return comps_; }
    const AbelianPresentation& presentation() const { return pres_; }

    friend bool operator==(const ModuleSpec& a, const ModuleSpec& b) {
        if (a.kind_ != b.kind_) return false;
        if (a.kind_ == ModelKind::Semisimple) {
            if (a.comps_.size() != b.comps_.size()) return false;
            for (size_t i = 0; i < a.comps_.size(); ++i)
                if (a.comps_[i].type_id != b.comps_[i].type_id ||
                    a.comps_[i].mult != b.comps_[i].mult ||
                    a.comps_[i].field != b.comps_[i].field)
                    return false;
            return true;
        }
        return a.pres_.moduli == b.pres_.moduli && a.pres_.action == b.pres_.action;
    }

private:
    ModelKind kind_ = ModelKind::Semisimple;
    std::vector<SemisimpleComponent> comps_;
    AbelianPresentation pres_;
};

namespace detail {
inline unsigned prime_exponent_sum(uint64_t n) {
    unsigned total = 0;
    for (uint64_t p = 2; p * p <= n; ++p)
        while (n % p == 0) { n /= p; ++total; }
    if (n > 1) ++total;
    return total;
}
}  // namespace detail

// Canonical representation of one submodule. Exactly one payload is used,
// matching the ambient model; equality and ordering go through key().
struct Submodule {
    std::vector<FqMatrix> bases;  // semisimple: RREF basis per component
    SubgroupNF nf;                // explicit: Hermite-style normal form
    unsigned length = 0;

    std::string key() const {
        if (!bases.empty()) {
            std::string k;
            for (const FqMatrix& b : bases) { k += b.key(); k += '|'; }
            return k;
        }
        return nf.key();
    }

    friend bool operator==(const Submodule& a, const Submodule& b) { return a.key() == b.key(); }
    friend bool operator!=(const Submodule& a, const Submodule& b) { return !(a == b); }
};

inline Submodule make_semisimple_sub(const ModuleSpec& V, std::vector<FqMatrix> bases) {
    if (bases.size() != V.components().size())
        throw std::invalid_argument("one basis per component required");
    Submodule s;
    s.length = 0;
    for (size_t i = 0; i < bases.size(); ++i) s.length += bases[i].rows;
    s.bases = std::move(bases);
    return s;
}

inline Submodule make_explicit_sub(const ModuleSpec& V, SubgroupNF nf) {
    Submodule s;
    s.length = detail::prime_exponent_sum(nf.subgroup_order);
    s.nf = std::move(nf);
    (void)V;
    return s;
}

inline Submodule zero_submodule(const ModuleSpec& V) {
    if (V.is_semisimple_model()) {
        std::vector<FqMatrix> bases;
        for (const auto& c : V.components()) bases.push_back(FqMatrix(c.field, 0, c.mult));
        return make_semisimple_sub(V, std::move(bases));
    }
    return make_explicit_sub(V, subgroup_normal_form(V.presentation(), {}));
}

inline Submodule full_submodule(const ModuleSpec& V) {
    if (V.is_semisimple_model()) {
        std::vector<FqMatrix> bases;
        for (const auto& c : V.components()) bases.push_back(FqMatrix::identity(c.field, c.mult));
        return make_semisimple_sub(V, std::move(bases));
    }
    const auto& P = V.presentation();
    std::vector<uint32_t> gens;
    for (unsigned i = 0; i < P.t(); ++i) {
        std::vector<unsigned> v(P.t(), 0);
        v[i] = 1;
        gens.push_back(P.encode(v));
    }
    return make_explicit_sub(V, subgroup_normal_form(P, gens));
}

// Composition length of the ambient module. Explicit model: the number of
// prime factors of the group order, counted with multiplicity (each simple
// section of a plain Z-module presentation has prime order, so maximal
// chains have exactly that many steps; enumerate_submodules cross-checks
// this against chain depth whenever an action is present).
inline unsigned composition_length(const ModuleSpec& V) {
    if (V.is_semisimple_model()) {
        unsigned n = 0;
        for (const auto& c : V.components()) n += c.mult;
        return n;
    }
    return detail::prime_exponent_sum(V.presentation().order());
}

inline unsigned composition_length(const Submodule& s) { return s.length; }

inline void check_semisimple_shape(const ModuleSpec& V, const Submodule& s) {
    if (s.bases.size() != V.components().size())
        throw std::invalid_argument("submodule does not match ambient module");
    for (size_t i = 0; i < s.bases.size(); ++i)
        if (s.bases[i].cols != V.components()[i].mult || s.bases[i].field != V.components()[i].field)
            throw std::invalid_argument("submodule does not match ambient module");
}

inline Submodule meet(const ModuleSpec& V, const Submodule& A, const Submodule& B) {
    if (V.is_semisimple_model()) {
        check_semisimple_shape(V, A);
        check_semisimple_shape(V, B);
        std::vector<FqMatrix> bases;
        for (size_t i = 0; i < A.bases.size(); ++i)
            bases.push_back(subspace_meet(A.bases[i], B.bases[i]));
        return make_semisimple_sub(V, std::move(bases));
    }
    const auto& P = V.presentation();
    const std::vector<uint32_t> elems = nf_elements(P, A.nf);
    std::vector<uint32_t> common;
    for (uint32_t x : elems)
        if (nf_contains(P, B.nf, x)) common.push_back(x);
    return make_explicit_sub(V, subgroup_normal_form(P, common));
}

inline Submodule join(const ModuleSpec& V, const Submodule& A, const Submodule& B) {
    if (V.is_semisimple_model()) {
        check_semisimple_shape(V, A);
        check_semisimple_shape(V, B);
        std::vector<FqMatrix> bases;
        for (size_t i = 0; i < A.bases.size(); ++i)
            bases.push_back(subspace_join(A.bases[i], B.bases[i]));
        return make_semisimple_sub(V, std::move(bases));
    }
    const auto& P = V.presentation();
    std::vector<uint32_t> gens;
    auto push_rows = [&](const SubgroupNF& nf) {
        for (const auto& row : nf.rows) {
            std::vector<unsigned> v(P.t());
            for (unsigned i = 0; i < P.t(); ++i)
                v[i] = static_cast<unsigned>(((row[i] % P.moduli[i]) + P.moduli[i]) % P.moduli[i]);
            gens.push_back(P.encode(v));
        }
    };
    push_rows(A.nf);
    push_rows(B.nf);
    return make_explicit_sub(V, subgroup_normal_form(P, gens));
}

// A >= B?
inline bool sub_contains(const ModuleSpec& V, const Submodule& A, const Submodule& B) {
    if (V.is_semisimple_model()) {
        for (size_t i = 0; i < A.bases.size(); ++i)
            if (!subspace_contains(A.bases[i], B.bases[i])) return false;
        return true;
    }
    const auto& P = V.presentation();
    for (const auto& row : B.nf.rows) {
        std::vector<unsigned> v(P.t());
        for (unsigned i = 0; i < P.t(); ++i)
            v[i] = static_cast<unsigned>(((row[i] % P.moduli[i]) + P.moduli[i]) % P.moduli[i]);
        if (!nf_contains(P, A.nf, P.encode(v))) return false;
    }
    return true;
}

// Smallest action-closed subgroup containing v: additive span of the orbit
// of v under the multiplicative monoid of the action matrices.
inline Submodule cyclic_submodule(const ModuleSpec& V, uint32_t v) {
    if (V.is_semisimple_model())
        throw std::invalid_argument("cyclic_submodule needs the explicit model");
    const auto& P = V.presentation();
    std::set<uint32_t> orbit{v};
    std::vector<uint32_t> work{v};
    while (!work.empty()) {
        const uint32_t x = work.back();
        work.pop_back();
        for (const ActionMatrix& A : P.action) {
            const uint32_t y = P.apply(A, x);
            if (orbit.insert(y).second) work.push_back(y);
        }
    }
    return make_explicit_sub(V, subgroup_normal_form(P, {orbit.begin(), orbit.end()}));
}

// Minimal nonzero submodules of an explicit module. Every minimal submodule
// is the cyclic closure of any of its prime-order elements, so scanning
// prime-order elements is exhaustive.
inline std::vector<Submodule> minimal_submodules(const ModuleSpec& V) {
    const auto& P = V.presentation();
    std::map<std::string, Submodule> closures;
    const uint64_t order = P.order();
    for (uint32_t x = 1; x < order; ++x) {
        // additive order of x
        uint64_t o = 1;
        uint32_t y = x;
        while (y != 0) { y = P.add(y, x); ++o; }
        bool prime = o >= 2;
        for (uint64_t d = 2; d * d <= o; ++d)
            if (o % d == 0) { prime = false; break; }
        if (!prime) continue;
        Submodule s = cyclic_submodule(V, x);
        closures.emplace(s.key(), std::move(s));
    }
    std::vector<Submodule> minimal;
    for (const auto& [k1, s1] : closures) {
        bool is_min = true;
        for (const auto& [k2, s2] : closures) {
            if (k1 == k2) continue;
            if (s2.nf.subgroup_order < s1.nf.subgroup_order && sub_contains(V, s1, s2)) {
                is_min = false;
                break;
            }
        }
        if (is_min) minimal.push_back(s1);
    }
    return minimal;
}

// Join of all simple submodules; the semisimple model is its own socle.
inline Submodule socle(const ModuleSpec& V) {
    if (V.is_semisimple_model()) return full_submodule(V);
    Submodule s = zero_submodule(V);
    for (const Submodule& m : minimal_submodules(V)) s = join(V, s, m);
    return s;
}

struct StructuralFlags {
    bool is_semisimple = false;
    bool is_simple = false;
    bool is_uniform = false;
};

inline StructuralFlags structural_flags(const ModuleSpec& V) {
    StructuralFlags f;
    if (V.is_semisimple_model()) {
        f.is_semisimple = true;
        f.is_simple = composition_length(V) == 1;
        f.is_uniform = f.is_simple;  // two or more simples give a disjoint pair
        return f;
    }
    const std::vector<Submodule> minimal = minimal_submodules(V);
    const Submodule full = full_submodule(V);
    Submodule soc = zero_submodule(V);
    for (const Submodule& m : minimal) soc = join(V, soc, m);
    f.is_semisimple = (soc == full);
    f.is_simple = minimal.size() == 1 && minimal.front() == full;
    // Uniform: every two nonzero submodules meet, i.e. a unique minimal one.
    f.is_uniform = minimal.size() == 1;
    return f;
}

// The full set of submodules of an ambient module, closed under meet/join,
// stratified by composition length. Built by enumerate_submodules.
struct SubmoduleLattice {
    ModuleSpec ambient;
    std::vector<Submodule> members;              // sorted by (length, key)
    std::vector<std::vector<size_t>> strata;     // index lists per length
    std::vector<std::vector<bool>> contains_;    // contains_[i][j]: members[i] >= members[j]
    size_t zero_index = 0, full_index = 0;
    std::map<std::string, size_t> index_of;

    explicit SubmoduleLattice(ModuleSpec amb) : ambient(std::move(amb)) {}

    size_t size() const { return members.size(); }

    size_t find(const Submodule& s) const {
        auto it = index_of.find(s.key());
        if (it == index_of.end()) throw std::invalid_argument("submodule not in lattice");
        return it->second;
    }
    bool has(const Submodule& s) const { return index_of.count(s.key()) != 0; }
    bool ge(size_t i, size_t j) const { return contains_[i][j]; }

    size_t meet_index(size_t i, size_t j) const { return find(meet(ambient, members[i], members[j])); }
    size_t join_index(size_t i, size_t j) const { return find(join(ambient, members[i], members[j])); }
};

// |{X in L : X >= W}|: the number of submodules of V/W.
inline uint64_t interval_count(const SubmoduleLattice& L, const Submodule& W) {
    const size_t w = L.find(W);
    uint64_t n = 0;
    for (size_t i = 0; i < L.size(); ++i)
        if (L.ge(i, w)) ++n;
    return n;
}

}  // namespace modlat
