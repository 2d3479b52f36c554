#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "modlat/bounds.hpp"
#include "modlat/module.hpp"

namespace modlat {

inline constexpr size_t kMaxLatticeMembers = 20000;

// All subspaces of F_q^n as RREF bases, optionally filtered by dimension.
// Complete and duplicate-free: one RREF per subspace.
inline std::vector<FqMatrix> enumerate_subspaces(const Field& field, unsigned n,
                                                 std::optional<unsigned> dim_filter = {}) {
    uint64_t span = 1;
    for (unsigned i = 0; i < n; ++i) {
        span *= field.q();
        if (span > kMaxSubspaceSpan) throw BoundExceeded("q^n exceeds subspace enumeration cap");
    }
    std::vector<FqMatrix> out;
    for (unsigned k = 0; k <= n; ++k) {
        if (dim_filter && *dim_filter != k) continue;
        // choose pivot columns p_0 < ... < p_{k-1}
        std::vector<unsigned> pivots(k);
        for (unsigned i = 0; i < k; ++i) pivots[i] = i;
        while (true) {
            // free positions: (row i, col j) with j > pivots[i], j not a pivot
            std::vector<std::pair<unsigned, unsigned>> free_pos;
            std::vector<bool> is_pivot(n, false);
            for (unsigned p : pivots) is_pivot[p] = true;
            for (unsigned i = 0; i < k; ++i)
                for (unsigned j = pivots[i] + 1; j < n; ++j)
                    if (!is_pivot[j]) free_pos.emplace_back(i, j);
            std::vector<uint8_t> vals(free_pos.size(), 0);
            while (true) {
                FqMatrix m(field, k, n);
                for (unsigned i = 0; i < k; ++i) m.at(i, pivots[i]) = 1;
                for (size_t f = 0; f < free_pos.size(); ++f)
                    m.at(free_pos[f].first, free_pos[f].second) = vals[f];
                out.push_back(std::move(m));
                size_t f = 0;
                while (f < vals.size() && vals[f] == field.q() - 1) vals[f++] = 0;
                if (f == vals.size()) break;
                ++vals[f];
            }
            if (k == 0) break;
            // next pivot combination
            int i = static_cast<int>(k) - 1;
            while (i >= 0 && pivots[i] == n - k + i) --i;
            if (i < 0) break;
            ++pivots[i];
            for (unsigned j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
        }
    }
    return out;
}

namespace detail {

inline void finalize_lattice(SubmoduleLattice& L) {
    std::sort(L.members.begin(), L.members.end(), [](const Submodule& a, const Submodule& b) {
        if (a.length != b.length) return a.length < b.length;
        return a.key() < b.key();
    });
    L.index_of.clear();
    for (size_t i = 0; i < L.members.size(); ++i) L.index_of.emplace(L.members[i].key(), i);
    const unsigned n = composition_length(L.ambient);
    L.strata.assign(n + 1, {});
    for (size_t i = 0; i < L.members.size(); ++i) {
        if (L.members[i].length > n) throw std::logic_error("member length exceeds ambient length");
        L.strata[L.members[i].length].push_back(i);
    }
    L.contains_.assign(L.size(), std::vector<bool>(L.size(), false));
    for (size_t i = 0; i < L.size(); ++i)
        for (size_t j = 0; j < L.size(); ++j)
            L.contains_[i][j] = sub_contains(L.ambient, L.members[i], L.members[j]);
    L.zero_index = L.find(zero_submodule(L.ambient));
    L.full_index = L.find(full_submodule(L.ambient));
}

// With a nonempty action the prime-exponent length formula is only valid when
// every simple section of the presentation has prime order; cross-check it
// against chain depth in the enumerated lattice and refuse to go on silently.
inline void check_explicit_lengths(const SubmoduleLattice& L) {
    std::vector<size_t> order(L.size());
    for (size_t i = 0; i < L.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return L.members[a].nf.subgroup_order < L.members[b].nf.subgroup_order;
    });
    std::vector<unsigned> depth(L.size(), 0);
    for (size_t oi = 0; oi < order.size(); ++oi) {
        const size_t i = order[oi];
        unsigned d = 0;
        for (size_t oj = 0; oj < oi; ++oj) {
            const size_t j = order[oj];
            if (i != j && L.ge(i, j) && depth[j] + 1 > d) d = depth[j] + 1;
        }
        depth[i] = d;
        if (d != L.members[i].length)
            throw std::domain_error(
                "presentation has a simple section of non-prime order; "
                "composition lengths are not supported for this action");
    }
}

}  // namespace detail

// Full submodule lattice. Semisimple model: cartesian product of
// per-component subspace lists. Explicit model: cyclic submodules of every
// element, then join-closure to a fixed point (every submodule is a join of
// cyclic ones, so the closure is complete).
inline SubmoduleLattice enumerate_submodules(const ModuleSpec& V) {
    SubmoduleLattice L(V);
    if (V.is_semisimple_model()) {
        std::vector<std::vector<FqMatrix>> per_comp;
        uint64_t total = 1;
        for (const auto& c : V.components()) {
            per_comp.push_back(enumerate_subspaces(c.field, c.mult));
            total *= per_comp.back().size();
            if (total > kMaxLatticeMembers) throw BoundExceeded("lattice size exceeds cap");
        }
        std::vector<size_t> idx(per_comp.size(), 0);
        while (true) {
            std::vector<FqMatrix> bases;
            for (size_t i = 0; i < per_comp.size(); ++i) bases.push_back(per_comp[i][idx[i]]);
            L.members.push_back(make_semisimple_sub(V, std::move(bases)));
            size_t i = 0;
            while (i < idx.size() && idx[i] + 1 == per_comp[i].size()) idx[i++] = 0;
            if (i == idx.size()) break;
            ++idx[i];
        }
        detail::finalize_lattice(L);
        return L;
    }

    const auto& P = V.presentation();
    if (P.order() > max_group_order()) throw BoundExceeded("group order exceeds cap");
    std::map<std::string, size_t> seen;
    std::vector<Submodule> items;
    auto add = [&](Submodule s) {
        std::string k = s.key();
        if (seen.count(k)) return;
        seen.emplace(std::move(k), items.size());
        items.push_back(std::move(s));
        if (items.size() > kMaxLatticeMembers) throw BoundExceeded("lattice size exceeds cap");
    };
    add(zero_submodule(V));
    for (uint32_t x = 1; x < P.order(); ++x) add(cyclic_submodule(V, x));
    // Join-closure: each unordered pair is processed once; items appended
    // during the sweep get paired with everything before them.
    for (size_t i = 1; i < items.size(); ++i)
        for (size_t j = 0; j < i; ++j) add(join(V, items[i], items[j]));
    L.members = std::move(items);
    detail::finalize_lattice(L);
    if (!P.action.empty()) detail::check_explicit_lengths(L);
    return L;
}

// All complements of U in the ambient module: meet zero, join full.
inline std::vector<Submodule> complements_of(const SubmoduleLattice& L, const Submodule& U) {
    const size_t u = L.find(U);
    std::vector<Submodule> out;
    const std::string zero_key = L.members[L.zero_index].key();
    const std::string full_key = L.members[L.full_index].key();
    for (size_t i = 0; i < L.size(); ++i) {
        if (meet(L.ambient, L.members[u], L.members[i]).key() != zero_key) continue;
        if (join(L.ambient, L.members[u], L.members[i]).key() != full_key) continue;
        out.push_back(L.members[i]);
    }
    return out;
}

// Maximal submodules (no member strictly between them and V) and the radical
// (their meet). Order-theoretic, so it is valid for both models.
inline std::pair<Submodule, std::vector<Submodule>> radical_and_maximals(const ModuleSpec& V,
                                                                         const SubmoduleLattice& L) {
    std::vector<Submodule> maximals;
    for (size_t i = 0; i < L.size(); ++i) {
        if (i == L.full_index) continue;
        bool is_max = true;
        for (size_t z = 0; z < L.size() && is_max; ++z) {
            if (z == i || z == L.full_index) continue;
            if (L.ge(z, i)) is_max = false;
        }
        if (is_max) maximals.push_back(L.members[i]);
    }
    Submodule radical = full_submodule(V);
    for (const Submodule& m : maximals) radical = meet(V, radical, m);
    return {std::move(radical), std::move(maximals)};
}

inline std::pair<Submodule, std::vector<Submodule>> radical_and_maximals(const ModuleSpec& V) {
    return radical_and_maximals(V, enumerate_submodules(V));
}

// Symbolic profile entry for the finiteness predicate: a multiplicity and an
// endomorphism-ring size that may be infinite (nullopt).
struct SectionProfile {
    unsigned mult = 1;
    std::optional<uint64_t> end_size;  // nullopt = infinite
};

// The submodule set is finite iff there is a composition series and every
// semisimple section repeats a simple only when its endomorphism ring is
// finite.
inline bool finiteness_predicate(const std::vector<SectionProfile>& profile,
                                 bool has_composition_series) {
    if (!has_composition_series) return false;
    for (const auto& e : profile)
        if (e.mult >= 2 && !e.end_size.has_value()) return false;
    return true;
}

}  // namespace modlat
