#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "modlat/counting.hpp"
#include "modlat/enumerate.hpp"
#include "modlat/matching.hpp"
#include "modlat/module.hpp"

namespace modlat {

namespace detail {

// A self-paired complement map on the subspaces of one component F_q^n:
// image[key(X)] = a complement of X, bijective stratum-to-stratum.
// Strata j and n-j are matched bipartitely (middle stratum against a second
// copy of itself); the disjointness graph between complementary strata is
// regular, so a perfect matching exists and a failure means a bug.
struct ComponentPhi {
    std::map<std::string, FqMatrix> image;
};

inline ComponentPhi component_complement_map(const Field& F, unsigned n) {
    ComponentPhi phi;
    std::vector<std::vector<FqMatrix>> by_dim(n + 1);
    for (FqMatrix& s : enumerate_subspaces(F, n)) by_dim[s.rows].push_back(std::move(s));
    for (unsigned j = 0; 2 * j <= n; ++j) {
        const auto& left = by_dim[j];
        const auto& right = by_dim[n - j];
        const size_t a = left.size(), b = right.size();
        if (a != b) throw std::logic_error("stratum sizes must match");
        std::vector<std::vector<int>> adj(a + b);
        for (size_t x = 0; x < a; ++x)
            for (size_t y = 0; y < b; ++y) {
                if (2 * j == n && left[x] == right[y]) continue;  // X meets itself
                if (subspace_meet(left[x], right[y]).rows == 0) {
                    adj[x].push_back(static_cast<int>(a + y));
                    adj[a + y].push_back(static_cast<int>(x));
                }
            }
        const std::vector<int> match = max_matching(adj);
        for (size_t x = 0; x < a; ++x) {
            if (match[x] < 0) throw std::logic_error("complement matching is not perfect");
            const FqMatrix& img = right[static_cast<size_t>(match[x]) - a];
            phi.image.emplace(left[x].key(), img);
            if (2 * j != n) phi.image.emplace(img.key(), left[x]);
        }
    }
    return phi;
}

inline std::vector<ComponentPhi> component_complement_maps(const ModuleSpec& V) {
    std::vector<ComponentPhi> maps;
    for (const auto& c : V.components()) maps.push_back(component_complement_map(c.field, c.mult));
    return maps;
}

}  // namespace detail

// A bijection phi on all lattice members with X meet phi(X) = 0 and
// X join phi(X) = V, built per component and producted; restricted to each
// stratum it maps S_j onto S_{n-j}. Returned as member-index images.
inline std::vector<size_t> complement_bijection(const SubmoduleLattice& L) {
    const ModuleSpec& V = L.ambient;
    require_semisimple_model(V);
    const std::vector<detail::ComponentPhi> maps = detail::component_complement_maps(V);
    std::vector<size_t> phi(L.size());
    for (size_t i = 0; i < L.size(); ++i) {
        std::vector<FqMatrix> image_bases;
        for (size_t c = 0; c < maps.size(); ++c)
            image_bases.push_back(maps[c].image.at(L.members[i].bases[c].key()));
        phi[i] = L.find(make_semisimple_sub(V, std::move(image_bases)));
    }
    // bijectivity
    std::vector<bool> hit(L.size(), false);
    for (size_t i = 0; i < L.size(); ++i) {
        if (hit[phi[i]]) throw std::logic_error("complement map is not injective");
        hit[phi[i]] = true;
    }
    return phi;
}

// Half-pairing of the middle stratum S_k of a semisimple module of length 2k:
// S_k = A ⊎ B (possibly minus one excluded vertex) with a bijection
// alpha: A -> B pairing disjoint submodules.
struct HalfPairing {
    enum class Kind { Paired, ExcludedVertex, Unsupported };
    Kind kind = Kind::Unsupported;
    std::vector<size_t> A, B;              // lattice member indices
    std::map<size_t, size_t> alpha;        // A-index -> B-index
    std::optional<size_t> excluded;        // only for ExcludedVertex
};

inline HalfPairing half_pairing(const SubmoduleLattice& L, unsigned k) {
    const ModuleSpec& V = L.ambient;
    require_semisimple_model(V);
    const unsigned n = composition_length(V);
    if (n != 2 * k) throw std::invalid_argument("half pairing needs total length 2k");
    const auto& comps = V.components();
    HalfPairing hp;

    int odd_mult_comp = -1, odd_end_comp = -1;
    for (size_t c = 0; c < comps.size(); ++c) {
        if (odd_mult_comp < 0 && comps[c].mult % 2 == 1) odd_mult_comp = static_cast<int>(c);
        if (odd_end_comp < 0 && comps[c].field.q() % 2 == 1) odd_end_comp = static_cast<int>(c);
    }

    const std::vector<size_t>& mid = L.strata[k];

    if (odd_mult_comp >= 0) {
        // split by the odd component's dimension; the global complement map
        // sends dimension i to n_c - i, crossing the split
        const size_t c = static_cast<size_t>(odd_mult_comp);
        const std::vector<size_t> phi = complement_bijection(L);
        hp.kind = HalfPairing::Kind::Paired;
        for (size_t idx : mid) {
            const unsigned dim_c = L.members[idx].bases[c].rows;
            if (2 * dim_c < comps[c].mult) {
                hp.A.push_back(idx);
                hp.alpha[idx] = phi[idx];
            } else {
                hp.B.push_back(idx);
            }
        }
        return hp;
    }

    if (odd_end_comp >= 0) {
        // all multiplicities even, some endomorphism size odd: split by the
        // odd-d component's dimension; its own middle needs a perfect
        // matching on that component's disjointness graph
        const size_t c = static_cast<size_t>(odd_end_comp);
        const unsigned half_dim = comps[c].mult / 2;
        const std::vector<size_t> phi = complement_bijection(L);
        std::vector<std::vector<FqMatrix>> by_dim(comps[c].mult + 1);
        for (FqMatrix& s : enumerate_subspaces(comps[c].field, comps[c].mult))
            by_dim[s.rows].push_back(std::move(s));
        const std::vector<FqMatrix>& cmid = by_dim[half_dim];
        std::vector<std::vector<int>> adj(cmid.size());
        for (size_t x = 0; x < cmid.size(); ++x)
            for (size_t y = x + 1; y < cmid.size(); ++y)
                if (subspace_meet(cmid[x], cmid[y]).rows == 0) {
                    adj[x].push_back(static_cast<int>(y));
                    adj[y].push_back(static_cast<int>(x));
                }
        const std::vector<int> match = max_matching(adj);
        if (2 * matching_size(match) != cmid.size())
            throw std::logic_error("odd-d component middle matching is not perfect");
        std::map<std::string, int> side;         // key -> +1 (A side) / -1
        std::map<std::string, std::string> mate; // key -> matched key
        for (size_t x = 0; x < cmid.size(); ++x) {
            const size_t y = static_cast<size_t>(match[x]);
            if (y < x) continue;
            side[cmid[x].key()] = +1;
            side[cmid[y].key()] = -1;
            mate[cmid[x].key()] = cmid[y].key();
        }
        hp.kind = HalfPairing::Kind::Paired;
        // members split by the odd-d component's dimension; the equal halves
        // pair through that component's matching and phi on the rest
        for (size_t idx : mid) {
            const FqMatrix& xc = L.members[idx].bases[c];
            if (2 * xc.rows < comps[c].mult) {
                hp.A.push_back(idx);
                hp.alpha[idx] = phi[idx];
            } else if (2 * xc.rows > comps[c].mult) {
                hp.B.push_back(idx);
            } else if (side.at(xc.key()) > 0) {
                // pair through alpha_c on component c and phi on the rest
                std::vector<FqMatrix> image;
                for (size_t cc = 0; cc < comps.size(); ++cc) {
                    if (cc == c) {
                        const std::string& mk = mate.at(xc.key());
                        for (const FqMatrix& cand : cmid)
                            if (cand.key() == mk) { image.push_back(cand); break; }
                    } else {
                        image.push_back(L.members[phi[idx]].bases[cc]);
                    }
                }
                hp.A.push_back(idx);
                hp.alpha[idx] = L.find(make_semisimple_sub(V, std::move(image)));
            } else {
                hp.B.push_back(idx);
            }
        }
        return hp;
    }

    if (comps.size() == 1) {
        // homogeneous with even multiplicity and even q: one middle vertex is
        // excluded and the rest pair up via a maximum matching
        std::vector<std::vector<int>> adj(mid.size());
        for (size_t x = 0; x < mid.size(); ++x)
            for (size_t y = x + 1; y < mid.size(); ++y)
                if (meet(V, L.members[mid[x]], L.members[mid[y]]).length == 0) {
                    adj[x].push_back(static_cast<int>(y));
                    adj[y].push_back(static_cast<int>(x));
                }
        const std::vector<int> match = max_matching(adj);
        if (2 * matching_size(match) + 1 != mid.size())
            throw std::logic_error("expected a near-perfect matching on the middle stratum");
        hp.kind = HalfPairing::Kind::ExcludedVertex;
        for (size_t x = 0; x < mid.size(); ++x) {
            if (match[x] == -1) { hp.excluded = mid[x]; continue; }
            const size_t y = static_cast<size_t>(match[x]);
            if (y < x) continue;
            hp.A.push_back(mid[x]);
            hp.B.push_back(mid[y]);
            hp.alpha[mid[x]] = mid[y];
        }
        return hp;
    }

    hp.kind = HalfPairing::Kind::Unsupported;  // all n_i even, all d_i even, r >= 2
    return hp;
}

}  // namespace modlat
