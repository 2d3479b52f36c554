#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "modlat/bounds.hpp"
#include "modlat/enumerate.hpp"
#include "modlat/module.hpp"

namespace modlat {

// External direct product of two explicit models over the same ring: moduli
// are concatenated and the k-th ring generator acts as the block diagonal of
// the factors' k-th matrices. Plain Z-modules (empty actions) compose freely.
inline AbelianPresentation product_presentation(const AbelianPresentation& u,
                                                const AbelianPresentation& w) {
    if (u.action.size() != w.action.size())
        throw std::invalid_argument("product factors must list the same ring generators");
    AbelianPresentation p;
    p.moduli = u.moduli;
    p.moduli.insert(p.moduli.end(), w.moduli.begin(), w.moduli.end());
    for (size_t k = 0; k < u.action.size(); ++k) {
        const unsigned tu = u.t(), tw = w.t(), t = tu + tw;
        ActionMatrix A(t, std::vector<long long>(t, 0));
        for (unsigned i = 0; i < tu; ++i)
            for (unsigned j = 0; j < tu; ++j) A[i][j] = u.action[k][i][j];
        for (unsigned i = 0; i < tw; ++i)
            for (unsigned j = 0; j < tw; ++j) A[tu + i][tu + j] = w.action[k][i][j];
        p.action.push_back(std::move(A));
    }
    return p;
}

// A direct product U x W with element fusion helpers.
struct ProductModule {
    ModuleSpec factor_u, factor_w, product;

    static ProductModule make(const ModuleSpec& u, const ModuleSpec& w) {
        if (u.is_semisimple_model() || w.is_semisimple_model())
            throw std::invalid_argument("product construction needs explicit models");
        ProductModule p{u, w, ModuleSpec::explicit_module(
                                  product_presentation(u.presentation(), w.presentation()))};
        if (p.product.presentation().order() > max_group_order())
            throw BoundExceeded("product order exceeds cap");
        return p;
    }

    uint32_t fuse(uint32_t eu, uint32_t ew) const {
        return eu + static_cast<uint32_t>(factor_u.presentation().order()) * ew;
    }
    std::pair<uint32_t, uint32_t> split(uint32_t x) const {
        const uint32_t ou = static_cast<uint32_t>(factor_u.presentation().order());
        return {x % ou, x / ou};
    }
};

// (U1, U2, theta, W2, W1) with U2 <= U1 <= U, W2 <= W1 <= W and theta an
// isomorphism U1/U2 -> W1/W2, stored as a full coset table keyed by the
// minimal element of each coset.
struct GoursatQuintuple {
    Submodule u1, u2, w1, w2;
    std::vector<std::pair<uint32_t, uint32_t>> theta;  // (U-coset rep, W-coset rep), sorted

    friend bool operator==(const GoursatQuintuple& a, const GoursatQuintuple& b) {
        return a.u1 == b.u1 && a.u2 == b.u2 && a.w1 == b.w1 && a.w2 == b.w2 && a.theta == b.theta;
    }
};

namespace detail {

// Quotient big/small as a table module on coset representatives.
struct QuotientModule {
    std::vector<uint32_t> reps;                    // sorted, reps[0] is the zero coset
    std::map<uint32_t, uint32_t> rep_of;           // element of big -> coset rep
    std::vector<std::vector<unsigned>> add;        // rep-index addition
    std::vector<std::vector<unsigned>> act;        // per ring generator
    std::vector<unsigned> order_of;                // additive order per rep-index

    size_t size() const { return reps.size(); }
    unsigned index_of(uint32_t rep) const {
        const auto it = std::lower_bound(reps.begin(), reps.end(), rep);
        return static_cast<unsigned>(it - reps.begin());
    }
};

inline QuotientModule build_quotient(const AbelianPresentation& P,
                                     const std::vector<uint32_t>& big_elems,
                                     const SubgroupNF& small_nf) {
    QuotientModule Q;
    for (uint32_t x : big_elems) {
        if (Q.rep_of.count(x)) continue;
        // coset x + small
        std::vector<uint32_t> coset;
        for (uint32_t s : nf_elements(P, small_nf)) coset.push_back(P.add(x, s));
        const uint32_t rep = *std::min_element(coset.begin(), coset.end());
        for (uint32_t y : coset) Q.rep_of.emplace(y, rep);
    }
    std::set<uint32_t> rep_set;
    for (const auto& [elem, rep] : Q.rep_of) rep_set.insert(rep);
    Q.reps.assign(rep_set.begin(), rep_set.end());
    if (Q.reps.size() > kMaxQuotientSize) throw BoundExceeded("quotient exceeds coset-table cap");
    const size_t n = Q.reps.size();
    Q.add.assign(n, std::vector<unsigned>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            Q.add[i][j] = Q.index_of(Q.rep_of.at(P.add(Q.reps[i], Q.reps[j])));
    for (const ActionMatrix& A : P.action) {
        std::vector<unsigned> img(n);
        for (size_t i = 0; i < n; ++i) img[i] = Q.index_of(Q.rep_of.at(P.apply(A, Q.reps[i])));
        Q.act.push_back(std::move(img));
    }
    Q.order_of.assign(n, 1);
    for (size_t i = 0; i < n; ++i) {
        unsigned o = 1, cur = static_cast<unsigned>(i);
        const unsigned zero = Q.index_of(Q.rep_of.at(P.add(Q.reps[i], P.neg(Q.reps[i]))));
        while (cur != zero) { cur = Q.add[cur][i]; ++o; }
        Q.order_of[i] = o;
    }
    return Q;
}

// All module isomorphisms Q1 -> Q2 as rep-index tables. Backtracks over
// images of an additive generating set, rejecting conflicting extensions,
// then filters by action equivariance.
inline std::vector<std::vector<unsigned>> enumerate_isomorphisms(const QuotientModule& q1,
                                                                 const QuotientModule& q2) {
    std::vector<std::vector<unsigned>> result;
    if (q1.size() != q2.size()) return result;
    const size_t n = q1.size();
    const unsigned zero1 = q1.index_of(q1.rep_of.at(q1.reps[0]));  // reps[0] is minimal = zero coset
    const unsigned zero2 = 0;
    // additive generating set of q1, greedily
    std::vector<unsigned> gens;
    std::vector<bool> in_span(n, false);
    in_span[zero1] = true;
    size_t span_size = 1;
    while (span_size < n) {
        unsigned g = 0;
        while (in_span[g]) ++g;
        gens.push_back(g);
        // close the span additively
        bool grew = true;
        std::vector<bool> next = in_span;
        next[g] = true;
        while (grew) {
            grew = false;
            for (unsigned a = 0; a < n; ++a)
                if (next[a] && !next[q1.add[a][g]]) { next[q1.add[a][g]] = true; grew = true; }
            for (unsigned a = 0; a < n; ++a)
                for (unsigned b = 0; b < n; ++b)
                    if (next[a] && next[b] && !next[q1.add[a][b]]) {
                        next[q1.add[a][b]] = true;
                        grew = true;
                    }
        }
        in_span = next;
        span_size = 0;
        for (bool v : in_span) span_size += v;
    }

    std::vector<int> image(n, -1);
    image[zero1] = static_cast<int>(zero2);

    const auto extend = [&](auto&& self, size_t gi) -> void {
        if (gi == gens.size()) {
            // fully determined by closure; verify bijectivity and equivariance
            std::vector<bool> hit(n, false);
            for (unsigned x = 0; x < n; ++x) {
                if (image[x] < 0) return;  // not everything reached: not generating (bug)
                if (hit[image[x]]) return;
                hit[image[x]] = true;
            }
            for (size_t a = 0; a < q1.act.size(); ++a)
                for (unsigned x = 0; x < n; ++x)
                    if (image[q1.act[a][x]] != static_cast<int>(q2.act[a][image[x]])) return;
            std::vector<unsigned> full(n);
            for (unsigned x = 0; x < n; ++x) full[x] = static_cast<unsigned>(image[x]);
            result.push_back(std::move(full));
            return;
        }
        const unsigned g = gens[gi];
        for (unsigned h = 0; h < n; ++h) {
            if (q2.order_of[h] != q1.order_of[g]) continue;
            // tentatively assign and close under addition with defined values
            std::vector<int> saved = image;
            bool ok = true;
            if (image[g] == -1) image[g] = static_cast<int>(h);
            else ok = image[g] == static_cast<int>(h);
            if (ok) {
                bool grew = true;
                while (grew && ok) {
                    grew = false;
                    for (unsigned a = 0; a < n && ok; ++a) {
                        if (image[a] < 0) continue;
                        for (unsigned b = 0; b < n; ++b) {
                            if (image[b] < 0) continue;
                            const unsigned s = q1.add[a][b];
                            const int target = static_cast<int>(
                                q2.add[static_cast<unsigned>(image[a])][static_cast<unsigned>(image[b])]);
                            if (image[s] == -1) { image[s] = target; grew = true; }
                            else if (image[s] != target) { ok = false; break; }
                        }
                    }
                }
            }
            if (ok) self(self, gi + 1);
            image = std::move(saved);
        }
    };
    extend(extend, 0);
    return result;
}

inline std::vector<uint32_t> sub_elements(const ModuleSpec& V, const Submodule& s) {
    return nf_elements(V.presentation(), s.nf);
}

}  // namespace detail

// Forward direction of the bijection: project a submodule M of U x W to
// (p1, k1, theta, k2, p2).
inline GoursatQuintuple quintuple_of(const ProductModule& P, const Submodule& M) {
    const AbelianPresentation& prod = P.product.presentation();
    const std::vector<uint32_t> elems = detail::sub_elements(P.product, M);
    for (uint32_t x : elems)
        for (const ActionMatrix& A : prod.action)
            if (!nf_contains(prod, M.nf, prod.apply(A, x)))
                throw std::invalid_argument("submodule is not closed under the product action");

    std::set<uint32_t> p1, k1, p2, k2;
    for (uint32_t x : elems) {
        const auto [eu, ew] = P.split(x);
        p1.insert(eu);
        p2.insert(ew);
        if (ew == 0) k1.insert(eu);
        if (eu == 0) k2.insert(ew);
    }
    GoursatQuintuple q;
    q.u1 = make_explicit_sub(P.factor_u, subgroup_normal_form(P.factor_u.presentation(),
                                                              {p1.begin(), p1.end()}));
    q.u2 = make_explicit_sub(P.factor_u, subgroup_normal_form(P.factor_u.presentation(),
                                                              {k1.begin(), k1.end()}));
    q.w1 = make_explicit_sub(P.factor_w, subgroup_normal_form(P.factor_w.presentation(),
                                                              {p2.begin(), p2.end()}));
    q.w2 = make_explicit_sub(P.factor_w, subgroup_normal_form(P.factor_w.presentation(),
                                                              {k2.begin(), k2.end()}));

    const detail::QuotientModule qu =
        detail::build_quotient(P.factor_u.presentation(), {p1.begin(), p1.end()}, q.u2.nf);
    const detail::QuotientModule qw =
        detail::build_quotient(P.factor_w.presentation(), {p2.begin(), p2.end()}, q.w2.nf);
    std::map<uint32_t, uint32_t> table;
    for (uint32_t x : elems) {
        const auto [eu, ew] = P.split(x);
        const uint32_t ru = qu.rep_of.at(eu), rw = qw.rep_of.at(ew);
        const auto it = table.find(ru);
        if (it == table.end()) table.emplace(ru, rw);
        else if (it->second != rw) throw std::logic_error("theta is not well defined");
    }
    q.theta.assign(table.begin(), table.end());
    // the three quotients of the correspondence have equal order
    if (q.theta.size() * q.u2.nf.subgroup_order != q.u1.nf.subgroup_order ||
        q.theta.size() * q.w2.nf.subgroup_order != q.w1.nf.subgroup_order ||
        q.theta.size() * q.u2.nf.subgroup_order * q.w2.nf.subgroup_order != M.nf.subgroup_order)
        throw std::logic_error("quotient orders disagree");
    return q;
}

// Inverse direction: the pullback {(u, w) in U1 x W1 : theta(u + U2) = w + W2}.
inline Submodule submodule_of(const ProductModule& P, const GoursatQuintuple& q) {
    if (!sub_contains(P.factor_u, q.u1, q.u2) || !sub_contains(P.factor_w, q.w1, q.w2))
        throw std::invalid_argument("quintuple is not nested");
    const detail::QuotientModule qu = detail::build_quotient(
        P.factor_u.presentation(), detail::sub_elements(P.factor_u, q.u1), q.u2.nf);
    const detail::QuotientModule qw = detail::build_quotient(
        P.factor_w.presentation(), detail::sub_elements(P.factor_w, q.w1), q.w2.nf);
    if (qu.size() != qw.size() || q.theta.size() != qu.size())
        throw std::invalid_argument("theta table has the wrong size");
    // theta as a rep-index map, checked additive, bijective and equivariant
    std::vector<int> tmap(qu.size(), -1);
    std::vector<bool> hit(qw.size(), false);
    for (const auto& [ru, rw] : q.theta) {
        if (!qu.rep_of.count(ru) || qu.rep_of.at(ru) != ru)
            throw std::invalid_argument("theta key is not a coset representative");
        if (!qw.rep_of.count(rw) || qw.rep_of.at(rw) != rw)
            throw std::invalid_argument("theta value is not a coset representative");
        const unsigned iu = qu.index_of(ru), iw = qw.index_of(rw);
        if (tmap[iu] != -1 || hit[iw]) throw std::invalid_argument("theta is not a bijection");
        tmap[iu] = static_cast<int>(iw);
        hit[iw] = true;
    }
    for (unsigned a = 0; a < qu.size(); ++a)
        for (unsigned b = 0; b < qu.size(); ++b)
            if (tmap[qu.add[a][b]] !=
                static_cast<int>(qw.add[static_cast<unsigned>(tmap[a])][static_cast<unsigned>(tmap[b])]))
                throw std::invalid_argument("theta is not additive");
    for (size_t k = 0; k < qu.act.size(); ++k)
        for (unsigned a = 0; a < qu.size(); ++a)
            if (tmap[qu.act[k][a]] != static_cast<int>(qw.act[k][static_cast<unsigned>(tmap[a])]))
                throw std::invalid_argument("theta is not action-equivariant");

    std::vector<uint32_t> members;
    for (uint32_t eu : detail::sub_elements(P.factor_u, q.u1))
        for (uint32_t ew : detail::sub_elements(P.factor_w, q.w1)) {
            const unsigned iu = qu.index_of(qu.rep_of.at(eu));
            const unsigned iw = qw.index_of(qw.rep_of.at(ew));
            if (tmap[iu] == static_cast<int>(iw)) members.push_back(P.fuse(eu, ew));
        }
    return make_explicit_sub(P.product,
                             subgroup_normal_form(P.product.presentation(), members));
}

// Every submodule of U x W, produced through the quintuple catalogue:
// all nested pairs in each factor with isomorphic quotients, all
// isomorphisms between those quotients.
inline std::vector<Submodule> enumerate_product_submodules(const ModuleSpec& u,
                                                           const ModuleSpec& w) {
    const ProductModule P = ProductModule::make(u, w);
    const SubmoduleLattice lu = enumerate_submodules(u);
    const SubmoduleLattice lw = enumerate_submodules(w);
    if (lu.size() * lw.size() > 10000)
        throw BoundExceeded("quintuple catalogue exceeds the desk-scale pair cap");
    std::map<std::string, Submodule> out;
    for (size_t a1 = 0; a1 < lu.size(); ++a1)
        for (size_t a2 = 0; a2 < lu.size(); ++a2) {
            if (!lu.ge(a1, a2)) continue;
            const uint64_t qsize = lu.members[a1].nf.subgroup_order / lu.members[a2].nf.subgroup_order;
            const detail::QuotientModule qu = detail::build_quotient(
                u.presentation(), detail::sub_elements(u, lu.members[a1]), lu.members[a2].nf);
            for (size_t b1 = 0; b1 < lw.size(); ++b1)
                for (size_t b2 = 0; b2 < lw.size(); ++b2) {
                    if (!lw.ge(b1, b2)) continue;
                    if (lw.members[b1].nf.subgroup_order !=
                        qsize * lw.members[b2].nf.subgroup_order)
                        continue;
                    const detail::QuotientModule qw = detail::build_quotient(
                        w.presentation(), detail::sub_elements(w, lw.members[b1]),
                        lw.members[b2].nf);
                    for (const std::vector<unsigned>& iso :
                         detail::enumerate_isomorphisms(qu, qw)) {
                        GoursatQuintuple q;
                        q.u1 = lu.members[a1];
                        q.u2 = lu.members[a2];
                        q.w1 = lw.members[b1];
                        q.w2 = lw.members[b2];
                        for (unsigned i = 0; i < qu.size(); ++i)
                            q.theta.emplace_back(qu.reps[i], qw.reps[iso[i]]);
                        std::sort(q.theta.begin(), q.theta.end());
                        Submodule m = submodule_of(P, q);
                        out.emplace(m.key(), std::move(m));
                    }
                }
        }
    std::vector<Submodule> result;
    for (auto& [k, s] : out) result.push_back(std::move(s));
    return result;
}

}  // namespace modlat
