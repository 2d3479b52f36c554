#pragma once

#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "modlat/bounds.hpp"

namespace modlat {

using ActionMatrix = std::vector<std::vector<long long>>;  // t x t, row-major

// Finite abelian group ⊕ Z/m_i with an optional ring action given by integer
// matrices (each matrix is one ring generator acting by v -> Av). An empty
// action list is a plain Z-module. Elements travel as mixed-radix indices.
struct AbelianPresentation {
    std::vector<unsigned> moduli;            // prime powers >= 2
    std::vector<ActionMatrix> action;

    unsigned t() const { return static_cast<unsigned>(moduli.size()); }

    uint64_t order() const {
        uint64_t o = 1;
        for (unsigned m : moduli) o *= m;
        return o;
    }

    void validate_shape() const {
        if (moduli.empty()) throw std::invalid_argument("presentation needs at least one modulus");
        for (unsigned m : moduli) {
            if (m < 2) throw std::invalid_argument("modulus must be >= 2");
            unsigned p = 2;
            while (m % p != 0) ++p;
            unsigned v = m;
            while (v % p == 0) v /= p;
            if (v != 1) throw std::invalid_argument("modulus must be a prime power");
        }
        if (order() > max_group_order()) throw BoundExceeded("group order exceeds cap");
        for (const ActionMatrix& A : action) {
            if (A.size() != moduli.size()) throw std::invalid_argument("action matrix has bad shape");
            for (const auto& row : A)
                if (row.size() != moduli.size()) throw std::invalid_argument("action matrix has bad shape");
        }
    }

    std::vector<unsigned> decode(uint32_t idx) const {
        std::vector<unsigned> v(t());
        for (unsigned i = 0; i < t(); ++i) { v[i] = idx % moduli[i]; idx /= moduli[i]; }
        return v;
    }
    uint32_t encode(const std::vector<unsigned>& v) const {
        uint32_t idx = 0;
        for (unsigned i = t(); i-- > 0;) idx = idx * moduli[i] + (v[i] % moduli[i]);
        return idx;
    }

    uint32_t add(uint32_t a, uint32_t b) const {
        std::vector<unsigned> x = decode(a), y = decode(b);
        for (unsigned i = 0; i < t(); ++i) x[i] = (x[i] + y[i]) % moduli[i];
        return encode(x);
    }
    uint32_t neg(uint32_t a) const {
        std::vector<unsigned> x = decode(a);
        for (unsigned i = 0; i < t(); ++i) x[i] = (moduli[i] - x[i]) % moduli[i];
        return encode(x);
    }
    uint32_t apply(const ActionMatrix& A, uint32_t a) const {
        const std::vector<unsigned> x = decode(a);
        std::vector<unsigned> y(t(), 0);
        for (unsigned i = 0; i < t(); ++i) {
            long long s = 0;
            for (unsigned j = 0; j < t(); ++j) s += A[i][j] * static_cast<long long>(x[j]);
            long long m = moduli[i];
            y[i] = static_cast<unsigned>(((s % m) + m) % m);
        }
        return encode(y);
    }
};

struct ActionViolation {
    size_t matrix_index;
    unsigned row, col;  // A[row][col] * m_col != 0 (mod m_row)
};

// validate_action: every matrix must be a well-defined endomorphism of
// ⊕ Z/m_i, i.e. A[i][j] * m_j = 0 (mod m_i) for all i, j.
inline std::vector<ActionViolation> validate_action(const AbelianPresentation& P) {
    P.validate_shape();
    std::vector<ActionViolation> out;
    for (size_t k = 0; k < P.action.size(); ++k)
        for (unsigned i = 0; i < P.t(); ++i)
            for (unsigned j = 0; j < P.t(); ++j) {
                const long long prod = P.action[k][i][j] * static_cast<long long>(P.moduli[j]);
                if (prod % static_cast<long long>(P.moduli[i]) != 0)
                    out.push_back({k, i, j});
            }
    return out;
}

// Multiplicative closure of {I} ∪ action under matrix product mod the moduli,
// capped; makes the scalar action of the generated subring inspectable.
inline std::vector<ActionMatrix> ring_closure(const AbelianPresentation& P, size_t cap = 256) {
    const unsigned t = P.t();
    ActionMatrix id(t, std::vector<long long>(t, 0));
    for (unsigned i = 0; i < t; ++i) id[i][i] = 1;
    auto normalize = [&](ActionMatrix A) {
        for (unsigned i = 0; i < t; ++i)
            for (unsigned j = 0; j < t; ++j) {
                long long m = P.moduli[i];
                A[i][j] = ((A[i][j] % m) + m) % m;
            }
        return A;
    };
    std::set<ActionMatrix> seen;
    std::vector<ActionMatrix> out;
    std::vector<ActionMatrix> work{normalize(id)};
    for (const ActionMatrix& A : P.action) work.push_back(normalize(A));
    while (!work.empty() && out.size() < cap) {
        ActionMatrix A = work.back();
        work.pop_back();
        if (!seen.insert(A).second) continue;
        out.push_back(A);
        for (const ActionMatrix& G : P.action) {
            ActionMatrix prod(t, std::vector<long long>(t, 0));
            for (unsigned i = 0; i < t; ++i)
                for (unsigned j = 0; j < t; ++j) {
                    long long s = 0;
                    for (unsigned k = 0; k < t; ++k) s += G[i][k] * A[k][j];
                    prod[i][j] = s;
                }
            work.push_back(normalize(prod));
        }
    }
    return out;
}

// Canonical form of a subgroup H <= ⊕ Z/m_i: the row-style Hermite normal
// form of the integer lattice spanned by lifted generators together with the
// rows m_i * e_i. Upper triangular, positive diagonal, entries above each
// pivot reduced into [0, pivot); unique, so equality of subgroups is
// bit-exact equality of forms.
struct SubgroupNF {
    std::vector<std::vector<long long>> rows;  // t x t
    uint64_t subgroup_order = 1;

    friend bool operator==(const SubgroupNF& a, const SubgroupNF& b) { return a.rows == b.rows; }
    friend bool operator<(const SubgroupNF& a, const SubgroupNF& b) { return a.rows < b.rows; }

    std::string key() const {
        std::string k;
        for (const auto& r : rows)
            for (long long v : r) { k += std::to_string(v); k += ','; }
        return k;
    }
};

inline SubgroupNF subgroup_normal_form(const AbelianPresentation& P,
                                       const std::vector<uint32_t>& generators) {
    const unsigned t = P.t();
    std::vector<std::vector<long long>> rows;
    for (uint32_t g : generators) {
        const std::vector<unsigned> v = P.decode(g);
        rows.emplace_back(v.begin(), v.end());
    }
    for (unsigned i = 0; i < t; ++i) {
        std::vector<long long> r(t, 0);
        r[i] = P.moduli[i];
        rows.push_back(std::move(r));
    }
    // Hermite normal form by integer row operations.
    unsigned pivot = 0;
    for (unsigned col = 0; col < t; ++col) {
        // Euclidean elimination below the pivot row.
        while (true) {
            unsigned best = 0;
            long long best_abs = 0;
            for (unsigned r = pivot; r < rows.size(); ++r) {
                const long long v = rows[r][col] < 0 ? -rows[r][col] : rows[r][col];
                if (v != 0 && (best_abs == 0 || v < best_abs)) { best_abs = v; best = r; }
            }
            if (best_abs == 0) break;
            std::swap(rows[pivot], rows[best]);
            bool done = true;
            for (unsigned r = pivot + 1; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                const long long q = rows[r][col] / rows[pivot][col];
                for (unsigned c = 0; c < t; ++c) rows[r][c] -= q * rows[pivot][c];
                if (rows[r][col] != 0) done = false;
            }
            if (done) break;
        }
        if (rows[pivot][col] == 0) throw std::logic_error("lattice lost full rank");
        if (rows[pivot][col] < 0)
            for (unsigned c = 0; c < t; ++c) rows[pivot][c] = -rows[pivot][c];
        ++pivot;
    }
    rows.resize(t);
    // Reduce entries above each pivot.
    for (unsigned col = 1; col < t; ++col) {
        const long long piv = rows[col][col];
        for (unsigned r = 0; r < col; ++r) {
            long long q = rows[r][col] / piv;
            if (rows[r][col] - q * piv < 0) q -= 1;
            if (q != 0)
                for (unsigned c = 0; c < t; ++c) rows[r][c] -= q * rows[col][c];
        }
    }
    SubgroupNF nf;
    nf.rows = std::move(rows);
    uint64_t det = 1;
    for (unsigned i = 0; i < t; ++i) det *= static_cast<uint64_t>(nf.rows[i][i]);
    nf.subgroup_order = P.order() / det;
    return nf;
}

inline bool nf_contains(const AbelianPresentation& P, const SubgroupNF& nf, uint32_t element) {
    const unsigned t = P.t();
    const std::vector<unsigned> dec = P.decode(element);
    std::vector<long long> v(dec.begin(), dec.end());
    for (unsigned col = 0; col < t; ++col) {
        if (v[col] % nf.rows[col][col] != 0) return false;
        const long long q = v[col] / nf.rows[col][col];
        for (unsigned c = 0; c < t; ++c) v[c] -= q * nf.rows[col][c];
    }
    return true;
}

// Members of the subgroup, ascending element indices.
inline std::vector<uint32_t> nf_elements(const AbelianPresentation& P, const SubgroupNF& nf) {
    std::set<uint32_t> members{0};
    std::vector<uint32_t> work{0};
    std::vector<uint32_t> gens;
    for (const auto& row : nf.rows) {
        std::vector<unsigned> v(P.t());
        for (unsigned i = 0; i < P.t(); ++i)
            v[i] = static_cast<unsigned>(((row[i] % P.moduli[i]) + P.moduli[i]) % P.moduli[i]);
        gens.push_back(P.encode(v));
    }
    while (!work.empty()) {
        const uint32_t x = work.back();
        work.pop_back();
        for (uint32_t g : gens) {
            const uint32_t y = P.add(x, g);
            if (members.insert(y).second) work.push_back(y);
        }
    }
    if (members.size() != nf.subgroup_order) throw std::logic_error("subgroup order mismatch");
    return {members.begin(), members.end()};
}

}  // namespace modlat
