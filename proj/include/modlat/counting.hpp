#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "modlat/bigint.hpp"
#include "modlat/module.hpp"

namespace modlat {

// d-ary Gaussian binomial coefficient: the number of m-dimensional subspaces
// of an n-dimensional space over a field (or division ring) of size d.
// Computed by the q-Pascal recurrence C(n,m) = C(n-1,m-1) + d^m C(n-1,m),
// which stays in integers; the product formula
//   prod_{k=1..m} (d^n - d^{k-1}) / (d^m - d^{k-1})
// is then re-verified by multiplying the result back against the accumulated
// denominator, so the advertised exact division is checked on every call.
inline BigUint gaussian_binomial(unsigned n, unsigned m, unsigned d) {
    if (d < 2) throw std::invalid_argument("gaussian binomial needs d >= 2");
    if (m > n) throw std::invalid_argument("gaussian binomial needs m <= n");
    std::vector<std::vector<BigUint>> c(n + 1, std::vector<BigUint>(m + 1, BigUint{0}));
    for (unsigned i = 0; i <= n; ++i) {
        c[i][0] = BigUint{1};
        for (unsigned j = 1; j <= std::min(i, m); ++j) {
            c[i][j] = (j == i) ? BigUint{1}
                               : c[i - 1][j - 1] + BigUint::pow(BigUint{d}, j) * c[i - 1][j];
        }
    }
    const BigUint result = c[n][m];
    BigUint num{1}, den{1};
    for (unsigned k = 1; k <= m; ++k) {
        num *= BigUint::pow(BigUint{d}, n) - BigUint::pow(BigUint{d}, k - 1);
        den *= BigUint::pow(BigUint{d}, m) - BigUint::pow(BigUint{d}, k - 1);
    }
    if (result * den != num) throw std::logic_error("gaussian binomial division not exact");
    return result;
}

// (d^n - 1)/(d - 1), the number of maximal submodules of n copies of a simple
// with endomorphism ring of size d; evaluated as the geometric sum.
inline BigUint count_maximal_homogeneous(unsigned n, unsigned d) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    if (d < 2) throw std::invalid_argument("need d >= 2");
    BigUint sum{0}, power{1};
    for (unsigned i = 0; i < n; ++i) { sum += power; power *= BigUint{d}; }
    return sum;
}

inline void require_semisimple_model(const ModuleSpec& spec) {
    if (!spec.is_semisimple_model())
        throw std::invalid_argument("closed form needs the semisimple model");
}

// Sum of per-component maximal counts.
inline BigUint count_maximal(const ModuleSpec& spec) {
    require_semisimple_model(spec);
    BigUint total{0};
    for (const auto& c : spec.components()) total += count_maximal_homogeneous(c.mult, c.field.q());
    return total;
}

// Number of submodules of composition length i: sum over the compositions
// (i_1,...,i_r) of i with i_k <= n_k of the product of per-component
// Gaussian binomials.
inline BigUint count_by_length(const ModuleSpec& spec, unsigned i) {
    require_semisimple_model(spec);
    const auto& comps = spec.components();
    if (i > composition_length(spec)) throw std::invalid_argument("length out of range");
    BigUint total{0};
    std::vector<unsigned> pick(comps.size(), 0);
    const auto rec = [&](auto&& self, size_t k, unsigned remaining) -> void {
        if (k == comps.size()) {
            if (remaining != 0) return;
            BigUint prod{1};
            for (size_t j = 0; j < comps.size(); ++j)
                prod *= gaussian_binomial(comps[j].mult, pick[j], comps[j].field.q());
            total += prod;
            return;
        }
        for (unsigned v = 0; v <= std::min(comps[k].mult, remaining); ++v) {
            pick[k] = v;
            self(self, k + 1, remaining - v);
        }
    };
    rec(rec, 0, i);
    return total;
}

// Full strata vector with the structural invariants asserted.
struct StrataCounts {
    std::vector<BigUint> mu;  // mu[0..n]
    BigUint total;
};

inline StrataCounts strata_counts(const ModuleSpec& spec) {
    require_semisimple_model(spec);
    const unsigned n = composition_length(spec);
    StrataCounts s;
    s.total = BigUint{0};
    for (unsigned i = 0; i <= n; ++i) {
        s.mu.push_back(count_by_length(spec, i));
        s.total += s.mu.back();
    }
    if (s.mu.front() != BigUint{1} || s.mu.back() != BigUint{1})
        throw std::logic_error("strata must start and end at 1");
    return s;
}

// Number of length-i submodules W of nS with meet of length m against a fixed
// length-j submodule: d^{(i-m)(j-m)} C(n-j, i-m)_d C(j, m)_d.
inline BigUint count_intersecting(unsigned n, unsigned d, unsigned j, unsigned i, unsigned m) {
    if (j > n || i > n) throw std::invalid_argument("length exceeds ambient");
    if (m > i || m > j) throw std::invalid_argument("meet length exceeds a side");
    if (i - m > n - j) throw std::invalid_argument("i - m must not exceed n - j");
    return BigUint::pow(BigUint{d}, (i - m) * (j - m)) * gaussian_binomial(n - j, i - m, d) *
           gaussian_binomial(j, m, d);
}

// Number of complements of a submodule with per-component multiplicities m_k:
// prod_k d_k^{(n_k - m_k) m_k}.
inline BigUint count_complements(const ModuleSpec& spec, const std::vector<unsigned>& sub_mults) {
    require_semisimple_model(spec);
    const auto& comps = spec.components();
    if (sub_mults.size() != comps.size())
        throw std::invalid_argument("one multiplicity per component required");
    BigUint total{1};
    for (size_t k = 0; k < comps.size(); ++k) {
        if (sub_mults[k] > comps[k].mult) throw std::invalid_argument("multiplicity out of range");
        total *= BigUint::pow(BigUint{comps[k].field.q()},
                              (comps[k].mult - sub_mults[k]) * sub_mults[k]);
    }
    return total;
}

// Per-component multiplicities of a semisimple-model submodule.
inline std::vector<unsigned> component_multiplicities(const Submodule& s) {
    std::vector<unsigned> m;
    for (const FqMatrix& b : s.bases) m.push_back(b.rows);
    return m;
}

struct DominationFacts {
    bool is_simple = false;
    bool is_semisimple = false;
    bool homogeneous = false;   // a single isotypic class
    uint64_t end_size = 0;      // |End| of the simple, when homogeneous
};

// Domination number of the intersection graph, by structure: 0 for a simple
// module, 1 when not semisimple, 2 for semisimple with two isotypic classes,
// |End(S)| + 1 for homogeneous semisimple of length >= 2.
inline uint64_t domination_formula(const DominationFacts& f) {
    if (f.is_simple) return 0;
    if (!f.is_semisimple) return 1;
    if (!f.homogeneous) return 2;
    return f.end_size + 1;
}

// Chromatic number of the intersection graph of a semisimple module of
// length n > 2 (every relevant endomorphism ring finite in our models):
//   n = 2k-1 odd:  sum_{i=k}^{n-1} mu_i
//   n = 2k even, some multiplicity odd:  mu_k/2 + sum_{i=k+1}^{n-1} mu_i
//   all multiplicities even: open, reported as unsupported (nullopt).
inline std::optional<BigUint> chromatic_formula(const ModuleSpec& spec) {
    require_semisimple_model(spec);
    const unsigned n = composition_length(spec);
    if (n <= 2) throw std::invalid_argument("chromatic formula needs length > 2");
    bool some_odd = false;
    for (const auto& c : spec.components()) some_odd |= (c.mult % 2) == 1;
    if (n % 2 == 1) {
        const unsigned k = (n + 1) / 2;
        BigUint total{0};
        for (unsigned i = k; i <= n - 1; ++i) total += count_by_length(spec, i);
        return total;
    }
    if (!some_odd) return std::nullopt;  // open case
    const unsigned k = n / 2;
    BigUint total = count_by_length(spec, k).half();  // mu_k is even here
    for (unsigned i = k + 1; i <= n - 1; ++i) total += count_by_length(spec, i);
    return total;
}

}  // namespace modlat
