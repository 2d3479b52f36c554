#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "modlat/field.hpp"

namespace modlat {

// Dense matrix over F_q, row-major. Subspaces are carried as RREF bases
// (rows = basis vectors, no zero rows), whose bit-exact equality is the
// canonical subspace identity used everywhere for dedup and hashing.
struct FqMatrix {
    Field field;
    unsigned rows = 0;
    unsigned cols = 0;
    std::vector<uint8_t> a;  // rows*cols entries

    FqMatrix(Field f, unsigned r, unsigned c)
        : field(std::move(f)), rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    static FqMatrix zero(const Field& f, unsigned r, unsigned c) { return FqMatrix(f, r, c); }
    static FqMatrix identity(const Field& f, unsigned n) {
        FqMatrix m(f, n, n);
        for (unsigned i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    uint8_t& at(unsigned r, unsigned c) { return a[static_cast<size_t>(r) * cols + c]; }
    uint8_t at(unsigned r, unsigned c) const { return a[static_cast<size_t>(r) * cols + c]; }

    void check_entries() const {
        for (uint8_t x : a)
            if (!field.valid(x)) throw std::invalid_argument("matrix entry outside field");
    }

    friend bool operator==(const FqMatrix& x, const FqMatrix& y) {
        return x.field == y.field && x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
    friend bool operator!=(const FqMatrix& x, const FqMatrix& y) { return !(x == y); }

    // Deterministic ordering / map key.
    std::string key() const {
        std::string k;
        k.reserve(a.size() + 8);
        k += static_cast<char>(rows);
        k += static_cast<char>(cols);
        for (uint8_t x : a) k += static_cast<char>(x);
        return k;
    }
};

// Reduced row echelon form; returns (rref, rank). Zero rows are kept so the
// shape matches the input; use basis() to strip them.
inline std::pair<FqMatrix, unsigned> rref(FqMatrix m) {
    m.check_entries();
    const Field& F = m.field;
    unsigned pivot_row = 0;
    for (unsigned col = 0; col < m.cols && pivot_row < m.rows; ++col) {
        unsigned sel = pivot_row;
        while (sel < m.rows && m.at(sel, col) == 0) ++sel;
        if (sel == m.rows) continue;
        if (sel != pivot_row)
            for (unsigned c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(pivot_row, c));
        const uint8_t piv_inv = F.inv(m.at(pivot_row, col));
        for (unsigned c = 0; c < m.cols; ++c) m.at(pivot_row, c) = F.mul(m.at(pivot_row, c), piv_inv);
        for (unsigned r = 0; r < m.rows; ++r) {
            if (r == pivot_row) continue;
            const uint8_t factor = m.at(r, col);
            if (factor == 0) continue;
            for (unsigned c = 0; c < m.cols; ++c)
                m.at(r, c) = F.sub(m.at(r, c), F.mul(factor, m.at(pivot_row, c)));
        }
        ++pivot_row;
    }
    return {std::move(m), pivot_row};
}

inline bool is_rref(const FqMatrix& m) {
    int last_pivot = -1;
    unsigned seen_zero_row = 0;
    for (unsigned r = 0; r < m.rows; ++r) {
        int pivot = -1;
        for (unsigned c = 0; c < m.cols; ++c)
            if (m.at(r, c) != 0) { pivot = static_cast<int>(c); break; }
        if (pivot < 0) { seen_zero_row = 1; continue; }
        if (seen_zero_row) return false;          // nonzero row after a zero row
        if (pivot <= last_pivot) return false;    // pivots strictly increase
        if (m.at(r, static_cast<unsigned>(pivot)) != 1) return false;
        for (unsigned rr = 0; rr < m.rows; ++rr)
            if (rr != r && m.at(rr, static_cast<unsigned>(pivot)) != 0) return false;
        last_pivot = pivot;
    }
    return true;
}

// RREF basis with zero rows stripped: the canonical subspace representative.
inline FqMatrix subspace_basis(const FqMatrix& m) {
    auto [red, rank] = rref(m);
    FqMatrix b(red.field, rank, red.cols);
    for (unsigned r = 0; r < rank; ++r)
        for (unsigned c = 0; c < red.cols; ++c) b.at(r, c) = red.at(r, c);
    return b;
}

inline FqMatrix stack_rows(const FqMatrix& a, const FqMatrix& b) {
    if (a.field != b.field || a.cols != b.cols)
        throw std::invalid_argument("ambient mismatch in row stack");
    FqMatrix s(a.field, a.rows + b.rows, a.cols);
    std::copy(a.a.begin(), a.a.end(), s.a.begin());
    std::copy(b.a.begin(), b.a.end(), s.a.begin() + a.a.size());
    return s;
}

inline FqMatrix subspace_join(const FqMatrix& a, const FqMatrix& b) {
    return subspace_basis(stack_rows(a, b));
}

// Zassenhaus: row-reduce [A A / B 0]; rows with zero left half carry an
// intersection basis in their right half.
inline FqMatrix subspace_meet(const FqMatrix& a, const FqMatrix& b) {
    if (a.field != b.field || a.cols != b.cols)
        throw std::invalid_argument("ambient mismatch in subspace meet");
    const unsigned n = a.cols;
    FqMatrix z(a.field, a.rows + b.rows, 2 * n);
    for (unsigned r = 0; r < a.rows; ++r)
        for (unsigned c = 0; c < n; ++c) { z.at(r, c) = a.at(r, c); z.at(r, n + c) = a.at(r, c); }
    for (unsigned r = 0; r < b.rows; ++r)
        for (unsigned c = 0; c < n; ++c) z.at(a.rows + r, c) = b.at(r, c);
    auto [red, rank] = rref(std::move(z));
    (void)rank;
    std::vector<unsigned> meet_rows;
    for (unsigned r = 0; r < red.rows; ++r) {
        bool left_zero = true;
        for (unsigned c = 0; c < n; ++c) left_zero &= (red.at(r, c) == 0);
        bool right_zero = true;
        for (unsigned c = 0; c < n; ++c) right_zero &= (red.at(r, n + c) == 0);
        if (left_zero && !right_zero) meet_rows.push_back(r);
    }
    FqMatrix m(a.field, static_cast<unsigned>(meet_rows.size()), n);
    for (unsigned i = 0; i < meet_rows.size(); ++i)
        for (unsigned c = 0; c < n; ++c) m.at(i, c) = red.at(meet_rows[i], n + c);
    return subspace_basis(m);
}

inline std::pair<FqMatrix, FqMatrix> subspace_meet_join(const FqMatrix& a, const FqMatrix& b) {
    return {subspace_meet(a, b), subspace_join(a, b)};
}

// rowspace(a) >= rowspace(b)?
inline bool subspace_contains(const FqMatrix& a, const FqMatrix& b) {
    return subspace_join(a, b).rows == subspace_basis(a).rows;
}

// All q^rank vectors spanned by an RREF basis (ambient-encoded rows).
inline std::vector<std::vector<uint8_t>> subspace_vectors(const FqMatrix& basis) {
    const Field& F = basis.field;
    std::vector<std::vector<uint8_t>> out;
    std::vector<uint8_t> coeff(basis.rows, 0);
    while (true) {
        std::vector<uint8_t> v(basis.cols, 0);
        for (unsigned r = 0; r < basis.rows; ++r)
            if (coeff[r] != 0)
                for (unsigned c = 0; c < basis.cols; ++c)
                    v[c] = F.add(v[c], F.mul(coeff[r], basis.at(r, c)));
        out.push_back(std::move(v));
        unsigned i = 0;
        while (i < basis.rows && coeff[i] == F.q() - 1) coeff[i++] = 0;
        if (i == basis.rows) break;
        ++coeff[i];
    }
    return out;
}

}  // namespace modlat
