#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "modlat/bounds.hpp"

namespace modlat {

namespace detail {

inline bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Polynomials over F_p as coefficient vectors, constant term first.
using Poly = std::vector<unsigned>;

inline Poly poly_mod(Poly a, const Poly& m, unsigned p) {
    // m monic of degree deg(m); reduce a modulo m.
    const size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const unsigned lead = a.back();
        if (lead != 0) {
            const size_t shift = a.size() - 1 - dm;
            for (size_t i = 0; i <= dm; ++i)
                a[shift + i] = (a[shift + i] + p - (lead * m[i]) % p) % p;
        }
        a.pop_back();
    }
    return a;
}

inline Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return r;
}

// Exhaustive trial division by every monic polynomial of lower degree.
// Fine for the e <= 4, p^e <= 64 range this library admits.
inline bool poly_irreducible(const Poly& m, unsigned p) {
    const size_t deg = m.size() - 1;
    for (size_t d = 1; d < deg; ++d) {
        uint64_t count = 1;
        for (size_t i = 0; i < d; ++i) count *= p;
        for (uint64_t code = 0; code < count; ++code) {
            Poly div(d + 1, 0);
            uint64_t c = code;
            for (size_t i = 0; i < d; ++i) { div[i] = c % p; c /= p; }
            div[d] = 1;
            Poly rem = poly_mod(m, div, p);
            bool zero = true;
            for (unsigned x : rem) zero &= (x == 0);
            if (zero) return false;
        }
    }
    return true;
}

}  // namespace detail

// F_q with q = p^e <= 64, realized as dense add/mul/inv lookup tables.
// Elements are the integers 0..q-1; for e > 1 the integer's base-p digits are
// the coefficients of a residue polynomial modulo the reduction polynomial,
// which is the monic irreducible of degree e with the least such encoding.
// Copies share the immutable tables, so Field is a cheap value type.
class Field {
public:
    // field_make: validates p prime, 1 <= e <= 4, p^e <= 64.
    static Field make(unsigned p, unsigned e = 1) {
        if (!detail::is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
        if (e < 1 || e > kMaxExtensionDegree)
            throw std::invalid_argument("extension degree out of range");
        uint64_t q = 1;
        for (unsigned i = 0; i < e; ++i) q *= p;
        if (q > kMaxFieldSize) throw std::invalid_argument("field size exceeds cap");
        return Field(std::make_shared<Tables>(p, e, static_cast<unsigned>(q)));
    }

    // Convenience for q given as a prime power.
    static Field of_size(unsigned q) {
        for (unsigned p = 2; p <= q; ++p) {
            if (!detail::is_prime(p)) continue;
            unsigned e = 0;
            uint64_t v = 1;
            while (v < q) { v *= p; ++e; }
            if (v == q) return make(p, e);
        }
        throw std::invalid_argument("field size is not a prime power");
    }

    unsigned p() const { return t_->p; }
    unsigned e() const { return t_->e; }
    unsigned q() const { return t_->q; }
    const detail::Poly& reduction_poly() const { return t_->reduction; }

    uint8_t add(uint8_t a, uint8_t b) const { return t_->add[idx(a, b)]; }
    uint8_t mul(uint8_t a, uint8_t b) const { return t_->mul[idx(a, b)]; }
    uint8_t neg(uint8_t a) const { return t_->neg[check(a)]; }
    uint8_t sub(uint8_t a, uint8_t b) const { return add(a, neg(b)); }
    uint8_t inv(uint8_t a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        return t_->inv[check(a)];
    }
    uint8_t div(uint8_t a, uint8_t b) const { return mul(a, inv(b)); }

    bool valid(unsigned a) const { return a < t_->q; }

    friend bool operator==(const Field& a, const Field& b) {
        return a.t_->p == b.t_->p && a.t_->e == b.t_->e;
    }
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

private:
    struct Tables {
        unsigned p, e, q;
        detail::Poly reduction;  // e+1 coefficients, monic
        std::vector<uint8_t> add, mul, neg, inv;

        Tables(unsigned p_, unsigned e_, unsigned q_) : p(p_), e(e_), q(q_) {
            reduction = find_reduction();
            build();
        }

        detail::Poly find_reduction() const {
            if (e == 1) return {0, 1};  // t - 0; unused for arithmetic
            for (unsigned code = 0; code < q; ++code) {
                detail::Poly m(e + 1, 0);
                unsigned c = code;
                for (unsigned i = 0; i < e; ++i) { m[i] = c % p; c /= p; }
                m[e] = 1;
                if (detail::poly_irreducible(m, p)) return m;
            }
            throw std::logic_error("no irreducible polynomial found");
        }

        detail::Poly decode(unsigned x) const {
            detail::Poly c(e, 0);
            for (unsigned i = 0; i < e; ++i) { c[i] = x % p; x /= p; }
            return c;
        }
        unsigned encode(const detail::Poly& c) const {
            unsigned x = 0;
            for (size_t i = c.size(); i-- > 0;) x = x * p + c[i];
            return x;
        }

        void build() {
            add.assign(static_cast<size_t>(q) * q, 0);
            mul.assign(static_cast<size_t>(q) * q, 0);
            neg.assign(q, 0);
            inv.assign(q, 0);
            for (unsigned a = 0; a < q; ++a) {
                const detail::Poly pa = decode(a);
                for (unsigned b = 0; b < q; ++b) {
                    const detail::Poly pb = decode(b);
                    detail::Poly s(e, 0);
                    for (unsigned i = 0; i < e; ++i) s[i] = (pa[i] + pb[i]) % p;
                    add[static_cast<size_t>(a) * q + b] = static_cast<uint8_t>(encode(s));
                    detail::Poly m = detail::poly_mod(detail::poly_mul(pa, pb, p), reduction, p);
                    m.resize(e, 0);
                    mul[static_cast<size_t>(a) * q + b] = static_cast<uint8_t>(encode(m));
                }
                detail::Poly n(e, 0);
                for (unsigned i = 0; i < e; ++i) n[i] = (p - pa[i]) % p;
                neg[a] = static_cast<uint8_t>(encode(n));
            }
            for (unsigned a = 1; a < q; ++a) {
                bool found = false;
                for (unsigned b = 1; b < q; ++b)
                    if (mul[static_cast<size_t>(a) * q + b] == 1) { inv[a] = static_cast<uint8_t>(b); found = true; break; }
                if (!found) throw std::logic_error("non-invertible nonzero element");
            }
        }
    };

    explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}

    size_t idx(uint8_t a, uint8_t b) const {
        return static_cast<size_t>(check(a)) * t_->q + check(b);
    }
    uint8_t check(uint8_t a) const {
        if (a >= t_->q) throw std::invalid_argument("element outside field");
        return a;
    }

    std::shared_ptr<const Tables> t_;
};

// Spec-facing alias: field_make(p, e).
inline Field field_make(unsigned p, unsigned e = 1) { return Field::make(p, e); }

}  // namespace modlat
