#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace modlat {

// Unsigned arbitrary-precision integer. Counts in this library are exact by
// contract, and submodule counts outgrow 64 bits quickly (q-binomials are
// exponential in n*m), so everything countable is carried as a BigUint.
// Little-endian 32-bit limbs, no trailing zero limbs.
class BigUint {
public:
    BigUint() = default;
    BigUint(uint64_t v) {
        while (v) {
            limbs_.push_back(static_cast<uint32_t>(v & 0xffffffffu));
            v >>= 32;
        }
    }

    bool is_zero() const { return limbs_.empty(); }

    friend bool operator==(const BigUint& a, const BigUint& b) { return a.limbs_ == b.limbs_; }
    friend bool operator!=(const BigUint& a, const BigUint& b) { return !(a == b); }
    friend bool operator<(const BigUint& a, const BigUint& b) {
        if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size();
        for (size_t i = a.limbs_.size(); i-- > 0;)
            if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i];
        return false;
    }
    friend bool operator>(const BigUint& a, const BigUint& b) { return b < a; }
    friend bool operator<=(const BigUint& a, const BigUint& b) { return !(b < a); }
    friend bool operator>=(const BigUint& a, const BigUint& b) { return !(a < b); }

    BigUint& operator+=(const BigUint& o) {
        uint64_t carry = 0;
        const size_t n = std::max(limbs_.size(), o.limbs_.size());
        limbs_.resize(n, 0);
        for (size_t i = 0; i < n; ++i) {
            uint64_t s = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0u);
            limbs_[i] = static_cast<uint32_t>(s);
            carry = s >> 32;
        }
        if (carry) limbs_.push_back(static_cast<uint32_t>(carry));
        return *this;
    }
    friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }

    // Requires *this >= o.
    BigUint& operator-=(const BigUint& o) {
        if (*this < o) throw std::underflow_error("BigUint subtraction underflow");
        int64_t borrow = 0;
        for (size_t i = 0; i < limbs_.size(); ++i) {
            int64_t d = static_cast<int64_t>(limbs_[i]) - borrow -
                        (i < o.limbs_.size() ? static_cast<int64_t>(o.limbs_[i]) : 0);
            borrow = d < 0;
            if (d < 0) d += (int64_t{1} << 32);
            limbs_[i] = static_cast<uint32_t>(d);
        }
        trim();
        return *this;
    }
    friend BigUint operator-(BigUint a, const BigUint& b) { return a -= b; }

    friend BigUint operator*(const BigUint& a, const BigUint& b) {
        if (a.is_zero() || b.is_zero()) return BigUint{};
        BigUint r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (size_t i = 0; i < a.limbs_.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.limbs_.size(); ++j) {
                uint64_t cur = r.limbs_[i + j] +
                               static_cast<uint64_t>(a.limbs_[i]) * b.limbs_[j] + carry;
                r.limbs_[i + j] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
            }
            size_t k = i + b.limbs_.size();
            while (carry) {
                uint64_t cur = r.limbs_[k] + carry;
                r.limbs_[k] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        r.trim();
        return r;
    }
    BigUint& operator*=(const BigUint& o) { return *this = *this * o; }

    static BigUint pow(const BigUint& base, unsigned exp) {
        BigUint r{1};
        for (unsigned i = 0; i < exp; ++i) r *= base;
        return r;
    }

    // Exact division by two; throws on odd values.
    BigUint half() const {
        if (!limbs_.empty() && (limbs_[0] & 1u)) throw std::domain_error("halving an odd BigUint");
        BigUint r = *this;
        uint32_t carry = 0;
        for (size_t i = r.limbs_.size(); i-- > 0;) {
            const uint32_t next_carry = r.limbs_[i] & 1u;
            r.limbs_[i] = (r.limbs_[i] >> 1) | (carry << 31);
            carry = next_carry;
        }
        r.trim();
        return r;
    }

    bool fits_uint64() const { return limbs_.size() <= 2; }
    uint64_t to_uint64() const {
        if (!fits_uint64()) throw std::overflow_error("BigUint does not fit in 64 bits");
        uint64_t v = 0;
        for (size_t i = limbs_.size(); i-- > 0;) v = (v << 32) | limbs_[i];
        return v;
    }

    std::string str() const {
        if (is_zero()) return "0";
        BigUint tmp = *this;
        std::string out;
        while (!tmp.is_zero()) {
            uint32_t rem = tmp.divmod_small(1000000000u);
            std::string chunk = std::to_string(rem);
            if (!tmp.is_zero()) chunk.insert(0, 9 - chunk.size(), '0');
            out.insert(0, chunk);
        }
        return out;
    }

private:
    std::vector<uint32_t> limbs_;

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }

    // In-place division by a small divisor; returns the remainder.
    uint32_t divmod_small(uint32_t d) {
        uint64_t rem = 0;
        for (size_t i = limbs_.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | limbs_[i];
            limbs_[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        trim();
        return static_cast<uint32_t>(rem);
    }
};

inline std::string to_string(const BigUint& v) { return v.str(); }

}  // namespace modlat
