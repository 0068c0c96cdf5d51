#ifndef HOLLOW_RATIONAL_HPP
#define HOLLOW_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hollow/errors.hpp"

namespace hollow {

// Arbitrary-precision unsigned integer, base 2^32.  Only the handful of
// operations the weight machinery needs; word counts stay tiny in
// practice so schoolbook everything.
class Nat {
public:
    Nat() = default;
    Nat(std::uint64_t v) {
        if (v) {
            limbs_.push_back(static_cast<std::uint32_t>(v));
            if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
        }
    }

    bool is_zero() const { return limbs_.empty(); }
    bool fits_u64() const { return limbs_.size() <= 2; }
    std::uint64_t to_u64() const {
        std::uint64_t v = limbs_.empty() ? 0 : limbs_[0];
        if (limbs_.size() > 1) v |= static_cast<std::uint64_t>(limbs_[1]) << 32;
        return v;
    }

    static int cmp(const Nat& a, const Nat& b) {
        if (a.limbs_.size() != b.limbs_.size())
            return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
        for (std::size_t i = a.limbs_.size(); i-- > 0;) {
            if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
        }
        return 0;
    }

    friend Nat operator+(const Nat& a, const Nat& b) {
        Nat r;
        const std::size_t n = std::max(a.limbs_.size(), b.limbs_.size());
        r.limbs_.resize(n);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t s = carry;
            if (i < a.limbs_.size()) s += a.limbs_[i];
            if (i < b.limbs_.size()) s += b.limbs_[i];
            r.limbs_[i] = static_cast<std::uint32_t>(s);
            carry = s >> 32;
        }
        if (carry) r.limbs_.push_back(static_cast<std::uint32_t>(carry));
        return r;
    }

    // Requires a >= b.
    friend Nat operator-(const Nat& a, const Nat& b) {
        Nat r;
        r.limbs_.resize(a.limbs_.size());
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::int64_t d = static_cast<std::int64_t>(a.limbs_[i]) - borrow -
                             (i < b.limbs_.size() ? b.limbs_[i] : 0);
            borrow = 0;
            if (d < 0) {
                d += (1ll << 32);
                borrow = 1;
            }
            r.limbs_[i] = static_cast<std::uint32_t>(d);
        }
        r.trim();
        return r;
    }

    friend Nat operator*(const Nat& a, const Nat& b) {
        if (a.is_zero() || b.is_zero()) return Nat();
        Nat r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                std::uint64_t cur = r.limbs_[i + j] + carry +
                                    static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j];
                r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            r.limbs_[i + b.limbs_.size()] += static_cast<std::uint32_t>(carry);
        }
        r.trim();
        return r;
    }

    bool even() const { return limbs_.empty() || !(limbs_[0] & 1); }

    void shr1() {
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            limbs_[i] >>= 1;
            if (i + 1 < limbs_.size() && (limbs_[i + 1] & 1))
                limbs_[i] |= 0x80000000u;
        }
        trim();
    }

    void shl1() {
        std::uint32_t carry = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            std::uint32_t next = limbs_[i] >> 31;
            limbs_[i] = (limbs_[i] << 1) | carry;
            carry = next;
        }
        if (carry) limbs_.push_back(carry);
    }

    int bit_length() const {
        if (limbs_.empty()) return 0;
        int hi = 32;
        std::uint32_t top = limbs_.back();
        while (!(top & 0x80000000u)) {
            top <<= 1;
            --hi;
        }
        return static_cast<int>(32 * (limbs_.size() - 1)) + hi;
    }

    bool bit(int i) const {
        std::size_t limb = static_cast<std::size_t>(i) / 32;
        if (limb >= limbs_.size()) return false;
        return (limbs_[limb] >> (i % 32)) & 1;
    }

    // Binary long division; returns {quotient, remainder}.
    static std::pair<Nat, Nat> divmod(const Nat& a, const Nat& b) {
        Nat q, r;
        for (int i = a.bit_length() - 1; i >= 0; --i) {
            r.shl1();
            if (a.bit(i)) {
                if (r.limbs_.empty()) r.limbs_.push_back(1);
                else r.limbs_[0] |= 1;
            }
            q.shl1();
            if (cmp(r, b) >= 0) {
                r = r - b;
                if (q.limbs_.empty()) q.limbs_.push_back(1);
                else q.limbs_[0] |= 1;
            }
        }
        return {q, r};
    }

    static Nat gcd(Nat a, Nat b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        int shift = 0;
        while (a.even() && b.even()) {
            a.shr1();
            b.shr1();
            ++shift;
        }
        while (a.even()) a.shr1();
        while (!b.is_zero()) {
            while (b.even()) b.shr1();
            if (cmp(a, b) > 0) std::swap(a, b);
            b = b - a;
        }
        while (shift--) a.shl1();
        return a;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        Nat ten(10), cur = *this;
        std::string out;
        while (!cur.is_zero()) {
            auto [q, r] = divmod(cur, ten);
            out.push_back(static_cast<char>('0' + (r.is_zero() ? 0 : r.limbs_[0])));
            cur = std::move(q);
        }
        return {out.rbegin(), out.rend()};
    }

private:
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }
    std::vector<std::uint32_t> limbs_;  // little-endian, no leading zeros
};

// Exact rational, always reduced, denominator > 0.
class Rational {
public:
    Rational() : neg_(false), num_(0), den_(1) {}
    Rational(std::int64_t n) : neg_(n < 0), num_(n < 0 ? -(std::uint64_t)n : n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) {
        neg_ = (n < 0) != (d < 0);
        num_ = Nat(n < 0 ? -(std::uint64_t)n : (std::uint64_t)n);
        den_ = Nat(d < 0 ? -(std::uint64_t)d : (std::uint64_t)d);
        reduce();
    }
    Rational(Nat n, Nat d, bool neg = false)
        : neg_(neg), num_(std::move(n)), den_(std::move(d)) {
        reduce();
    }

    bool is_zero() const { return num_.is_zero(); }
    bool negative() const { return neg_; }
    const Nat& num() const { return num_; }
    const Nat& den() const { return den_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        // signed cross products
        Nat lhs = a.num_ * b.den_;
        Nat rhs = b.num_ * a.den_;
        Nat den = a.den_ * b.den_;
        if (a.neg_ == b.neg_) return Rational(lhs + rhs, std::move(den), a.neg_);
        if (Nat::cmp(lhs, rhs) >= 0) return Rational(lhs - rhs, std::move(den), a.neg_);
        return Rational(rhs - lhs, std::move(den), b.neg_);
    }

    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational nb = b;
        if (!nb.is_zero()) nb.neg_ = !nb.neg_;
        return a + nb;
    }

    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_, a.neg_ != b.neg_);
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_, a.den_ * b.num_, a.neg_ != b.neg_);
    }

    static int cmp(const Rational& a, const Rational& b) {
        if (a.neg_ != b.neg_) return a.neg_ ? -1 : 1;
        int c = Nat::cmp(a.num_ * b.den_, b.num_ * a.den_);
        return a.neg_ ? -c : c;
    }
    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a, b) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a, b) >= 0; }

    std::string to_string() const {
        std::string s = neg_ ? "-" : "";
        s += num_.to_string();
        if (Nat::cmp(den_, Nat(1)) != 0) s += "/" + den_.to_string();
        return s;
    }

private:
    void reduce() {
        if (den_.is_zero()) throw InvalidArgumentError("rational with zero denominator");
        if (num_.is_zero()) {
            neg_ = false;
            den_ = Nat(1);
            return;
        }
        Nat g = Nat::gcd(num_, den_);
        if (Nat::cmp(g, Nat(1)) != 0) {
            num_ = Nat::divmod(num_, g).first;
            den_ = Nat::divmod(den_, g).first;
        }
    }

    bool neg_;
    Nat num_;
    Nat den_;
};

}  // namespace hollow

#endif
