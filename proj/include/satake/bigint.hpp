// bigint.hpp
// ----------
// Arbitrary-precision signed integers, sized for exact symbolic
// coefficient arithmetic. Coefficients in this library are almost always
// one or two limbs, so everything is schoolbook; division is shift-and-
// subtract. Sign-magnitude representation, little-endian base 2^32 limbs,
// no leading zero limbs, zero has an empty limb vector.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "satake/errors.hpp"

namespace satake {

class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        // avoid UB on LLONG_MIN
        unsigned long long u = v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL
                                     : static_cast<unsigned long long>(v);
        while (u != 0) {
            mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffULL));
            u >>= 32;
        }
    }

    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    explicit BigInt(std::string_view decimal) {
        bool neg = false;
        std::size_t i = 0;
        if (i < decimal.size() && (decimal[i] == '-' || decimal[i] == '+')) {
            neg = decimal[i] == '-';
            ++i;
        }
        if (i == decimal.size())
            throw parse_error("BigInt: empty decimal literal");
        BigInt acc;
        for (; i < decimal.size(); ++i) {
            char ch = decimal[i];
            if (ch < '0' || ch > '9')
                throw parse_error(std::string("BigInt: bad digit '") + ch + "'");
            acc = acc * BigInt(10) + BigInt(ch - '0');
        }
        *this = acc;
        if (neg && sign_ != 0) sign_ = -1;
    }

    bool is_zero() const { return sign_ == 0; }
    bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
    int signum() const { return sign_; }
    bool is_even() const { return mag_.empty() || (mag_[0] & 1u) == 0; }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return BigInt();
            if (c > 0) {
                r.mag_ = sub_mag(a.mag_, b.mag_);
                r.sign_ = a.sign_;
            } else {
                r.mag_ = sub_mag(b.mag_, a.mag_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.sign_ = a.sign_ * b.sign_;
        r.mag_ = mul_mag(a.mag_, b.mag_);
        return r;
    }

    // Truncated division: q = trunc(a/b), a = q*b + r, sign(r) = sign(a).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw input_error("BigInt: division by zero");
        if (a.sign_ == 0) {
            q = BigInt();
            r = BigInt();
            return;
        }
        if (cmp_mag(a.mag_, b.mag_) < 0) {
            q = BigInt();
            r = a;
            return;
        }
        std::vector<std::uint32_t> qm, rm;
        divmod_mag(a.mag_, b.mag_, qm, rm);
        q = BigInt();
        q.mag_ = std::move(qm);
        q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
        r = BigInt();
        r.mag_ = std::move(rm);
        r.sign_ = r.mag_.empty() ? 0 : a.sign_;
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }

    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    static BigInt gcd(const BigInt& a, const BigInt& b) {
        BigInt x = a.abs(), y = b.abs();
        while (!y.is_zero()) {
            BigInt q, r;
            divmod(x, y, q, r);
            x = std::move(y);
            y = std::move(r);
        }
        return x;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }

    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.sign_ >= 0 ? c < 0 : c > 0;
    }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    double to_double() const {
        double v = 0.0;
        for (std::size_t i = mag_.size(); i-- > 0;)
            v = v * 4294967296.0 + static_cast<double>(mag_[i]);
        return sign_ < 0 ? -v : v;
    }

    // Exact value when it fits, throws otherwise (used for dimensions).
    long long to_int64() const {
        unsigned long long u = 0;
        if (mag_.size() > 2) throw internal_error("BigInt: to_int64 overflow");
        for (std::size_t i = mag_.size(); i-- > 0;)
            u = (u << 32) | mag_[i];
        if (sign_ >= 0) {
            if (u > 0x7fffffffffffffffULL) throw internal_error("BigInt: to_int64 overflow");
            return static_cast<long long>(u);
        }
        if (u > 0x8000000000000000ULL) throw internal_error("BigInt: to_int64 overflow");
        return -static_cast<long long>(u - 1) - 1;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::string out;
        BigInt t = abs();
        const BigInt chunk(1000000000LL);
        std::vector<std::uint32_t> parts;
        while (!t.is_zero()) {
            BigInt q, r;
            divmod(t, chunk, q, r);
            parts.push_back(r.mag_.empty() ? 0u : r.mag_[0]);
            t = std::move(q);
        }
        out = std::to_string(parts.back());
        for (std::size_t i = parts.size() - 1; i-- > 0;) {
            std::string p = std::to_string(parts[i]);
            out += std::string(9 - p.size(), '0') + p;
        }
        return sign_ < 0 ? "-" + out : out;
    }

private:
    int sign_ = 0;
    std::vector<std::uint32_t> mag_;

    static void trim(std::vector<std::uint32_t>& m) {
        while (!m.empty() && m.back() == 0) m.pop_back();
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<std::uint32_t> r(big.size() + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < big.size(); ++i) {
            std::uint64_t cur = carry + big[i] + (i < small.size() ? small[i] : 0u);
            r[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        r[big.size()] = static_cast<std::uint32_t>(carry);
        trim(r);
        return r;
    }

    // requires a >= b
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size(), 0);
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow -
                               (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            if (cur < 0) {
                cur += 1LL << 32;
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<std::uint32_t>(cur);
        }
        trim(r);
        return r;
    }

    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * b[j] + r[i + j] + carry;
                r[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            r[i + b.size()] = static_cast<std::uint32_t>(carry);
        }
        trim(r);
        return r;
    }

    // shift-and-subtract long division on magnitudes; a >= b > 0
    static void divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
        q.assign(a.size(), 0);
        r.clear();
        for (std::size_t limb = a.size(); limb-- > 0;) {
            for (int bit = 31; bit >= 0; --bit) {
                // r = (r << 1) | bit(a)
                std::uint32_t carry = (a[limb] >> bit) & 1u;
                for (std::size_t i = 0; i < r.size(); ++i) {
                    std::uint32_t next = r[i] >> 31;
                    r[i] = (r[i] << 1) | carry;
                    carry = next;
                }
                if (carry) r.push_back(carry);
                if (cmp_mag(r, b) >= 0) {
                    r = sub_mag(r, b);
                    q[limb] |= 1u << bit;
                }
            }
        }
        trim(q);
        trim(r);
    }
};

} // namespace satake
