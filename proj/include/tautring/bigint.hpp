#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tautring {

// Arbitrary-precision signed integer. Sign-magnitude with base-2^32 limbs,
// little-endian, no leading zero limbs; zero is sign 0 with an empty limb vector.
class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        // avoid UB on LLONG_MIN
        unsigned long long m = v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL
                                     : static_cast<unsigned long long>(v);
        while (m != 0) {
            mag_.push_back(static_cast<uint32_t>(m & 0xffffffffULL));
            m >>= 32;
        }
    }

    static BigInt from_string(std::string_view s) {
        if (s.empty()) throw std::invalid_argument("BigInt: empty string");
        int sign = 1;
        size_t i = 0;
        if (s[0] == '-') { sign = -1; i = 1; }
        else if (s[0] == '+') { i = 1; }
        if (i == s.size()) throw std::invalid_argument("BigInt: no digits");
        BigInt r;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("BigInt: bad digit in \"" + std::string(s) + "\"");
            r.mul_small_add(10, static_cast<uint32_t>(s[i] - '0'));
        }
        if (!r.mag_.empty()) r.sign_ = sign;
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    bool fits_int64() const {
        if (mag_.size() > 2) return false;
        unsigned long long m = magnitude_u64();
        if (sign_ >= 0) return m <= 0x7fffffffffffffffULL;
        return m <= 0x8000000000000000ULL;
    }

    long long to_int64() const {
        if (!fits_int64()) throw std::overflow_error("BigInt: does not fit int64");
        unsigned long long m = magnitude_u64();
        if (sign_ < 0) return -static_cast<long long>(m - 1) - 1;
        return static_cast<long long>(m);
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return compare(a, b) < 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return compare(a, b) > 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return compare(a, b) <= 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return compare(a, b) >= 0; }

    static int compare(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
        int c = compare_mag(a.mag_, b.mag_);
        return a.sign_ >= 0 ? c : -c;
    }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
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
            int c = compare_mag(a.mag_, b.mag_);
            if (c == 0) return BigInt();
            if (c > 0) { r.mag_ = sub_mag(a.mag_, b.mag_); r.sign_ = a.sign_; }
            else       { r.mag_ = sub_mag(b.mag_, a.mag_); r.sign_ = b.sign_; }
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.mag_ = mul_mag(a.mag_, b.mag_);
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    // Truncated division: quotient rounds toward zero, remainder takes the
    // dividend's sign, a == q*b + r with |r| < |b|.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        if (a.sign_ == 0) { q = BigInt(); r = BigInt(); return; }
        int c = compare_mag(a.mag_, b.mag_);
        if (c < 0) { q = BigInt(); r = a; return; }
        std::vector<uint32_t> qm, rm;
        if (c == 0) {
            qm.assign(1, 1);
        } else if (b.mag_.size() == 1) {
            uint32_t rem;
            qm = divmod_small(a.mag_, b.mag_[0], rem);
            if (rem) rm.assign(1, rem);
        } else {
            divmod_mag(a.mag_, b.mag_, qm, rm);
        }
        q = BigInt();
        q.mag_ = std::move(qm);
        trim(q.mag_);
        if (!q.mag_.empty()) q.sign_ = a.sign_ * b.sign_;
        r = BigInt();
        r.mag_ = std::move(rm);
        trim(r.mag_);
        if (!r.mag_.empty()) r.sign_ = a.sign_;
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

    static BigInt gcd(BigInt a, BigInt b) {
        a.sign_ = a.mag_.empty() ? 0 : 1;
        b.sign_ = b.mag_.empty() ? 0 : 1;
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    BigInt pow(unsigned e) const {
        BigInt base = *this, acc(1);
        while (e) {
            if (e & 1) acc *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return acc;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::vector<uint32_t> m = mag_;
        std::string digits;
        while (!m.empty()) {
            uint32_t rem;
            m = divmod_small(m, 1000000000u, rem);
            trim(m);
            std::string chunk = std::to_string(rem);
            if (!m.empty())
                chunk.insert(0, 9 - chunk.size(), '0');
            digits.insert(0, chunk);
        }
        return sign_ < 0 ? "-" + digits : digits;
    }

private:
    int sign_ = 0;
    std::vector<uint32_t> mag_;

    unsigned long long magnitude_u64() const {
        unsigned long long m = 0;
        if (mag_.size() > 1) m = static_cast<unsigned long long>(mag_[1]) << 32;
        if (!mag_.empty()) m |= mag_[0];
        return m;
    }

    void mul_small_add(uint32_t mul, uint32_t add) {
        uint64_t carry = add;
        for (auto& limb : mag_) {
            uint64_t v = static_cast<uint64_t>(limb) * mul + carry;
            limb = static_cast<uint32_t>(v);
            carry = v >> 32;
        }
        if (carry) mag_.push_back(static_cast<uint32_t>(carry));
    }

    static void trim(std::vector<uint32_t>& m) {
        while (!m.empty() && m.back() == 0) m.pop_back();
    }

    static int compare_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r(big.size());
        uint64_t carry = 0;
        for (size_t i = 0; i < big.size(); ++i) {
            uint64_t v = carry + big[i] + (i < small.size() ? small[i] : 0);
            r[i] = static_cast<uint32_t>(v);
            carry = v >> 32;
        }
        if (carry) r.push_back(static_cast<uint32_t>(carry));
        return r;
    }

    // requires a >= b
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r(a.size());
        int64_t borrow = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            int64_t v = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
            if (v < 0) { v += (1LL << 32); borrow = 1; }
            else borrow = 0;
            r[i] = static_cast<uint32_t>(v);
        }
        trim(r);
        return r;
    }

    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r(a.size() + b.size(), 0);
        for (size_t i = 0; i < a.size(); ++i) {
            uint64_t carry = 0;
            uint64_t ai = a[i];
            for (size_t j = 0; j < b.size(); ++j) {
                uint64_t v = static_cast<uint64_t>(r[i + j]) + ai * b[j] + carry;
                r[i + j] = static_cast<uint32_t>(v);
                carry = v >> 32;
            }
            r[i + b.size()] = static_cast<uint32_t>(carry);
        }
        trim(r);
        return r;
    }

    static std::vector<uint32_t> divmod_small(const std::vector<uint32_t>& a, uint32_t d,
                                              uint32_t& rem) {
        std::vector<uint32_t> q(a.size());
        uint64_t r = 0;
        for (size_t i = a.size(); i-- > 0;) {
            uint64_t cur = (r << 32) | a[i];
            q[i] = static_cast<uint32_t>(cur / d);
            r = cur % d;
        }
        rem = static_cast<uint32_t>(r);
        trim(q);
        return q;
    }

    // Knuth algorithm D; requires b.size() >= 2 and |a| >= |b|.
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
        const size_t n = b.size(), m = a.size() - n;
        int shift = 0;
        while (((b[n - 1] << shift) & 0x80000000u) == 0) ++shift;

        std::vector<uint32_t> u(a.size() + 1, 0), v(n);
        for (size_t i = a.size(); i-- > 0;) {
            u[i] = a[i] << shift;
            if (shift && i > 0) u[i] |= static_cast<uint32_t>(
                static_cast<uint64_t>(a[i - 1]) >> (32 - shift));
        }
        if (shift) u[a.size()] = static_cast<uint32_t>(
            static_cast<uint64_t>(a[a.size() - 1]) >> (32 - shift));
        for (size_t i = n; i-- > 0;) {
            v[i] = b[i] << shift;
            if (shift && i > 0) v[i] |= static_cast<uint32_t>(
                static_cast<uint64_t>(b[i - 1]) >> (32 - shift));
        }

        q.assign(m + 1, 0);
        const uint64_t base = 1ULL << 32;
        for (size_t j = m + 1; j-- > 0;) {
            uint64_t top = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
            uint64_t qhat = top / v[n - 1];
            uint64_t rhat = top % v[n - 1];
            while (qhat >= base ||
                   qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
                --qhat;
                rhat += v[n - 1];
                if (rhat >= base) break;
            }
            // multiply-subtract qhat*v from u[j..j+n]
            int64_t borrow = 0;
            uint64_t carry = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t p = qhat * v[i] + carry;
                carry = p >> 32;
                int64_t t = static_cast<int64_t>(u[i + j]) - borrow -
                            static_cast<int64_t>(p & 0xffffffffULL);
                if (t < 0) { t += base; borrow = 1; }
                else borrow = 0;
                u[i + j] = static_cast<uint32_t>(t);
            }
            int64_t t = static_cast<int64_t>(u[j + n]) - borrow -
                        static_cast<int64_t>(carry);
            if (t < 0) {
                // qhat was one too large: add v back
                t += base;
                --qhat;
                uint64_t c2 = 0;
                for (size_t i = 0; i < n; ++i) {
                    uint64_t s = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
                    u[i + j] = static_cast<uint32_t>(s);
                    c2 = s >> 32;
                }
                t += static_cast<int64_t>(c2);
                t &= static_cast<int64_t>(base - 1);
            }
            u[j + n] = static_cast<uint32_t>(t);
            q[j] = static_cast<uint32_t>(qhat);
        }

        r.assign(n, 0);
        for (size_t i = 0; i < n; ++i) {
            r[i] = u[i] >> shift;
            if (shift && i + 1 < u.size())
                r[i] |= static_cast<uint32_t>(static_cast<uint64_t>(u[i + 1]) << (32 - shift));
        }
        trim(q);
        trim(r);
    }
};

} // namespace tautring
