#include "pgraph/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace pgraph {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

Bigint::Bigint(long long v) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    // careful with LLONG_MIN
    u64 m = v > 0 ? static_cast<u64>(v) : 0 - static_cast<u64>(v);
    mag_.push_back(m);
}

Bigint::Bigint(unsigned long long v) {
    if (v == 0) return;
    sign_ = 1;
    mag_.push_back(v);
}

Bigint::Bigint(std::string_view s) {
    std::size_t i = 0;
    int sign = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        sign = s[i] == '-' ? -1 : 1;
        ++i;
    }
    if (i == s.size())
        throw std::invalid_argument("Bigint: empty decimal string");
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c < '0' || c > '9')
            throw std::invalid_argument("Bigint: invalid decimal digit");
        // *this = *this * 10 + digit, on the magnitude
        u64 carry = static_cast<u64>(c - '0');
        for (auto& limb : mag_) {
            u128 t = static_cast<u128>(limb) * 10 + carry;
            limb = static_cast<u64>(t);
            carry = static_cast<u64>(t >> 64);
        }
        if (carry) mag_.push_back(carry);
    }
    trim();
    if (!mag_.empty()) sign_ = sign;
}

void Bigint::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int Bigint::cmp_mag(const std::vector<u64>& a, const std::vector<u64>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

int Bigint::cmp(const Bigint& o) const {
    if (sign_ != o.sign_) return sign_ < o.sign_ ? -1 : 1;
    int c = cmp_mag(mag_, o.mag_);
    return sign_ >= 0 ? c : -c;
}

std::vector<u64> Bigint::add_mag(const std::vector<u64>& a, const std::vector<u64>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<u64> r(big.size());
    u64 carry = 0;
    std::size_t i = 0;
    for (; i < small.size(); ++i) {
        u64 s = big[i] + small[i];
        u64 c1 = s < big[i];
        r[i] = s + carry;
        carry = c1 | (r[i] < s);
    }
    for (; i < big.size(); ++i) {
        r[i] = big[i] + carry;
        carry = r[i] < carry;
    }
    if (carry) r.push_back(1);
    return r;
}

std::vector<u64> Bigint::sub_mag(const std::vector<u64>& a, const std::vector<u64>& b) {
    std::vector<u64> r(a.size());
    u64 borrow = 0;
    std::size_t i = 0;
    for (; i < b.size(); ++i) {
        u64 d = a[i] - b[i];
        u64 b1 = d > a[i];
        r[i] = d - borrow;
        borrow = b1 | (r[i] > d);
    }
    for (; i < a.size(); ++i) {
        r[i] = a[i] - borrow;
        borrow = r[i] > a[i];
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<u64> Bigint::mul_mag(const std::vector<u64>& a, const std::vector<u64>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<u64> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        u64 carry = 0;
        u64 ai = a[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            u128 t = static_cast<u128>(ai) * b[j] + r[i + j] + carry;
            r[i + j] = static_cast<u64>(t);
            carry = static_cast<u64>(t >> 64);
        }
        std::size_t k = i + b.size();
        while (carry) {
            u128 t = static_cast<u128>(r[k]) + carry;
            r[k] = static_cast<u64>(t);
            carry = static_cast<u64>(t >> 64);
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

Bigint Bigint::operator-() const {
    Bigint r = *this;
    r.sign_ = -r.sign_;
    return r;
}

Bigint Bigint::operator+(const Bigint& o) const {
    if (sign_ == 0) return o;
    if (o.sign_ == 0) return *this;
    Bigint r;
    if (sign_ == o.sign_) {
        r.mag_ = add_mag(mag_, o.mag_);
        r.sign_ = sign_;
        return r;
    }
    int c = cmp_mag(mag_, o.mag_);
    if (c == 0) return r;
    if (c > 0) {
        r.mag_ = sub_mag(mag_, o.mag_);
        r.sign_ = sign_;
    } else {
        r.mag_ = sub_mag(o.mag_, mag_);
        r.sign_ = o.sign_;
    }
    return r;
}

Bigint Bigint::operator-(const Bigint& o) const { return *this + (-o); }

Bigint Bigint::operator*(const Bigint& o) const {
    Bigint r;
    r.mag_ = mul_mag(mag_, o.mag_);
    r.sign_ = r.mag_.empty() ? 0 : sign_ * o.sign_;
    return r;
}

void Bigint::add_mul(const Bigint& a, const Bigint& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return;
    int psign = a.sign_ * b.sign_;
    if (sign_ == 0) {
        mag_ = mul_mag(a.mag_, b.mag_);
        sign_ = psign;
        return;
    }
    if (sign_ == psign) {
        // same sign: grow magnitude in place when the product fits the pattern
        mag_ = add_mag(mag_, mul_mag(a.mag_, b.mag_));
        return;
    }
    auto p = mul_mag(a.mag_, b.mag_);
    int c = cmp_mag(mag_, p);
    if (c == 0) {
        mag_.clear();
        sign_ = 0;
    } else if (c > 0) {
        mag_ = sub_mag(mag_, p);
    } else {
        mag_ = sub_mag(p, mag_);
        sign_ = psign;
    }
}

Bigint Bigint::divexact(std::int64_t d) const {
    if (d == 0) throw std::domain_error("Bigint::divexact: division by zero");
    u64 ad = d > 0 ? static_cast<u64>(d) : 0 - static_cast<u64>(d);
    Bigint q = abs();
    u64 rem = q.div_u64_in_place(ad);
    if (rem != 0) throw std::domain_error("Bigint::divexact: remainder is nonzero");
    if (!q.mag_.empty()) q.sign_ = sign_ * (d > 0 ? 1 : -1);
    return q;
}

u64 Bigint::div_u64_in_place(u64 d) {
    if (d == 0) throw std::domain_error("Bigint: division by zero");
    if (sign_ < 0) throw std::domain_error("Bigint::div_u64_in_place: negative input");
    u64 rem = 0;
    for (std::size_t i = mag_.size(); i-- > 0;) {
        u128 cur = (static_cast<u128>(rem) << 64) | mag_[i];
        mag_[i] = static_cast<u64>(cur / d);
        rem = static_cast<u64>(cur % d);
    }
    trim();
    return rem;
}

u64 Bigint::mod_u64(u64 m) const {
    if (m == 0) throw std::domain_error("Bigint::mod_u64: modulus is zero");
    u64 rem = 0;
    for (std::size_t i = mag_.size(); i-- > 0;)
        rem = static_cast<u64>(((static_cast<u128>(rem) << 64) | mag_[i]) % m);
    if (sign_ < 0 && rem != 0) rem = m - rem;
    return rem;
}

Bigint Bigint::pow(const Bigint& base, u64 exp) {
    Bigint r(1);
    Bigint b = base;
    while (exp) {
        if (exp & 1) r *= b;
        exp >>= 1;
        if (exp) b *= b;
    }
    return r;
}

u64 Bigint::to_u64() const {
    if (!fits_u64()) throw std::overflow_error("Bigint::to_u64: value out of range");
    return mag_.empty() ? 0 : mag_[0];
}

std::size_t Bigint::bit_length() const {
    if (mag_.empty()) return 0;
    u64 top = mag_.back();
    std::size_t bits = 0;
    while (top) {
        ++bits;
        top >>= 1;
    }
    return bits + 64 * (mag_.size() - 1);
}

Bigint Bigint::abs() const {
    Bigint r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

std::string Bigint::to_string() const {
    if (mag_.empty()) return "0";
    Bigint t = abs();
    std::string out;
    while (!t.mag_.empty()) {
        u64 chunk = t.div_u64_in_place(10000000000000000000ull);  // 10^19
        std::string part = std::to_string(chunk);
        if (t.mag_.empty()) {
            out.insert(0, part);
        } else {
            out.insert(0, std::string(19 - part.size(), '0') + part);
        }
    }
    if (sign_ < 0) out.insert(0, "-");
    return out;
}

}  // namespace pgraph
