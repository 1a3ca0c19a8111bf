#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pgraph {

/* Signed arbitrary-precision integer, sign-magnitude over 64-bit limbs
 * (little-endian, no leading zero limbs). This is the coefficient and
 * eigenvalue type for everything exact in this project: characteristic
 * polynomials of graphs on a few hundred vertices need thousands of bits,
 * and floating point is banned from every verification path.
 *
 * Only the operations the spectra code needs are provided: ring arithmetic,
 * comparisons, exact small division, word divmod, powers, and decimal I/O.
 */
class Bigint {
public:
    Bigint() = default;
    Bigint(int v) : Bigint(static_cast<long long>(v)) {}
    Bigint(unsigned v) : Bigint(static_cast<unsigned long long>(v)) {}
    Bigint(long v) : Bigint(static_cast<long long>(v)) {}
    Bigint(unsigned long v) : Bigint(static_cast<unsigned long long>(v)) {}
    Bigint(long long v);
    Bigint(unsigned long long v);

    // Parses an optionally signed decimal string; throws std::invalid_argument.
    explicit Bigint(std::string_view decimal);

    bool is_zero() const { return mag_.empty(); }
    bool is_negative() const { return sign_ < 0; }
    bool is_odd() const { return !mag_.empty() && (mag_[0] & 1); }
    int signum() const { return sign_; }

    bool operator==(const Bigint& o) const { return sign_ == o.sign_ && mag_ == o.mag_; }
    bool operator!=(const Bigint& o) const { return !(*this == o); }
    bool operator<(const Bigint& o) const { return cmp(o) < 0; }
    bool operator<=(const Bigint& o) const { return cmp(o) <= 0; }
    bool operator>(const Bigint& o) const { return cmp(o) > 0; }
    bool operator>=(const Bigint& o) const { return cmp(o) >= 0; }

    Bigint operator-() const;
    Bigint operator+(const Bigint& o) const;
    Bigint operator-(const Bigint& o) const;
    Bigint operator*(const Bigint& o) const;
    Bigint& operator+=(const Bigint& o) { return *this = *this + o; }
    Bigint& operator-=(const Bigint& o) { return *this = *this - o; }
    Bigint& operator*=(const Bigint& o) { return *this = *this * o; }

    // *this += a * b, without the temporary of operator+(operator*).
    void add_mul(const Bigint& a, const Bigint& b);

    // Exact division by a nonzero machine integer; throws std::domain_error
    // if the division leaves a remainder.
    Bigint divexact(std::int64_t d) const;

    // Least non-negative residue mod m (m > 0), regardless of sign.
    std::uint64_t mod_u64(std::uint64_t m) const;

    // Floor division by a positive word, in place; returns the remainder
    // (of the magnitude). Requires *this >= 0.
    std::uint64_t div_u64_in_place(std::uint64_t d);

    static Bigint pow(const Bigint& base, std::uint64_t exp);

    bool fits_u64() const { return sign_ >= 0 && mag_.size() <= 1; }
    std::uint64_t to_u64() const;  // throws std::overflow_error if it does not fit

    std::size_t bit_length() const;
    Bigint abs() const;

    std::string to_string() const;

private:
    int cmp(const Bigint& o) const;
    static int cmp_mag(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b);
    static std::vector<std::uint64_t> add_mag(const std::vector<std::uint64_t>& a,
                                              const std::vector<std::uint64_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint64_t> sub_mag(const std::vector<std::uint64_t>& a,
                                              const std::vector<std::uint64_t>& b);
    static std::vector<std::uint64_t> mul_mag(const std::vector<std::uint64_t>& a,
                                              const std::vector<std::uint64_t>& b);
    void trim();

    int sign_ = 0;  // -1, 0, +1
    std::vector<std::uint64_t> mag_;
};

inline Bigint abs(const Bigint& v) { return v.abs(); }

}  // namespace pgraph
