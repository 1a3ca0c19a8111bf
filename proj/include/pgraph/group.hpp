#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "pgraph/bigint.hpp"

namespace pgraph {

// Default ceiling for anything that materializes all group elements.
// Operations refuse beyond the cap instead of silently degrading.
inline constexpr std::size_t kDefaultEnumCap = 4096;

struct GroupElement {
    std::vector<std::uint64_t> coords;  // coords[i] < factors[i]

    bool operator==(const GroupElement&) const = default;
};

// Recognized structure of the factor list. Homocyclic means n identical
// cyclic factors of prime-power order p^m; TwoFour means r copies of Z_2
// followed by s >= 1 copies of Z_4 (coordinate order is significant for
// the per-element degree results).
struct GroupFamily {
    enum class Kind { General, PrimePowerHomocyclic, TwoFour };
    Kind kind = Kind::General;
    std::uint64_t p = 0;  // PrimePowerHomocyclic
    unsigned m = 0;
    unsigned n = 0;
    unsigned r = 0;  // TwoFour
    unsigned s = 0;
};

// A finite abelian group as an ordered direct product of cyclic groups.
// Immutable after construction; elements are indexed lexicographically by
// coordinates so that every downstream vertex numbering is reproducible.
class GroupSpec {
public:
    // Every factor must be >= 2; the empty list is the trivial group.
    // Throws std::invalid_argument on a factor < 2.
    static GroupSpec make(std::vector<std::uint64_t> factors);

    const std::vector<std::uint64_t>& factors() const { return factors_; }
    const GroupFamily& family() const { return family_; }

    const Bigint& order() const { return order_; }
    // lcm of the factor orders. Throws std::overflow_error past 64 bits.
    std::uint64_t exponent() const;

    // Number of elements as a size_t, if order() <= cap; throws
    // std::length_error otherwise.
    std::size_t enum_count(std::size_t cap = kDefaultEnumCap) const;

    GroupElement identity() const;
    GroupElement element_at(std::size_t index) const;
    std::size_t index_of(const GroupElement& a) const;

    GroupElement add(const GroupElement& a, const GroupElement& b) const;

    // Validates coordinate ranges; throws std::out_of_range.
    void check_element(const GroupElement& a) const;

    bool is_trivial() const { return factors_.empty(); }

private:
    std::vector<std::uint64_t> factors_;
    GroupFamily family_;
    Bigint order_;
};

// Least k >= 1 with k*a = 0; computed per coordinate as
// lcm_i(factor_i / gcd(factor_i, a_i)).
std::uint64_t element_order(const GroupSpec& g, const GroupElement& a);

// The spectrum omega(G): the set of element orders, ascending. Enumerates
// when the order is within cap, otherwise uses the divisors of exponent(G)
// (exact for abelian groups).
std::vector<std::uint64_t> group_spectrum(const GroupSpec& g,
                                          std::size_t cap = kDefaultEnumCap);

// order -> number of elements of that order; requires order() <= cap.
std::map<std::uint64_t, std::uint64_t> order_class_counts(const GroupSpec& g,
                                                          std::size_t cap = kDefaultEnumCap);

// True iff b = k*a for some k >= 0, i.e. b lies in the cyclic subgroup <a>.
bool is_power_of(const GroupSpec& g, const GroupElement& a, const GroupElement& b);

// Family predicates independent of the stored tag, for callers that need to
// know which closed forms apply.
struct ZpmnShape {
    std::uint64_t p;
    unsigned m;
    unsigned n;
};
std::optional<ZpmnShape> as_homocyclic_prime_power(const GroupSpec& g);

struct TwoFourShape {
    unsigned r;
    unsigned s;
};
std::optional<TwoFourShape> as_two_four(const GroupSpec& g);

}  // namespace pgraph
