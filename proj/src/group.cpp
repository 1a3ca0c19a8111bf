#include "pgraph/group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "pgraph/numutil.hpp"

namespace pgraph {

using u64 = std::uint64_t;

namespace {

GroupFamily detect_family(const std::vector<u64>& factors) {
    GroupFamily fam;
    if (factors.empty()) return fam;

    bool all_equal = std::all_of(factors.begin(), factors.end(),
                                 [&](u64 f) { return f == factors.front(); });
    PrimePower pp;
    if (all_equal && as_prime_power(factors.front(), pp)) {
        fam.kind = GroupFamily::Kind::PrimePowerHomocyclic;
        fam.p = pp.p;
        fam.m = pp.k;
        fam.n = static_cast<unsigned>(factors.size());
        return fam;
    }

    // r twos followed by s >= 1 fours
    std::size_t i = 0;
    while (i < factors.size() && factors[i] == 2) ++i;
    std::size_t r = i;
    while (i < factors.size() && factors[i] == 4) ++i;
    if (i == factors.size() && i > r) {
        fam.kind = GroupFamily::Kind::TwoFour;
        fam.r = static_cast<unsigned>(r);
        fam.s = static_cast<unsigned>(factors.size() - r);
        return fam;
    }
    return fam;
}

}  // namespace

GroupSpec GroupSpec::make(std::vector<u64> factors) {
    for (u64 f : factors)
        if (f < 2) throw std::invalid_argument("GroupSpec: every cyclic factor must be >= 2");
    GroupSpec g;
    g.factors_ = std::move(factors);
    g.family_ = detect_family(g.factors_);
    g.order_ = Bigint(1);
    for (u64 f : g.factors_) g.order_ *= Bigint(f);
    return g;
}

u64 GroupSpec::exponent() const {
    u64 e = 1;
    for (u64 f : factors_) e = lcm_u64_checked(e, f);
    return e;
}

std::size_t GroupSpec::enum_count(std::size_t cap) const {
    if (order_ > Bigint(static_cast<unsigned long long>(cap)))
        throw std::length_error("GroupSpec: group order exceeds the enumeration cap");
    return static_cast<std::size_t>(order_.to_u64());
}

GroupElement GroupSpec::identity() const {
    return GroupElement{std::vector<u64>(factors_.size(), 0)};
}

GroupElement GroupSpec::element_at(std::size_t index) const {
    // lexicographic: the first coordinate is the most significant digit
    GroupElement e{std::vector<u64>(factors_.size(), 0)};
    for (std::size_t i = factors_.size(); i-- > 0;) {
        e.coords[i] = index % factors_[i];
        index /= factors_[i];
    }
    return e;
}

std::size_t GroupSpec::index_of(const GroupElement& a) const {
    check_element(a);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        idx = idx * factors_[i] + a.coords[i];
    return idx;
}

GroupElement GroupSpec::add(const GroupElement& a, const GroupElement& b) const {
    GroupElement r{std::vector<u64>(factors_.size())};
    for (std::size_t i = 0; i < factors_.size(); ++i)
        r.coords[i] = (a.coords[i] + b.coords[i]) % factors_[i];
    return r;
}

void GroupSpec::check_element(const GroupElement& a) const {
    if (a.coords.size() != factors_.size())
        throw std::out_of_range("GroupElement: wrong number of coordinates");
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (a.coords[i] >= factors_[i])
            throw std::out_of_range("GroupElement: coordinate out of range");
}

u64 element_order(const GroupSpec& g, const GroupElement& a) {
    g.check_element(a);
    u64 ord = 1;
    const auto& factors = g.factors();
    for (std::size_t i = 0; i < factors.size(); ++i) {
        u64 coord_order = factors[i] / gcd_u64(factors[i], a.coords[i]);
        ord = lcm_u64_checked(ord, coord_order);
    }
    return ord;
}

std::vector<u64> group_spectrum(const GroupSpec& g, std::size_t cap) {
    std::set<u64> orders;
    bool enumerable = true;
    std::size_t count = 0;
    try {
        count = g.enum_count(cap);
    } catch (const std::length_error&) {
        enumerable = false;
    }
    if (enumerable) {
        for (std::size_t i = 0; i < count; ++i)
            orders.insert(element_order(g, g.element_at(i)));
    } else {
        // abelian: the element orders are exactly the divisors of the exponent
        for (u64 d : divisors_u64(g.exponent())) orders.insert(d);
    }
    return {orders.begin(), orders.end()};
}

std::map<u64, u64> order_class_counts(const GroupSpec& g, std::size_t cap) {
    std::size_t count = g.enum_count(cap);
    std::map<u64, u64> classes;
    for (std::size_t i = 0; i < count; ++i)
        ++classes[element_order(g, g.element_at(i))];
    return classes;
}

bool is_power_of(const GroupSpec& g, const GroupElement& a, const GroupElement& b) {
    g.check_element(a);
    g.check_element(b);
    // walk <a>; at most |a| steps
    GroupElement cur = g.identity();
    if (b == cur) return true;
    do {
        cur = g.add(cur, a);
        if (cur == b) return true;
    } while (!(cur == g.identity()));
    return false;
}

std::optional<ZpmnShape> as_homocyclic_prime_power(const GroupSpec& g) {
    const auto& fam = g.family();
    if (fam.kind != GroupFamily::Kind::PrimePowerHomocyclic) return std::nullopt;
    return ZpmnShape{fam.p, fam.m, fam.n};
}

std::optional<TwoFourShape> as_two_four(const GroupSpec& g) {
    const auto& fam = g.family();
    if (fam.kind == GroupFamily::Kind::TwoFour) return TwoFourShape{fam.r, fam.s};
    // homocyclic Z_4^s is the r = 0 corner of the same family
    if (fam.kind == GroupFamily::Kind::PrimePowerHomocyclic && fam.p == 2 && fam.m == 2)
        return TwoFourShape{0, fam.n};
    return std::nullopt;
}

}  // namespace pgraph
