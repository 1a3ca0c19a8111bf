#include "pgraph/closed_form.hpp"

#include <stdexcept>

#include "pgraph/numutil.hpp"

namespace pgraph {

namespace {

Bigint bigpow(std::uint64_t base, std::uint64_t exp) {
    return Bigint::pow(Bigint(base), exp);
}

FactoredSpectrum assemble(const std::vector<EigenvalueTerm>& terms) {
    FactoredSpectrum s;
    for (const auto& t : terms)
        if (t.multiplicity > Bigint(0)) s.add(t.eigenvalue, t.multiplicity);
    return s;
}

}  // namespace

ZpmnParams ZpmnParams::make(std::uint64_t p, unsigned m, unsigned n) {
    if (!is_prime_u64(p)) throw std::invalid_argument("ZpmnParams: p must be prime");
    if (m < 1 || n < 1) throw std::invalid_argument("ZpmnParams: m and n must be >= 1");
    Bigint l;
    for (unsigned k = 0; k < n; ++k) l += bigpow(p, k);
    return ZpmnParams{p, m, n, std::move(l)};
}

Bigint euler_phi_prime_power(std::uint64_t p, unsigned k) {
    if (!is_prime_u64(p))
        throw std::invalid_argument("euler_phi_prime_power: p must be prime");
    if (k < 1) throw std::invalid_argument("euler_phi_prime_power: k must be >= 1");
    return bigpow(p, k) - bigpow(p, k - 1);
}

Bigint joined_eigenvalue_c(unsigned i, const ZpmnParams& params) {
    if (i < 1 || i > params.m - 1)
        throw std::out_of_range("joined_eigenvalue_c: i must lie in [1, m-1]");
    Bigint c = bigpow(params.p, i);
    for (unsigned j = i + 1; j <= params.m; ++j)
        c += bigpow(params.p, static_cast<std::uint64_t>(j - i) * (params.n - 1)) *
             euler_phi_prime_power(params.p, j);
    return c;
}

Bigint joined_eigenvalue_c_nested(unsigned i, const ZpmnParams& params) {
    if (i < 1 || i > params.m - 1)
        throw std::out_of_range("joined_eigenvalue_c_nested: i must lie in [1, m-1]");
    Bigint p_n1 = bigpow(params.p, params.n - 1);
    Bigint inner = euler_phi_prime_power(params.p, params.m);
    for (unsigned j = params.m - 1; j > i; --j)
        inner = euler_phi_prime_power(params.p, j) + p_n1 * inner;
    return bigpow(params.p, i) + p_n1 * inner;
}

std::vector<EigenvalueTerm> zpmn_terms(const ZpmnParams& params) {
    const auto& [p, m, n, l] = params;
    std::vector<EigenvalueTerm> terms;

    terms.push_back({Bigint(0), Bigint(1), "x"});
    terms.push_back({bigpow(p, static_cast<std::uint64_t>(m) * n), Bigint(1), "x - p^mn"});
    terms.push_back({Bigint(1), l - Bigint(1), "(x - 1)^(l-1)"});

    Bigint top_mult = l * bigpow(p, static_cast<std::uint64_t>(m - 1) * (n - 1)) *
                      (euler_phi_prime_power(p, m) - Bigint(1));
    terms.push_back({bigpow(p, m), top_mult, "(x - p^m)^(l p^((m-1)(n-1)) (phi(p^m)-1))"});

    for (unsigned i = 1; i + 1 <= m; ++i) {
        Bigint layer = l * bigpow(p, static_cast<std::uint64_t>(i - 1) * (n - 1));
        terms.push_back({bigpow(p, i), layer * (bigpow(p, n - 1) - Bigint(1)),
                         "(x - p^i)^(l p^((i-1)(n-1)) (p^(n-1)-1)), i=" + std::to_string(i)});
        terms.push_back({joined_eigenvalue_c(i, params),
                         layer * euler_phi_prime_power(p, i),
                         "(x - c_i)^(l p^((i-1)(n-1)) phi(p^i)), i=" + std::to_string(i)});
    }
    return terms;
}

std::vector<EigenvalueTerm> z2r4s_terms(unsigned r, unsigned s) {
    if (s < 1) throw std::invalid_argument("z2r4s_terms: s must be >= 1");
    Bigint two_rs = bigpow(2, static_cast<std::uint64_t>(r) + s);       // 2^(r+s)
    Bigint two_rs1 = bigpow(2, static_cast<std::uint64_t>(r) + s - 1);  // 2^(r+s-1)
    Bigint two_s = bigpow(2, s);

    std::vector<EigenvalueTerm> terms;
    terms.push_back({Bigint(0), Bigint(1), "x"});
    terms.push_back({Bigint(1), two_rs - Bigint(2), "(x - 1)^(2^(r+s)-2)"});
    terms.push_back({Bigint(2), (two_s - Bigint(1)) * (two_rs1 - Bigint(1)),
                     "(x - 2)^((2^s-1)(2^(r+s-1)-1))"});
    terms.push_back({Bigint(4), two_rs1 * (two_s - Bigint(1)),
                     "(x - 4)^(2^(r+s-1)(2^s-1))"});
    terms.push_back({Bigint(2) + two_rs, two_s - Bigint(1), "(x - 2 - 2^(r+s))^(2^s-1)"});
    terms.push_back({bigpow(2, static_cast<std::uint64_t>(r) + 2 * s), Bigint(1),
                     "x - 2^(r+2s)"});
    return terms;
}

FactoredSpectrum laplacian_spectrum_zpmn(const ZpmnParams& params) {
    return assemble(zpmn_terms(params));
}

FactoredSpectrum laplacian_spectrum_z2r4s(unsigned r, unsigned s) {
    return assemble(z2r4s_terms(r, s));
}

DistinctCount distinct_eigenvalue_count_zpmn(const ZpmnParams& params) {
    return DistinctCount{laplacian_spectrum_zpmn(params).distinct_count(),
                         2 * (static_cast<std::size_t>(params.m) + 1)};
}

bool spectrum_containment_zpmn(const ZpmnParams& params) {
    FactoredSpectrum s = laplacian_spectrum_zpmn(params);
    for (unsigned i = 0; i <= params.m; ++i)
        if (!s.contains(bigpow(params.p, i))) return false;
    return true;
}

bool is_power_graph_complete(const GroupSpec& g) {
    if (g.is_trivial()) return true;  // K_1
    // cyclic <=> exponent equals the group order
    Bigint exponent(1);
    for (std::uint64_t f : g.factors()) {
        std::uint64_t r = exponent.mod_u64(f);
        std::uint64_t gcd = gcd_u64(r == 0 ? f : r, f);
        exponent *= Bigint(f / gcd);
    }
    if (exponent != g.order()) return false;
    // prime power order: every factor a power of one common prime
    std::uint64_t prime = 0;
    for (std::uint64_t f : g.factors()) {
        PrimePower pp;
        if (!as_prime_power(f, pp)) return false;
        if (prime == 0) prime = pp.p;
        else if (prime != pp.p) return false;
    }
    return true;
}

bool is_flower_zpmn(const ZpmnParams& params) { return params.n >= 2 && params.m == 1; }

bool is_planar_power_graph_abelian(const GroupSpec& g) {
    // primary decomposition: the multiset of prime-power components
    std::vector<std::uint64_t> primary;
    for (std::uint64_t f : g.factors())
        for (auto [p, e] : factorize_u64(f))
            primary.push_back(pow_u64_checked(p, e));
    if (primary.empty()) return true;  // trivial group, Z_2^0
    bool all_two_four = true;
    bool all_three = true;
    for (std::uint64_t q : primary) {
        if (q != 2 && q != 4) all_two_four = false;
        if (q != 3) all_three = false;
    }
    return all_two_four || all_three;
}

Bigint count_order2_z2r4s(unsigned r, unsigned s) {
    if (s < 1) throw std::invalid_argument("count_order2_z2r4s: s must be >= 1");
    return bigpow(2, static_cast<std::uint64_t>(r) + s) - Bigint(1);
}

Bigint count_order4_z2r4s(unsigned r, unsigned s) {
    if (s < 1) throw std::invalid_argument("count_order4_z2r4s: s must be >= 1");
    return bigpow(2, static_cast<std::uint64_t>(r) + s) * (bigpow(2, s) - Bigint(1));
}

namespace {

void require_order2(const GroupElement& alpha, unsigned r, unsigned s,
                    const char* where) {
    if (alpha.coords.size() != static_cast<std::size_t>(r) + s)
        throw std::invalid_argument(std::string(where) + ": wrong coordinate count");
    std::vector<std::uint64_t> factors(r, 2);
    factors.insert(factors.end(), s, 4);
    GroupSpec g = GroupSpec::make(std::move(factors));
    if (element_order(g, alpha) != 2)
        throw std::invalid_argument(std::string(where) + ": element does not have order 2");
}

bool z2_block_vanishes(const GroupElement& alpha, unsigned r) {
    for (unsigned i = 0; i < r; ++i)
        if (alpha.coords[i] != 0) return false;
    return true;
}

}  // namespace

bool order2_lies_in_cyclic4(const GroupElement& alpha, unsigned r, unsigned s) {
    require_order2(alpha, r, s, "order2_lies_in_cyclic4");
    return z2_block_vanishes(alpha, r);
}

Bigint degree_order2_closed(const GroupElement& alpha, unsigned r, unsigned s) {
    require_order2(alpha, r, s, "degree_order2_closed");
    if (!z2_block_vanishes(alpha, r)) return Bigint(1);
    return bigpow(2, static_cast<std::uint64_t>(r) + s) + Bigint(1);
}

DegreeClassCounts degree_class_counts_z2r4s(unsigned r, unsigned s) {
    if (s < 1) throw std::invalid_argument("degree_class_counts_z2r4s: s must be >= 1");
    return DegreeClassCounts{
        bigpow(2, s) * (bigpow(2, r) - Bigint(1)),  // 2^s (2^r - 1)
        bigpow(2, s) - Bigint(1),                   // 2^s - 1
    };
}

}  // namespace pgraph
