#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pgraph/bigint.hpp"
#include "pgraph/group.hpp"
#include "pgraph/spectrum.hpp"

namespace pgraph {

// Parameters of the homocyclic family Z_{p^m}^n with the derived quantity
// l = (p^n - 1)/(p - 1). Construction validates primality of p.
struct ZpmnParams {
    std::uint64_t p;
    unsigned m;
    unsigned n;
    Bigint l;

    static ZpmnParams make(std::uint64_t p, unsigned m, unsigned n);
};

// phi(p^k) = p^k - p^(k-1) for k >= 1; throws for k = 0.
Bigint euler_phi_prime_power(std::uint64_t p, unsigned k);

// The joined eigenvalue attached to the i-th layer (1 <= i <= m-1):
//   c_i = p^i + sum_{j=i+1}^{m} p^((j-i)(n-1)) phi(p^j),
// the unrolled form of the nested expression in the Laplacian polynomial.
Bigint joined_eigenvalue_c(unsigned i, const ZpmnParams& params);

// Same quantity evaluated by the literal nesting
//   p^i + p^(n-1)(phi(p^(i+1)) + p^(n-1)(... + p^(n-1) phi(p^m))...),
// kept as an independent route to guard against transcription slips.
Bigint joined_eigenvalue_c_nested(unsigned i, const ZpmnParams& params);

// One factor (x - eigenvalue)^multiplicity of a closed-form Laplacian
// polynomial. Factors with multiplicity 0 are kept in the term list (they
// matter for the distinct-eigenvalue analysis and for reporting) but are
// excluded from the emitted spectrum.
struct EigenvalueTerm {
    Bigint eigenvalue;
    Bigint multiplicity;
    std::string provenance;  // which factor family produced it
};

// The factor list of the Laplacian polynomial of G(Z_{p^m}^n):
//   x (x - p^mn) (x-1)^(l-1) (x - p^m)^(l p^((m-1)(n-1)) (phi(p^m)-1))
//   prod_{i=1}^{m-1} (x - p^i)^(l p^((i-1)(n-1)) (p^(n-1)-1))
//   prod_{i=1}^{m-1} (x - c_i)^(l p^((i-1)(n-1)) phi(p^i))
std::vector<EigenvalueTerm> zpmn_terms(const ZpmnParams& params);

// The factor list for G(Z_2^r x Z_4^s), s >= 1:
//   x (x-1)^(2^(r+s)-2) (x-2)^((2^s-1)(2^(r+s-1)-1))
//   (x-4)^(2^(r+s-1)(2^s-1)) (x-2-2^(r+s))^(2^s-1) (x-2^(r+2s))
std::vector<EigenvalueTerm> z2r4s_terms(unsigned r, unsigned s);

// Spectra assembled from the term lists: zero-multiplicity factors dropped,
// colliding eigenvalues merged. Total multiplicity is p^mn resp. 2^(r+2s).
FactoredSpectrum laplacian_spectrum_zpmn(const ZpmnParams& params);
FactoredSpectrum laplacian_spectrum_z2r4s(unsigned r, unsigned s);

// Actual number of distinct eigenvalues with positive multiplicity, next to
// the literature's claimed value 2(m+1). The claim fails when a factor
// family has zero multiplicity (n = 1, or p = 2 with m = 1); callers decide
// what to compare.
struct DistinctCount {
    std::size_t actual;
    std::size_t claimed;
};
DistinctCount distinct_eigenvalue_count_zpmn(const ZpmnParams& params);

// Whether omega(Z_{p^m}^n) = {1, p, ..., p^m} is contained in the
// eigenvalue set of the closed-form spectrum.
bool spectrum_containment_zpmn(const ZpmnParams& params);

// Completeness of the power graph: G(G) is complete iff G is cyclic of
// prime-power order (the trivial group counts, as K_1). Cyclic is detected
// as exponent == order, which handles coprime factor lists like [2, 3].
bool is_power_graph_complete(const GroupSpec& g);

// Flower-graph classification for the homocyclic family: n >= 2 and m == 1.
bool is_flower_zpmn(const ZpmnParams& params);

// Planarity of the power graph of a finite abelian group: holds exactly for
// Z_2^n, Z_3^n, Z_4^n and Z_2^r x Z_4^s. Decided on the primary
// decomposition, so [6] (= Z_2 x Z_3) is classified correctly.
bool is_planar_power_graph_abelian(const GroupSpec& g);

// Element counts in Z_2^r x Z_4^s: orders two and four.
Bigint count_order2_z2r4s(unsigned r, unsigned s);  // 2^(r+s) - 1
Bigint count_order4_z2r4s(unsigned r, unsigned s);  // 2^(r+s) (2^s - 1)

// For an order-2 element alpha of Z_2^r x Z_4^s: alpha lies in <x> for some
// order-4 element x iff its first r coordinates vanish. Throws
// std::invalid_argument if |alpha| != 2.
bool order2_lies_in_cyclic4(const GroupElement& alpha, unsigned r, unsigned s);

// Degree of an order-2 vertex in G(Z_2^r x Z_4^s): 1 if some coordinate in
// the Z_2 block is nonzero, else 2^(r+s) + 1.
Bigint degree_order2_closed(const GroupElement& alpha, unsigned r, unsigned s);

// Number of order-2 elements of degree 1 and of degree 2^(r+s)+1:
// 2^s (2^r - 1) and 2^s - 1.
struct DegreeClassCounts {
    Bigint degree_one;
    Bigint degree_big;
};
DegreeClassCounts degree_class_counts_z2r4s(unsigned r, unsigned s);

}  // namespace pgraph
