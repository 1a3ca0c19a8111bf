#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pgraph/bigint.hpp"
#include "pgraph/graph.hpp"
#include "pgraph/group.hpp"
#include "pgraph/spectrum.hpp"

namespace pgraph {

// Default ceiling for exact characteristic-polynomial computations.
inline constexpr std::size_t kDefaultOracleCap = 300;

// Dense square matrix with exact integer entries.
class IntMatrix {
public:
    explicit IntMatrix(std::size_t dimension)
        : dim_(dimension), entries_(dimension * dimension) {}

    std::size_t dimension() const { return dim_; }
    Bigint& at(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
    const Bigint& at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

    Bigint trace() const;
    Bigint max_abs_entry() const;

private:
    std::size_t dim_;
    std::vector<Bigint> entries_;
};

// L = D - A: degree diagonal minus adjacency. Symmetric, zero row sums.
IntMatrix laplacian_matrix(const Graph& g);

// Exact monic characteristic polynomial det(xI - M), constant term first.
// Two independent engines are available:
//  - the Faddeev-LeVerrier trace recursion over big integers (every
//    division in it is exact), used by default for small dimensions;
//  - a modular engine (Hessenberg reduction and the Hessenberg charpoly
//    recurrence modulo many 62-bit primes, recombined by remaindering
//    against the coefficient bound (2 * max|entry| * d)^d * 2^d), which is
//    what makes dimension ~300 affordable.
// Both agree everywhere; the cross-check lives in the test suite.
IntPolynomial char_poly_exact(const IntMatrix& m, std::size_t cap = kDefaultOracleCap);
IntPolynomial char_poly_faddeev_leverrier(const IntMatrix& m);
IntPolynomial char_poly_modular(const IntMatrix& m);

// Factors a monic polynomial as prod (x - mu)^mult with integer roots in
// [0, bound]. Throws std::domain_error if a nontrivial factor survives
// (non-integral spectrum) and std::invalid_argument on non-monic input.
FactoredSpectrum integer_root_factor(const IntPolynomial& p, const Bigint& bound);

// The oracle path: build the power graph, take the exact characteristic
// polynomial of its Laplacian, and factor it over the integers.
FactoredSpectrum brute_spectrum(const GroupSpec& g,
                                std::size_t oracle_cap = kDefaultOracleCap,
                                std::size_t enum_cap = kDefaultEnumCap);

// Laplacian spectrum of a concrete graph via the same oracle path.
FactoredSpectrum graph_spectrum_oracle(const Graph& g,
                                       std::size_t oracle_cap = kDefaultOracleCap);

struct Caps {
    std::size_t enum_cap = kDefaultEnumCap;
    std::size_t oracle_cap = kDefaultOracleCap;
};

// Cross-verification of every spectrum path that applies to a group, plus
// the counting and degree formulas for the Z_2^r x Z_4^s family. Failures
// are report content, never exceptions.
struct VerificationCheck {
    std::string name;
    bool pass;
    std::string detail;
};

struct VerificationReport {
    std::string descriptor;
    Bigint order;
    std::vector<std::pair<std::string, FactoredSpectrum>> spectra;  // path name -> spectrum
    std::vector<VerificationCheck> checks;
    std::vector<std::string> skipped;  // paths not applicable or beyond caps
    bool pass = true;
    double elapsed_ms = 0.0;
};

VerificationReport verify_group(const GroupSpec& g, const Caps& caps = {});

}  // namespace pgraph
