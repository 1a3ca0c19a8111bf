#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pgraph/bigint.hpp"

namespace pgraph {

// Dense univariate polynomial with exact integer coefficients, constant
// term first. Normalized: no leading zero coefficients; the zero polynomial
// has an empty coefficient vector.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Bigint> coeffs);

    static IntPolynomial constant(Bigint c);
    static IntPolynomial monomial_x();  // x

    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const;

    const Bigint& coeff(std::size_t i) const;  // 0 beyond the degree
    const std::vector<Bigint>& coeffs() const { return coeffs_; }

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

    Bigint eval(const Bigint& x) const;

    // P(x - c): substitution, exact.
    IntPolynomial shifted_arg(const Bigint& c) const;

    // Quotient of the exact division by (x - root); throws std::domain_error
    // if (x - root) does not divide *this.
    IntPolynomial divexact_linear(const Bigint& root) const;

    std::string to_string() const;  // human-readable, highest power first

private:
    void trim();
    std::vector<Bigint> coeffs_;
};

inline bool poly_equal(const IntPolynomial& a, const IntPolynomial& b) { return a == b; }

// A Laplacian spectrum in factored form: eigenvalue -> multiplicity, both
// exact integers. Every graph assembled in this project is Laplacian
// integral, so the factored form is lossless and the join theorem becomes
// multiset surgery instead of polynomial division.
class FactoredSpectrum {
public:
    FactoredSpectrum() = default;

    // Throws std::invalid_argument on a negative eigenvalue or a
    // non-positive multiplicity.
    void add(const Bigint& eigenvalue, const Bigint& multiplicity);

    const std::map<Bigint, Bigint>& roots() const { return roots_; }
    Bigint total_multiplicity() const;
    Bigint multiplicity_of(const Bigint& eigenvalue) const;  // 0 if absent
    bool contains(const Bigint& eigenvalue) const;
    std::size_t distinct_count() const { return roots_.size(); }
    const Bigint& max_eigenvalue() const;

    // Sum of eigenvalue * multiplicity == trace of the Laplacian == 2|E|.
    Bigint trace() const;

    bool operator==(const FactoredSpectrum& o) const { return roots_ == o.roots_; }

    // First (eigenvalue, multiplicities) difference against another
    // spectrum, for mismatch reporting; empty if equal.
    std::string first_difference(const FactoredSpectrum& o) const;

    std::string to_string() const;  // {0^1, 8^7} notation, ascending

private:
    std::map<Bigint, Bigint> roots_;
};

// L-spec(K_k) = {0^1, k^(k-1)}; k >= 1 (k = 1 gives {0^1}).
FactoredSpectrum spectrum_of_complete(const Bigint& k);

// Disjoint union: the Laplacian polynomial of a union is the product over
// the parts, so spectra add as multisets, scaled by copy counts (>= 1).
FactoredSpectrum union_spectrum(
    const std::vector<std::pair<FactoredSpectrum, Bigint>>& parts);

// Join of two graphs with spectra s1 (n1 vertices) and s2 (n2 vertices):
//   {0^1, (n1+n2)^1}
//   u { mu + n2 : mu in s1 minus one copy of 0 }
//   u { nu + n1 : nu in s2 minus one copy of 0 }.
// This is the join composition theorem with the two shifted zero roots
// cancelled against the denominator, which is always possible because each
// operand carries eigenvalue 0. Operands missing eigenvalue 0 are rejected.
FactoredSpectrum join_spectrum(const FactoredSpectrum& s1, const FactoredSpectrum& s2);

// Monic expansion prod (x - mu)^mult; the total multiplicity must fit in
// memory (throws std::length_error beyond `max_degree`).
IntPolynomial expand(const FactoredSpectrum& s, std::size_t max_degree = 1u << 16);

}  // namespace pgraph
