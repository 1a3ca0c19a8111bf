#include <doctest.h>

#include <random>
#include <stdexcept>

#include "pgraph/spectrum.hpp"

using namespace pgraph;

namespace {

FactoredSpectrum spec_of(std::initializer_list<std::pair<long long, long long>> items) {
    FactoredSpectrum s;
    for (auto [ev, mult] : items) s.add(Bigint(ev), Bigint(mult));
    return s;
}

IntPolynomial poly_of(std::initializer_list<long long> constant_first) {
    std::vector<Bigint> coeffs;
    for (long long c : constant_first) coeffs.emplace_back(c);
    return IntPolynomial(std::move(coeffs));
}

}  // namespace

TEST_CASE("spectrum_of_complete") {
    CHECK(spectrum_of_complete(Bigint(8)) == spec_of({{0, 1}, {8, 7}}));
    CHECK(spectrum_of_complete(Bigint(1)) == spec_of({{0, 1}}));
    CHECK(spectrum_of_complete(Bigint(2)) == spec_of({{0, 1}, {2, 1}}));
    CHECK_THROWS_AS(spectrum_of_complete(Bigint(0)), std::invalid_argument);
}

TEST_CASE("union_spectrum") {
    FactoredSpectrum k2 = spectrum_of_complete(Bigint(2));
    CHECK(union_spectrum({{k2, Bigint(3)}}) == spec_of({{0, 3}, {2, 3}}));

    FactoredSpectrum any = spec_of({{0, 1}, {3, 2}, {7, 1}});
    CHECK(union_spectrum({{any, Bigint(1)}}) == any);

    // inner union of the Z_2^2 x Z_4 decomposition: 6 K_1 u (K_1 + 4 K_2)
    FactoredSpectrum inner = join_spectrum(
        spectrum_of_complete(Bigint(1)),
        union_spectrum({{spectrum_of_complete(Bigint(2)), Bigint(4)}}));
    CHECK(inner == spec_of({{0, 1}, {1, 3}, {3, 4}, {9, 1}}));
    FactoredSpectrum merged =
        union_spectrum({{spectrum_of_complete(Bigint(1)), Bigint(6)}, {inner, Bigint(1)}});
    CHECK(merged.total_multiplicity() == Bigint(15));
    CHECK(merged.multiplicity_of(Bigint(0)) == Bigint(7));

    CHECK_THROWS_AS(union_spectrum({}), std::invalid_argument);
    CHECK_THROWS_AS(union_spectrum({{k2, Bigint(0)}}), std::invalid_argument);
}

TEST_CASE("join_spectrum") {
    FactoredSpectrum k1 = spectrum_of_complete(Bigint(1));
    // K_1 + 3K_2: 7 vertices
    FactoredSpectrum three_k2 = union_spectrum({{spectrum_of_complete(Bigint(2)), Bigint(3)}});
    CHECK(join_spectrum(k1, three_k2) == spec_of({{0, 1}, {1, 2}, {3, 3}, {7, 1}}));

    // K_1 + K_1 = K_2
    CHECK(join_spectrum(k1, k1) == spectrum_of_complete(Bigint(2)));

    // star on 4 vertices
    FactoredSpectrum three_k1 = union_spectrum({{k1, Bigint(3)}});
    CHECK(join_spectrum(k1, three_k1) == spec_of({{0, 1}, {1, 2}, {4, 1}}));

    // a spectrum without eigenvalue 0 is not a Laplacian spectrum
    CHECK_THROWS_AS(join_spectrum(k1, spec_of({{2, 2}})), std::invalid_argument);

    // joining with K_1 always puts the vertex count on top of the spectrum
    for (const FactoredSpectrum& s : {three_k2, three_k1, spec_of({{0, 2}, {5, 8}})}) {
        FactoredSpectrum joined = join_spectrum(k1, s);
        CHECK(joined.max_eigenvalue() == joined.total_multiplicity());
    }
}

TEST_CASE("expand") {
    CHECK(expand(spec_of({{0, 1}, {4, 3}})) == poly_of({0, -64, 48, -12, 1}));
    CHECK(expand(spec_of({{0, 1}})) == poly_of({0, 1}));
    CHECK(expand(spec_of({{0, 1}, {2, 1}})) == poly_of({0, -2, 1}));
    CHECK(expand(FactoredSpectrum{}) == poly_of({1}));
}

TEST_CASE("poly_equal and polynomial basics") {
    CHECK(poly_equal(poly_of({0, -2, 1}), expand(spec_of({{0, 1}, {2, 1}}))));
    CHECK(!poly_equal(poly_of({0, 1}), poly_of({0, 0, 1})));
    CHECK(poly_of({0, -2, 1}).to_string() == "x^2 - 2*x");
    CHECK(poly_of({}).to_string() == "0");
    CHECK(poly_of({0, -64, 48, -12, 1}).is_monic());
}

TEST_CASE("polynomial shifted_arg") {
    // (x - 3)^2 shifted from x^2
    IntPolynomial x2 = poly_of({0, 0, 1});
    CHECK(x2.shifted_arg(Bigint(3)) == poly_of({9, -6, 1}));
    CHECK(x2.shifted_arg(Bigint(0)) == x2);
    // eval consistency: P(x-c) at t equals P(t-c)
    IntPolynomial p = poly_of({7, -5, 0, 2});
    for (long long c : {-3, 0, 4})
        for (long long t : {-2, 0, 1, 9})
            CHECK(p.shifted_arg(Bigint(c)).eval(Bigint(t)) == p.eval(Bigint(t - c)));
}

TEST_CASE("divexact_linear") {
    // x^2 - 2x = x (x - 2)
    CHECK(poly_of({0, -2, 1}).divexact_linear(Bigint(0)) == poly_of({-2, 1}));
    CHECK(poly_of({0, -2, 1}).divexact_linear(Bigint(2)) == poly_of({0, 1}));
    CHECK_THROWS_AS(poly_of({0, -2, 1}).divexact_linear(Bigint(1)), std::domain_error);
}

TEST_CASE("join theorem polynomial identity") {
    // expand(join(s1,s2)) (x-n1)(x-n2)
    //   == x (x-n1-n2) expand(s1)(x-n2) expand(s2)(x-n1)
    auto check_identity = [](const FactoredSpectrum& s1, const FactoredSpectrum& s2) {
        Bigint n1 = s1.total_multiplicity();
        Bigint n2 = s2.total_multiplicity();
        IntPolynomial lhs = expand(join_spectrum(s1, s2)) *
                            IntPolynomial({-n1, Bigint(1)}) * IntPolynomial({-n2, Bigint(1)});
        IntPolynomial rhs = IntPolynomial({Bigint(0), Bigint(1)}) *
                            IntPolynomial({-(n1 + n2), Bigint(1)}) *
                            expand(s1).shifted_arg(n2) * expand(s2).shifted_arg(n1);
        CHECK(poly_equal(lhs, rhs));
    };
    FactoredSpectrum k1 = spectrum_of_complete(Bigint(1));
    FactoredSpectrum k5 = spectrum_of_complete(Bigint(5));
    FactoredSpectrum stars = spec_of({{0, 2}, {1, 4}, {4, 2}});  // 2 disjoint stars
    check_identity(k1, k5);
    check_identity(k5, stars);
    check_identity(stars, stars);

    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        // random union of complete graphs on each side
        auto random_union = [&]() {
            std::vector<std::pair<FactoredSpectrum, Bigint>> parts;
            int n_parts = 1 + static_cast<int>(rng() % 3);
            for (int i = 0; i < n_parts; ++i)
                parts.emplace_back(spectrum_of_complete(Bigint(1 + rng() % 5)),
                                   Bigint(1 + rng() % 3));
            return union_spectrum(parts);
        };
        check_identity(random_union(), random_union());
    }
}

TEST_CASE("trace of a complete-graph spectrum matches the edge count") {
    // K_k has k(k-1)/2 edges; trace = 2|E|
    for (long long k : {1, 2, 5, 12}) {
        Bigint trace = spectrum_of_complete(Bigint(k)).trace();
        CHECK(trace == Bigint(k * (k - 1)));
    }
}

TEST_CASE("spectrum rendering and first_difference") {
    FactoredSpectrum s = spec_of({{0, 1}, {8, 7}});
    CHECK(s.to_string() == "{0^1, 8^7}");
    CHECK(s.first_difference(s).empty());
    CHECK(s.first_difference(spec_of({{0, 1}, {8, 6}})) == "eigenvalue 8: 7 vs 6");
    CHECK(s.first_difference(spec_of({{0, 1}, {4, 1}, {8, 7}})) == "eigenvalue 4: 0 vs 1");
}
