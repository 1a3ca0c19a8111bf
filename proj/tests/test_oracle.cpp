#include <doctest.h>

#include <random>
#include <stdexcept>

#include "pgraph/closed_form.hpp"
#include "pgraph/oracle.hpp"
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

// Independent reference for the characteristic polynomial: Laplace cofactor
// expansion of det(xI - M) over polynomial entries. Factorial cost, so only
// for tiny matrices, but it shares no code path with either engine under
// test.
IntPolynomial det_poly(std::vector<std::vector<IntPolynomial>>& m, std::vector<bool>& used,
                       std::size_t row) {
    std::size_t n = m.size();
    if (row == n) return IntPolynomial::constant(Bigint(1));
    IntPolynomial det;
    int sign = 1;
    for (std::size_t col = 0; col < n; ++col) {
        if (used[col]) continue;
        used[col] = true;
        IntPolynomial minor = det_poly(m, used, row + 1);
        used[col] = false;
        IntPolynomial term = m[row][col] * minor;
        det = (sign > 0) ? det + term : det - term;
        sign = -sign;
    }
    return det;
}

IntPolynomial charpoly_cofactor(const IntMatrix& a) {
    std::size_t n = a.dimension();
    std::vector<std::vector<IntPolynomial>> m(n, std::vector<IntPolynomial>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) m[i][j] = IntPolynomial({-a.at(i, j), Bigint(1)});
            else m[i][j] = IntPolynomial::constant(-a.at(i, j));
        }
    std::vector<bool> used(n, false);
    return det_poly(m, used, 0);
}

Graph star4() {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    return g;
}

Graph complete_graph(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

}  // namespace

TEST_CASE("laplacian_matrix") {
    IntMatrix k2 = laplacian_matrix(complete_graph(2));
    CHECK(k2.at(0, 0) == Bigint(1));
    CHECK(k2.at(0, 1) == Bigint(-1));
    CHECK(k2.at(1, 0) == Bigint(-1));
    CHECK(k2.at(1, 1) == Bigint(1));

    IntMatrix single = laplacian_matrix(Graph(1));
    CHECK(single.at(0, 0).is_zero());

    IntMatrix s4 = laplacian_matrix(star4());
    CHECK(s4.at(0, 0) == Bigint(3));
    for (std::size_t j = 1; j < 4; ++j) {
        CHECK(s4.at(j, j) == Bigint(1));
        CHECK(s4.at(0, j) == Bigint(-1));
    }
    // rows sum to zero
    for (std::size_t i = 0; i < 4; ++i) {
        Bigint sum;
        for (std::size_t j = 0; j < 4; ++j) sum += s4.at(i, j);
        CHECK(sum.is_zero());
    }
}

TEST_CASE("char_poly_exact frozen examples") {
    CHECK(char_poly_exact(laplacian_matrix(complete_graph(2))) == poly_of({0, -2, 1}));
    CHECK(char_poly_exact(laplacian_matrix(complete_graph(4))) ==
          poly_of({0, -64, 48, -12, 1}));
    CHECK(char_poly_exact(laplacian_matrix(star4())) == poly_of({0, -4, 9, -6, 1}));
}

TEST_CASE("both charpoly engines match the cofactor reference on random matrices") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 1 + rng() % 6;
        IntMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.at(i, j) = Bigint(static_cast<long long>(rng() % 41) - 20);
        IntPolynomial reference = charpoly_cofactor(m);
        CHECK(char_poly_faddeev_leverrier(m) == reference);
        CHECK(char_poly_modular(m) == reference);
    }
}

TEST_CASE("charpoly engines agree across the dispatch boundary") {
    // random graph Laplacians on both sides of the crossover dimension
    std::mt19937_64 rng(37);
    for (std::size_t n : {40ul, 63ul, 64ul, 65ul, 72ul}) {
        Graph g(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (rng() % 3 == 0) g.add_edge(i, j);
        IntMatrix m = laplacian_matrix(g);
        IntPolynomial fl = char_poly_faddeev_leverrier(m);
        IntPolynomial mod = char_poly_modular(m);
        CHECK(fl == mod);
        CHECK(char_poly_exact(m) == fl);
        // structural facts: monic, degree n, constant term 0, x^(n-1)
        // coefficient is -trace
        CHECK(fl.is_monic());
        CHECK(fl.degree() == static_cast<int>(n));
        CHECK(fl.coeff(0).is_zero());
        CHECK(fl.coeff(n - 1) == -m.trace());
    }
}

TEST_CASE("char_poly_exact respects the cap") {
    CHECK_THROWS_AS(char_poly_exact(IntMatrix(10), 9), std::length_error);
}

TEST_CASE("integer_root_factor") {
    CHECK(integer_root_factor(poly_of({0, -2, 1}), Bigint(2)) == spec_of({{0, 1}, {2, 1}}));
    CHECK(integer_root_factor(poly_of({0, -4, 9, -6, 1}), Bigint(4)) ==
          spec_of({{0, 1}, {1, 2}, {4, 1}}));
    // x^2 - 2 has irrational roots
    CHECK_THROWS_AS(integer_root_factor(poly_of({-2, 0, 1}), Bigint(2)), std::domain_error);
    // non-monic input is rejected
    CHECK_THROWS_AS(integer_root_factor(poly_of({0, -2, 3}), Bigint(2)),
                    std::invalid_argument);
    // roots beyond the bound are not found
    CHECK_THROWS_AS(integer_root_factor(poly_of({0, -5, 1}), Bigint(4)), std::domain_error);
}

TEST_CASE("integer_root_factor round-trips expand") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        FactoredSpectrum s;
        Bigint bound;
        int distinct = 1 + static_cast<int>(rng() % 4);
        long long ev = 0;
        for (int i = 0; i < distinct; ++i) {
            ev += static_cast<long long>(rng() % 5);
            s.add(Bigint(ev), Bigint(1 + rng() % 3));
            bound = Bigint(ev);
            ++ev;
        }
        CHECK(integer_root_factor(expand(s), bound) == s);
    }
}

TEST_CASE("brute_spectrum frozen examples") {
    CHECK(brute_spectrum(GroupSpec::make({8})) == spec_of({{0, 1}, {8, 7}}));
    CHECK(brute_spectrum(GroupSpec::make({4, 4})) ==
          spec_of({{0, 1}, {1, 2}, {2, 3}, {4, 6}, {6, 3}, {16, 1}}));
    CHECK(brute_spectrum(GroupSpec::make({2, 4})) ==
          spec_of({{0, 1}, {1, 2}, {2, 1}, {4, 2}, {6, 1}, {8, 1}}));
    CHECK_THROWS_AS(brute_spectrum(GroupSpec::make({32, 32})), std::length_error);
}

TEST_CASE("verify_group passes on in-family groups") {
    VerificationReport rep = verify_group(GroupSpec::make({4, 4}));
    CHECK(rep.pass);
    CHECK(rep.descriptor == "Z4^2");
    // [4,4] sits in both families: two closed forms, two calculus paths, oracle
    CHECK(rep.spectra.size() == 5);

    VerificationReport rep224 = verify_group(GroupSpec::make({2, 2, 4}));
    CHECK(rep224.pass);
    bool has_degree_check = false;
    for (const auto& c : rep224.checks)
        if (c.name.find("degree class counts") != std::string::npos) {
            has_degree_check = true;
            CHECK(c.detail.find("(6, 1)") != std::string::npos);
        }
    CHECK(has_degree_check);

    VerificationReport rep125 = verify_group(GroupSpec::make({5, 5, 5}));
    CHECK(rep125.pass);
    CHECK(rep125.spectra.size() == 3);
}

TEST_CASE("deep layer structure matches the oracle at 256 vertices") {
    // m = 4 exercises three nested union/join layers; the oracle runs
    // through the modular charpoly engine here
    CHECK(laplacian_spectrum_zpmn(ZpmnParams::make(2, 4, 2)) ==
          brute_spectrum(GroupSpec::make({16, 16})));
}

TEST_CASE("verify_group on an out-of-family group is oracle-only") {
    VerificationReport rep = verify_group(GroupSpec::make({6}));
    CHECK(rep.pass);
    CHECK(rep.spectra.size() == 1);
    CHECK(rep.spectra[0].first == "oracle");
    CHECK(!rep.skipped.empty());
}

TEST_CASE("verify_group beyond caps skips the oracle but still cross-checks") {
    // order 1024 exceeds the default oracle cap of 300
    std::vector<std::uint64_t> factors(5, 4);
    VerificationReport rep = verify_group(GroupSpec::make(factors));
    CHECK(rep.pass);
    CHECK(rep.spectra.size() == 4);  // both closed forms and both calculus paths
    bool oracle_skipped = false;
    for (const auto& s : rep.skipped)
        if (s.find("oracle") != std::string::npos) oracle_skipped = true;
    CHECK(oracle_skipped);
}
