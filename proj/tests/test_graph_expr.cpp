#include <doctest.h>

#include <random>
#include <stdexcept>

#include "pgraph/graph_expr.hpp"
#include "pgraph/oracle.hpp"

using namespace pgraph;

namespace {

FactoredSpectrum spec_of(std::initializer_list<std::pair<long long, long long>> items) {
    FactoredSpectrum s;
    for (auto [ev, mult] : items) s.add(Bigint(ev), Bigint(mult));
    return s;
}

// uniform random expression with at most `budget` vertices, for round-trip
// and identity property tests
GraphExpr random_expr(std::mt19937_64& rng, int depth = 0) {
    int pick = static_cast<int>(rng() % 10);
    if (depth >= 3 || pick < 4) return GraphExpr::complete(Bigint(1 + rng() % 6));
    if (pick < 7) {
        std::vector<GraphExpr::UnionPart> parts;
        std::size_t n_parts = 1 + rng() % 3;
        for (std::size_t i = 0; i < n_parts; ++i)
            parts.push_back({Bigint(1 + rng() % 4), random_expr(rng, depth + 1)});
        return GraphExpr::unite(std::move(parts));
    }
    return GraphExpr::join(random_expr(rng, depth + 1), random_expr(rng, depth + 1));
}

}  // namespace

TEST_CASE("vertex_count") {
    CHECK(GraphExpr::complete(Bigint(8)).vertex_count() == Bigint(8));
    CHECK(power_graph_expr_zpmn(2, 2, 2).vertex_count() == Bigint(16));
    CHECK(power_graph_expr_z2r4s(2, 1).vertex_count() == Bigint(16));
    // vertex counts match the group orders across a parameter spread
    for (unsigned m = 1; m <= 3; ++m)
        for (unsigned n = 1; n <= 3; ++n) {
            CHECK(power_graph_expr_zpmn(3, m, n).vertex_count() ==
                  Bigint::pow(Bigint(3), static_cast<std::uint64_t>(m) * n));
        }
    for (unsigned r = 0; r <= 3; ++r)
        for (unsigned s = 1; s <= 3; ++s)
            CHECK(power_graph_expr_z2r4s(r, s).vertex_count() ==
                  Bigint::pow(Bigint(2), static_cast<std::uint64_t>(r) + 2 * s));
}

TEST_CASE("builder output shapes as DSL text") {
    CHECK(print_expr(power_graph_expr_zpmn(3, 1, 2)) == "K1 + 4*K2");
    CHECK(print_expr(power_graph_expr_zpmn(2, 2, 1)) == "K1 + 1*(K1 + 1*K2)");
    CHECK(print_expr(power_graph_expr_zpmn(2, 2, 2)) == "K1 + 3*(K1 + 2*K2)");
    CHECK(print_expr(power_graph_expr_z2r4s(0, 1)) == "K1 + 1*(K1 + 1*K2)");
    CHECK(print_expr(power_graph_expr_z2r4s(1, 1)) == "K1 + (2*K1 u 1*(K1 + 2*K2))");
    CHECK(print_expr(power_graph_expr_z2r4s(2, 1)) == "K1 + (6*K1 u 1*(K1 + 4*K2))");
}

TEST_CASE("builder errors") {
    CHECK_THROWS_AS(power_graph_expr_zpmn(6, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(power_graph_expr_zpmn(2, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(power_graph_expr_z2r4s(3, 0), std::invalid_argument);
}

TEST_CASE("expr_spectrum") {
    // star on 4 vertices
    GraphExpr star = GraphExpr::join(
        GraphExpr::complete(Bigint(1)),
        GraphExpr::unite({{Bigint(3), GraphExpr::complete(Bigint(1))}}));
    CHECK(expr_spectrum(star) == spec_of({{0, 1}, {1, 2}, {4, 1}}));

    CHECK(expr_spectrum(power_graph_expr_zpmn(2, 2, 2)) ==
          spec_of({{0, 1}, {1, 2}, {2, 3}, {4, 6}, {6, 3}, {16, 1}}));

    CHECK(expr_spectrum(GraphExpr::complete(Bigint(9))) == spec_of({{0, 1}, {9, 8}}));

    // total multiplicity always equals the vertex count
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        GraphExpr e = random_expr(rng);
        CHECK(expr_spectrum(e).total_multiplicity() == e.vertex_count());
    }
}

TEST_CASE("parse_expr") {
    GraphExpr expected = GraphExpr::join(
        GraphExpr::complete(Bigint(1)),
        GraphExpr::unite({{Bigint(3), GraphExpr::complete(Bigint(2))}}));
    CHECK(parse_expr("K1 + 3*K2") == expected);
    CHECK(parse_expr("  K1+3 * K2 ") == expected);

    CHECK(parse_expr("K1 + (6*K1 u 1*(K1 + 4*K2))") == power_graph_expr_z2r4s(2, 1));
    CHECK(parse_expr("K1 + 1*(K1 + 1*K2)") == power_graph_expr_zpmn(2, 2, 1));

    // a bare atom stays a bare node
    CHECK(parse_expr("K7") == GraphExpr::complete(Bigint(7)));
    // implicit count 1 in a multi-factor union
    CHECK(parse_expr("K3 u K4") ==
          GraphExpr::unite({{Bigint(1), GraphExpr::complete(Bigint(3))},
                            {Bigint(1), GraphExpr::complete(Bigint(4))}}));
}

TEST_CASE("parse_expr errors carry a position") {
    CHECK_THROWS_WITH_AS(parse_expr("K0"), doctest::Contains("position"),
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_expr("0*K2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_expr(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_expr("K1 +"), std::invalid_argument);
    CHECK_THROWS_AS(parse_expr("K1 + K2)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_expr("(K1 + K2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_expr("3K2"), std::invalid_argument);
}

TEST_CASE("parse after print is the identity on random ASTs") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        GraphExpr e = random_expr(rng);
        std::string text = print_expr(e);
        CAPTURE(text);
        CHECK(parse_expr(text) == e);
        // canonical form is idempotent under print . parse
        CHECK(print_expr(parse_expr(text)) == text);
    }
}

TEST_CASE("realize") {
    Graph k4 = realize(GraphExpr::complete(Bigint(4)));
    CHECK(k4.vertex_count() == 4);
    CHECK(k4.edge_count() == 6);

    Graph star = realize(power_graph_expr_zpmn(2, 1, 2));
    CHECK(star.degree_sequence_sorted() == std::vector<std::size_t>{1, 1, 1, 3});

    // realized z2r4s structure matches the actual power graph of Z_2 x Z_4
    Graph realized = realize(power_graph_expr_z2r4s(1, 1));
    Graph built = build_power_graph(GroupSpec::make({2, 4}));
    CHECK(realized.vertex_count() == built.vertex_count());
    CHECK(realized.edge_count() == built.edge_count());
    CHECK(realized.degree_sequence_sorted() == built.degree_sequence_sorted());

    CHECK_THROWS_AS(realize(GraphExpr::complete(Bigint(100000))), std::length_error);
}

TEST_CASE("realized vertex count equals the symbolic count") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        GraphExpr e = random_expr(rng);
        Graph g = realize(e);
        CHECK(Bigint(static_cast<unsigned long long>(g.vertex_count())) == e.vertex_count());
    }
}

namespace {

std::size_t component_count(const Graph& g) {
    std::vector<bool> seen(g.vertex_count(), false);
    std::size_t components = 0;
    for (std::size_t start = 0; start < g.vertex_count(); ++start) {
        if (seen[start]) continue;
        ++components;
        std::vector<std::size_t> stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v = 0; v < g.vertex_count(); ++v)
                if (!seen[v] && g.adjacent(u, v)) {
                    seen[v] = true;
                    stack.push_back(v);
                }
        }
    }
    return components;
}

}  // namespace

TEST_CASE("zero eigenvalue multiplicity counts connected components") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 40; ++trial) {
        GraphExpr e = random_expr(rng);
        Bigint zero_mult = expr_spectrum(e).multiplicity_of(Bigint(0));
        CHECK(zero_mult == Bigint(static_cast<unsigned long long>(component_count(realize(e)))));
    }
    // any top-level join is connected
    for (int trial = 0; trial < 20; ++trial) {
        GraphExpr e = GraphExpr::join(random_expr(rng), random_expr(rng));
        CHECK(expr_spectrum(e).multiplicity_of(Bigint(0)) == Bigint(1));
    }
}

TEST_CASE("realized builders match the built power graphs") {
    struct Case {
        GraphExpr expr;
        std::vector<std::uint64_t> factors;
    };
    std::vector<Case> cases;
    cases.push_back({power_graph_expr_zpmn(2, 2, 2), {4, 4}});
    cases.push_back({power_graph_expr_zpmn(3, 1, 2), {3, 3}});
    cases.push_back({power_graph_expr_zpmn(2, 2, 1), {4}});
    cases.push_back({power_graph_expr_z2r4s(2, 1), {2, 2, 4}});
    cases.push_back({power_graph_expr_z2r4s(0, 2), {4, 4}});
    for (const auto& c : cases) {
        Graph realized = realize(c.expr);
        Graph built = build_power_graph(GroupSpec::make(c.factors));
        CHECK(realized.degree_sequence_sorted() == built.degree_sequence_sorted());
        CHECK(realized.edge_count() == built.edge_count());
    }
}

TEST_CASE("expression spectra agree with the matrix oracle on random expressions") {
    std::mt19937_64 rng(47);
    int checked = 0;
    while (checked < 30) {
        GraphExpr e = random_expr(rng);
        if (e.vertex_count() > Bigint(40)) continue;
        ++checked;
        CHECK(expr_spectrum(e) == graph_spectrum_oracle(realize(e)));
    }
}

TEST_CASE("union counts of zero are rejected at construction") {
    CHECK_THROWS_AS(
        GraphExpr::unite({{Bigint(0), GraphExpr::complete(Bigint(2))}}),
        std::invalid_argument);
    CHECK_THROWS_AS(GraphExpr::unite({}), std::invalid_argument);
    CHECK_THROWS_AS(GraphExpr::complete(Bigint(0)), std::invalid_argument);
}
