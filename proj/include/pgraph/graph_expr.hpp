#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pgraph/bigint.hpp"
#include "pgraph/graph.hpp"
#include "pgraph/spectrum.hpp"

namespace pgraph {

// AST over complete graphs, closed under disjoint union (with repetition
// counts) and join. The structural decompositions of the two power-graph
// families are provided as builders below; keeping repetition counts
// symbolic lets spectra of huge expressions be evaluated without
// materializing vertices.
class GraphExpr {
public:
    enum class Kind { Complete, Union, Join };

    struct UnionPart;  // { count >= 1, expr }; defined below

    static GraphExpr complete(Bigint k);  // k >= 1
    static GraphExpr unite(std::vector<UnionPart> parts);  // nonempty, counts >= 1
    static GraphExpr join(GraphExpr left, GraphExpr right);

    Kind kind() const { return kind_; }
    const Bigint& complete_order() const;          // Complete only
    const std::vector<UnionPart>& parts() const;   // Union only
    const GraphExpr& left() const;                 // Join only
    const GraphExpr& right() const;                // Join only

    Bigint vertex_count() const;

    bool operator==(const GraphExpr& o) const;

private:
    GraphExpr() = default;
    Kind kind_ = Kind::Complete;
    Bigint k_;
    std::vector<UnionPart> parts_;
    std::vector<GraphExpr> join_;  // exactly {left, right} for Join
};

struct GraphExpr::UnionPart {
    Bigint count;  // >= 1
    GraphExpr expr;

    bool operator==(const UnionPart&) const = default;
};

// Structure of the power graph of Z_{p^m}^n:
//   K_1 + l*(K_phi(p) + p^(n-1)*(K_phi(p^2) + ... + p^(n-1)*K_phi(p^m))...)
// with l = (p^n - 1)/(p - 1). Throws std::invalid_argument unless p is
// prime and m, n >= 1.
GraphExpr power_graph_expr_zpmn(std::uint64_t p, unsigned m, unsigned n);

// Structure of the power graph of Z_2^r x Z_4^s (s >= 1):
//   K_1 + (2^s(2^r - 1) K_1  u  (2^s - 1)(K_1 + 2^(r+s-1) K_2))
// The leading union part vanishes when r = 0 and is omitted from the AST.
// Throws std::invalid_argument for s = 0.
GraphExpr power_graph_expr_z2r4s(unsigned r, unsigned s);

// Recursive evaluation through the union and join composition theorems.
FactoredSpectrum expr_spectrum(const GraphExpr& e);

// Concrete adjacency structure; requires vertex_count(e) <= cap.
Graph realize(const GraphExpr& e, std::size_t cap = kDefaultEnumCap);

// Text DSL:
//   expr   := term { "+" term }          (join, loosest)
//   term   := factor { "u" factor }      (union)
//   factor := [ count "*" ] atom
//   atom   := "K" int | "(" expr ")"
// A bare atom stays a plain node; an explicit count or a multi-factor term
// produces a Union node. Errors carry the offending position.
GraphExpr parse_expr(std::string_view text);

// Canonical rendering; parse_expr(print_expr(e)) == e.
std::string print_expr(const GraphExpr& e);

}  // namespace pgraph
