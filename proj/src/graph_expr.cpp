#include "pgraph/graph_expr.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "pgraph/numutil.hpp"

namespace pgraph {

GraphExpr GraphExpr::complete(Bigint k) {
    if (k < Bigint(1))
        throw std::invalid_argument("GraphExpr: complete graph order must be >= 1");
    GraphExpr e;
    e.kind_ = Kind::Complete;
    e.k_ = std::move(k);
    return e;
}

GraphExpr GraphExpr::unite(std::vector<UnionPart> parts) {
    if (parts.empty())
        throw std::invalid_argument("GraphExpr: union needs at least one part");
    for (const auto& p : parts)
        if (p.count < Bigint(1))
            throw std::invalid_argument("GraphExpr: union counts must be >= 1");
    GraphExpr e;
    e.kind_ = Kind::Union;
    e.parts_ = std::move(parts);
    return e;
}

GraphExpr GraphExpr::join(GraphExpr left, GraphExpr right) {
    GraphExpr e;
    e.kind_ = Kind::Join;
    e.join_.push_back(std::move(left));
    e.join_.push_back(std::move(right));
    return e;
}

const Bigint& GraphExpr::complete_order() const {
    if (kind_ != Kind::Complete) throw std::logic_error("GraphExpr: not a Complete node");
    return k_;
}

const std::vector<GraphExpr::UnionPart>& GraphExpr::parts() const {
    if (kind_ != Kind::Union) throw std::logic_error("GraphExpr: not a Union node");
    return parts_;
}

const GraphExpr& GraphExpr::left() const {
    if (kind_ != Kind::Join) throw std::logic_error("GraphExpr: not a Join node");
    return join_[0];
}

const GraphExpr& GraphExpr::right() const {
    if (kind_ != Kind::Join) throw std::logic_error("GraphExpr: not a Join node");
    return join_[1];
}

Bigint GraphExpr::vertex_count() const {
    switch (kind_) {
        case Kind::Complete:
            return k_;
        case Kind::Union: {
            Bigint total;
            for (const auto& p : parts_) total.add_mul(p.count, p.expr.vertex_count());
            return total;
        }
        case Kind::Join:
            return join_[0].vertex_count() + join_[1].vertex_count();
    }
    return {};
}

bool GraphExpr::operator==(const GraphExpr& o) const {
    if (kind_ != o.kind_) return false;
    switch (kind_) {
        case Kind::Complete:
            return k_ == o.k_;
        case Kind::Union:
            return parts_ == o.parts_;
        case Kind::Join:
            return join_[0] == o.join_[0] && join_[1] == o.join_[1];
    }
    return false;
}

GraphExpr power_graph_expr_zpmn(std::uint64_t p, unsigned m, unsigned n) {
    if (!is_prime_u64(p))
        throw std::invalid_argument("power_graph_expr_zpmn: p must be prime");
    if (m < 1 || n < 1)
        throw std::invalid_argument("power_graph_expr_zpmn: m and n must be >= 1");

    auto phi = [&](unsigned k) {
        // phi(p^k) = p^k - p^(k-1)
        return Bigint::pow(Bigint(p), k) - Bigint::pow(Bigint(p), k - 1);
    };
    Bigint copies_inner = Bigint::pow(Bigint(p), n - 1);  // p^(n-1)

    GraphExpr inner = GraphExpr::complete(phi(m));
    for (unsigned i = m - 1; i >= 1; --i) {
        inner = GraphExpr::join(GraphExpr::complete(phi(i)),
                                GraphExpr::unite({{copies_inner, std::move(inner)}}));
    }

    // l = (p^n - 1)/(p - 1) = 1 + p + ... + p^(n-1)
    Bigint l;
    for (unsigned k = 0; k < n; ++k) l += Bigint::pow(Bigint(p), k);

    return GraphExpr::join(GraphExpr::complete(Bigint(1)),
                           GraphExpr::unite({{l, std::move(inner)}}));
}

GraphExpr power_graph_expr_z2r4s(unsigned r, unsigned s) {
    if (s < 1)
        throw std::invalid_argument(
            "power_graph_expr_z2r4s: s must be >= 1 (s = 0 is the homocyclic case)");

    Bigint two_rs1 = Bigint::pow(Bigint(2), r + s - 1);  // 2^(r+s-1)
    GraphExpr core = GraphExpr::join(GraphExpr::complete(Bigint(1)),
                                     GraphExpr::unite({{two_rs1, GraphExpr::complete(Bigint(2))}}));

    std::vector<GraphExpr::UnionPart> parts;
    // 2^s (2^r - 1) isolated vertices; zero when r = 0, in which case the
    // part is omitted so that counts stay >= 1
    Bigint isolated = Bigint::pow(Bigint(2), s) * (Bigint::pow(Bigint(2), r) - Bigint(1));
    if (isolated > Bigint(0))
        parts.push_back({isolated, GraphExpr::complete(Bigint(1))});
    parts.push_back({Bigint::pow(Bigint(2), s) - Bigint(1), std::move(core)});

    return GraphExpr::join(GraphExpr::complete(Bigint(1)),
                           GraphExpr::unite(std::move(parts)));
}

FactoredSpectrum expr_spectrum(const GraphExpr& e) {
    switch (e.kind()) {
        case GraphExpr::Kind::Complete:
            return spectrum_of_complete(e.complete_order());
        case GraphExpr::Kind::Union: {
            std::vector<std::pair<FactoredSpectrum, Bigint>> parts;
            parts.reserve(e.parts().size());
            for (const auto& p : e.parts())
                parts.emplace_back(expr_spectrum(p.expr), p.count);
            return union_spectrum(parts);
        }
        case GraphExpr::Kind::Join:
            return join_spectrum(expr_spectrum(e.left()), expr_spectrum(e.right()));
    }
    return {};
}

namespace {

// copies vertices of `sub` into `g` starting at `base`; returns the next
// free vertex index
std::size_t realize_into(const GraphExpr& e, Graph& g, std::size_t base) {
    switch (e.kind()) {
        case GraphExpr::Kind::Complete: {
            std::size_t k = static_cast<std::size_t>(e.complete_order().to_u64());
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = i + 1; j < k; ++j) g.add_edge(base + i, base + j);
            return base + k;
        }
        case GraphExpr::Kind::Union: {
            std::size_t cur = base;
            for (const auto& p : e.parts()) {
                std::uint64_t copies = p.count.to_u64();
                for (std::uint64_t c = 0; c < copies; ++c)
                    cur = realize_into(p.expr, g, cur);
            }
            return cur;
        }
        case GraphExpr::Kind::Join: {
            std::size_t mid = realize_into(e.left(), g, base);
            std::size_t end = realize_into(e.right(), g, mid);
            for (std::size_t u = base; u < mid; ++u)
                for (std::size_t v = mid; v < end; ++v) g.add_edge(u, v);
            return end;
        }
    }
    return base;
}

}  // namespace

Graph realize(const GraphExpr& e, std::size_t cap) {
    Bigint count = e.vertex_count();
    if (count > Bigint(static_cast<unsigned long long>(cap)))
        throw std::length_error("realize: vertex count exceeds the enumeration cap");
    Graph g(static_cast<std::size_t>(count.to_u64()));
    realize_into(e, g, 0);
    return g;
}

// ---------------------------------------------------------------------------
// DSL parser and printer

namespace {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    GraphExpr parse() {
        GraphExpr e = parse_expr_rule();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("expression syntax error at position " +
                                    std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool peek_digit() {
        skip_ws();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    Bigint parse_int() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) fail("expected an integer");
        return Bigint(text_.substr(start, pos_ - start));
    }

    // expr := term { "+" term }
    GraphExpr parse_expr_rule() {
        GraphExpr e = parse_term();
        while (eat('+')) e = GraphExpr::join(std::move(e), parse_term());
        return e;
    }

    // term := factor { "u" factor }
    GraphExpr parse_term() {
        auto [count, atom, counted] = parse_factor();
        skip_ws();
        bool multi = peek_union();
        if (!multi && !counted) return std::move(atom);

        std::vector<GraphExpr::UnionPart> parts;
        parts.push_back({std::move(count), std::move(atom)});
        while (eat_union()) {
            auto [c2, a2, counted2] = parse_factor();
            (void)counted2;
            parts.push_back({std::move(c2), std::move(a2)});
        }
        return GraphExpr::unite(std::move(parts));
    }

    bool peek_union() {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == 'u';
    }

    bool eat_union() { return eat('u'); }

    // factor := [ count "*" ] atom
    struct Factor {
        Bigint count;
        GraphExpr atom;
        bool counted;
    };
    Factor parse_factor() {
        // the atom is parsed before the aggregate is formed: gcc 11 leaks
        // already-built aggregate members if a later initializer throws
        if (peek_digit()) {
            Bigint count = parse_int();
            if (count < Bigint(1)) fail("repetition count must be >= 1");
            if (!eat('*')) fail("expected '*' after a repetition count");
            GraphExpr atom = parse_atom();
            return {std::move(count), std::move(atom), true};
        }
        GraphExpr atom = parse_atom();
        return {Bigint(1), std::move(atom), false};
    }

    // atom := "K" int | "(" expr ")"
    GraphExpr parse_atom() {
        skip_ws();
        if (eat('(')) {
            GraphExpr e = parse_expr_rule();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (eat('K')) {
            Bigint k = parse_int();
            if (k < Bigint(1)) fail("K0 is not a graph");
            return GraphExpr::complete(std::move(k));
        }
        fail("expected 'K<int>' or '('");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void print_rec(const GraphExpr& e, std::ostream& os, bool parenthesize_unions) {
    switch (e.kind()) {
        case GraphExpr::Kind::Complete:
            os << 'K' << e.complete_order().to_string();
            return;
        case GraphExpr::Kind::Union: {
            bool parens = parenthesize_unions && e.parts().size() > 1;
            if (parens) os << '(';
            bool first = true;
            for (const auto& p : e.parts()) {
                if (!first) os << " u ";
                first = false;
                os << p.count.to_string() << '*';
                if (p.expr.kind() == GraphExpr::Kind::Complete) {
                    print_rec(p.expr, os, false);
                } else {
                    os << '(';
                    print_rec(p.expr, os, false);
                    os << ')';
                }
            }
            if (parens) os << ')';
            return;
        }
        case GraphExpr::Kind::Join: {
            // '+' is left-associative and loosest; the left side only needs
            // parentheses for a multi-part union, the right also for a join
            print_rec(e.left(), os, true);
            os << " + ";
            if (e.right().kind() == GraphExpr::Kind::Join) {
                os << '(';
                print_rec(e.right(), os, false);
                os << ')';
            } else {
                print_rec(e.right(), os, true);
            }
            return;
        }
    }
}

}  // namespace

GraphExpr parse_expr(std::string_view text) { return ExprParser(text).parse(); }

std::string print_expr(const GraphExpr& e) {
    std::ostringstream os;
    print_rec(e, os, false);
    return os.str();
}

}  // namespace pgraph
