#include "pgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <stdexcept>

namespace pgraph {

Graph::Graph(std::size_t vertex_count)
    : n_(vertex_count),
      words_per_row_((vertex_count + 63) / 64),
      bits_(n_ * words_per_row_, 0) {}

void Graph::check_vertex(std::size_t v) const {
    if (v >= n_) throw std::out_of_range("Graph: vertex index out of range");
}

void Graph::add_edge(std::size_t u, std::size_t v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: self-loops are not allowed");
    bits_[u * words_per_row_ + v / 64] |= std::uint64_t{1} << (v % 64);
    bits_[v * words_per_row_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
    check_vertex(u);
    check_vertex(v);
    return (bits_[u * words_per_row_ + v / 64] >> (v % 64)) & 1;
}

std::size_t Graph::degree(std::size_t v) const {
    check_vertex(v);
    std::size_t d = 0;
    for (std::size_t w = 0; w < words_per_row_; ++w)
        d += std::popcount(bits_[v * words_per_row_ + w]);
    return d;
}

std::size_t Graph::edge_count() const {
    std::size_t total = 0;
    for (std::uint64_t w : bits_) total += std::popcount(w);
    return total / 2;
}

std::vector<std::size_t> Graph::degree_sequence_sorted() const {
    std::vector<std::size_t> seq(n_);
    for (std::size_t v = 0; v < n_; ++v) seq[v] = degree(v);
    std::sort(seq.begin(), seq.end());
    return seq;
}

void Graph::write_edge_list(std::ostream& out) const {
    for (std::size_t u = 0; u < n_; ++u)
        for (std::size_t v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out << u << ' ' << v << '\n';
}

Graph build_power_graph(const GroupSpec& g, std::size_t cap) {
    std::size_t count = g.enum_count(cap);
    Graph graph(count);
    std::vector<GroupElement> labels;
    labels.reserve(count);
    for (std::size_t i = 0; i < count; ++i) labels.push_back(g.element_at(i));

    // For each a, walk the cyclic subgroup <a> once and connect a to every
    // proper power; total work is sum over elements of their orders.
    for (std::size_t ia = 0; ia < count; ++ia) {
        const GroupElement& a = labels[ia];
        GroupElement cur = g.add(a, a);
        while (!(cur == a)) {
            std::size_t ib = g.index_of(cur);
            if (ib != ia && !graph.adjacent(ia, ib)) graph.add_edge(ia, ib);
            if (std::all_of(cur.coords.begin(), cur.coords.end(),
                            [](std::uint64_t c) { return c == 0; }))
                break;  // reached the identity; <a> is exhausted
            cur = g.add(cur, a);
        }
        // identity is in <a> for every a
        std::size_t id_index = g.index_of(g.identity());
        if (ia != id_index && !graph.adjacent(ia, id_index)) graph.add_edge(ia, id_index);
    }
    graph.set_labels(std::move(labels));
    return graph;
}

}  // namespace pgraph
