#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "pgraph/group.hpp"

namespace pgraph {

// Simple undirected graph over vertex indices, stored as a dense symmetric
// bit matrix (power graphs always have a universal vertex, so density is
// the common case). Immutable once built.
class Graph {
public:
    explicit Graph(std::size_t vertex_count);

    std::size_t vertex_count() const { return n_; }

    // Adds {u, v}; self-loops are rejected.
    void add_edge(std::size_t u, std::size_t v);
    bool adjacent(std::size_t u, std::size_t v) const;

    // Number of neighbors; throws std::out_of_range on a bad index.
    std::size_t degree(std::size_t v) const;

    std::size_t edge_count() const;

    std::vector<std::size_t> degree_sequence_sorted() const;

    // Edge list export: one "u v" pair per line, 0-based, u < v, sorted.
    void write_edge_list(std::ostream& out) const;

    // Vertex labels are optional; build_power_graph fills them with the
    // group elements in lexicographic order.
    const std::vector<GroupElement>& labels() const { return labels_; }
    void set_labels(std::vector<GroupElement> labels) { labels_ = std::move(labels); }

private:
    std::size_t n_;
    std::size_t words_per_row_;
    std::vector<std::uint64_t> bits_;
    std::vector<GroupElement> labels_;

    void check_vertex(std::size_t v) const;
};

// The power graph of G: vertices are the group elements in lexicographic
// order, and distinct a, b are adjacent iff one generates the other
// (b in <a> or a in <b>). Requires |G| <= cap.
Graph build_power_graph(const GroupSpec& g, std::size_t cap = kDefaultEnumCap);

}  // namespace pgraph
