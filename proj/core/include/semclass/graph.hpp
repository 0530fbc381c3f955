#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <unordered_map>
#include <vector>

#include "semclass/sense_id.hpp"

namespace semclass {

// Undirected weighted graph over senses. No self-loops; weights finite and
// strictly positive (a zero-weight edge is an absent edge). Node indices are
// assigned in insertion order and adjacency is stored in both directions.
class SenseGraph {
public:
    using Node = std::uint32_t;

    struct Arc {
        Node target;
        double weight;
        bool operator==(const Arc&) const = default;
    };

    std::size_t num_nodes() const { return ids_.size(); }
    std::size_t num_edges() const { return num_edges_; }

    // Idempotent: returns the existing node when the id is already present.
    Node add_node(const SenseId& id);
    std::optional<Node> find(const SenseId& id) const;
    const SenseId& id_of(Node n) const { return ids_[n]; }

    // Precondition: a != b, w finite and > 0, edge not yet present.
    void add_edge(Node a, Node b, double w);
    std::optional<double> edge_weight(Node a, Node b) const;
    const std::vector<Arc>& neighbors(Node n) const { return adj_[n]; }

    // Subgraph induced on `keep`, preserving the given node order.
    SenseGraph induced(std::span<const Node> keep) const;

    // Copy with nodes reordered canonically (sorted by SenseId) and each
    // adjacency list sorted by target. Gives a construction-order-independent
    // representation.
    SenseGraph canonical() const;

    // Debug dump: one `a\tb\tweight` line per edge, smaller endpoint first,
    // lines sorted.
    void dump_tsv(std::ostream& out) const;

private:
    std::vector<SenseId> ids_;
    std::unordered_map<SenseId, Node> index_;
    std::vector<std::vector<Arc>> adj_;
    std::size_t num_edges_ = 0;
};

// Maximal connected node sets. Components are sorted by their smallest
// member's SenseId, members within a component likewise.
std::vector<std::vector<SenseGraph::Node>> connected_components(const SenseGraph& g);

}  // namespace semclass
