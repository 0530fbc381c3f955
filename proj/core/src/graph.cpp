#include "semclass/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "semclass/util.hpp"

namespace semclass {

SenseGraph::Node SenseGraph::add_node(const SenseId& id) {
    auto [it, inserted] = index_.try_emplace(id, static_cast<Node>(ids_.size()));
    if (inserted) {
        ids_.push_back(id);
        adj_.emplace_back();
    }
    return it->second;
}

std::optional<SenseGraph::Node> SenseGraph::find(const SenseId& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

void SenseGraph::add_edge(Node a, Node b, double w) {
    if (a == b) throw std::invalid_argument("self-loop on '" + ids_[a].text() + "'");
    if (!std::isfinite(w) || w <= 0)
        throw std::invalid_argument("edge weight must be finite and > 0");
    adj_[a].push_back({b, w});
    adj_[b].push_back({a, w});
    ++num_edges_;
}

std::optional<double> SenseGraph::edge_weight(Node a, Node b) const {
    for (const Arc& arc : adj_[a])
        if (arc.target == b) return arc.weight;
    return std::nullopt;
}

SenseGraph SenseGraph::induced(std::span<const Node> keep) const {
    SenseGraph sub;
    std::unordered_map<Node, Node> remap;
    remap.reserve(keep.size());
    for (Node n : keep) remap.emplace(n, sub.add_node(ids_[n]));
    for (Node n : keep) {
        Node a = remap.at(n);
        for (const Arc& arc : adj_[n]) {
            if (arc.target <= n) continue;  // each undirected edge once
            auto it = remap.find(arc.target);
            if (it != remap.end()) sub.add_edge(a, it->second, arc.weight);
        }
    }
    return sub;
}

SenseGraph SenseGraph::canonical() const {
    std::vector<Node> order(num_nodes());
    for (Node i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](Node a, Node b) { return ids_[a] < ids_[b]; });

    SenseGraph out;
    for (Node n : order) out.add_node(ids_[n]);
    std::vector<Node> remap(num_nodes());
    for (Node pos = 0; pos < order.size(); ++pos) remap[order[pos]] = pos;

    std::vector<std::pair<Node, Node>> edges;
    std::vector<double> weights;
    for (Node n = 0; n < num_nodes(); ++n)
        for (const Arc& arc : adj_[n])
            if (n < arc.target) {
                Node a = remap[n], b = remap[arc.target];
                edges.push_back({std::min(a, b), std::max(a, b)});
                weights.push_back(arc.weight);
            }
    std::vector<std::size_t> idx(edges.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t i, std::size_t j) { return edges[i] < edges[j]; });
    for (std::size_t i : idx) out.add_edge(edges[i].first, edges[i].second, weights[i]);
    return out;
}

void SenseGraph::dump_tsv(std::ostream& out) const {
    std::vector<std::pair<std::pair<SenseId, SenseId>, double>> lines;
    for (Node n = 0; n < num_nodes(); ++n)
        for (const Arc& arc : adj_[n]) {
            if (arc.target <= n) continue;
            SenseId a = ids_[n], b = ids_[arc.target];
            if (b < a) std::swap(a, b);
            lines.push_back({{std::move(a), std::move(b)}, arc.weight});
        }
    std::sort(lines.begin(), lines.end());
    for (const auto& [pair, w] : lines)
        out << pair.first << '\t' << pair.second << '\t' << format_double(w) << '\n';
}

std::vector<std::vector<SenseGraph::Node>> connected_components(const SenseGraph& g) {
    std::vector<bool> visited(g.num_nodes(), false);
    std::vector<std::vector<SenseGraph::Node>> components;
    std::vector<SenseGraph::Node> stack;

    for (SenseGraph::Node start = 0; start < g.num_nodes(); ++start) {
        if (visited[start]) continue;
        std::vector<SenseGraph::Node> comp;
        stack.push_back(start);
        visited[start] = true;
        while (!stack.empty()) {
            SenseGraph::Node n = stack.back();
            stack.pop_back();
            comp.push_back(n);
            for (const auto& arc : g.neighbors(n))
                if (!visited[arc.target]) {
                    visited[arc.target] = true;
                    stack.push_back(arc.target);
                }
        }
        std::sort(comp.begin(), comp.end(),
                  [&](auto a, auto b) { return g.id_of(a) < g.id_of(b); });
        components.push_back(std::move(comp));
    }
    std::sort(components.begin(), components.end(), [&](const auto& a, const auto& b) {
        return g.id_of(a.front()) < g.id_of(b.front());
    });
    return components;
}

}  // namespace semclass
