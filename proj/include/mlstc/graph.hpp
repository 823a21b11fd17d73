#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace mlstc {

using NodeId = std::int32_t;

// Undirected edge in canonical order u < v.
struct Edge {
    NodeId u = 0;
    NodeId v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Canonicalizes endpoint order; self-loops are invalid.
inline Edge make_edge(NodeId a, NodeId b) {
    if (a == b) throw std::invalid_argument("self-loop edge");
    return a < b ? Edge{a, b} : Edge{b, a};
}

struct EdgeHash {
    std::size_t operator()(const Edge& e) const {
        return std::hash<std::uint64_t>{}(
            (static_cast<std::uint64_t>(static_cast<std::uint32_t>(e.u)) << 32) |
            static_cast<std::uint32_t>(e.v));
    }
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Column positions of the layer/src/dst fields in an edge-list line.
struct ColumnOrder {
    int layer = 0;
    int src = 1;
    int dst = 2;

    // Parses e.g. "layer,src,dst" or "src,dst,layer".
    static ColumnOrder parse(const std::string& spec);
};

struct ParseStats {
    std::size_t lines_total = 0;
    std::size_t duplicate_edges = 0;  // duplicate (layer, edge) lines collapsed
};

// One shared node set, k layers of canonical undirected edges.
// Immutable after construction; safe for concurrent read-only use.
class MultilayerGraph {
public:
    // Reads `<layer> <u> <v>` lines; '#'-prefixed lines are comments, blank
    // lines are skipped. Layers are indexed by first occurrence, node labels
    // by first appearance. Duplicate (layer, edge) lines collapse.
    static MultilayerGraph parse(std::istream& in, const ColumnOrder& cols = {},
                                 ParseStats* stats = nullptr);
    static MultilayerGraph parse_file(const std::string& path, const ColumnOrder& cols = {},
                                      ParseStats* stats = nullptr);

    // Programmatic construction; edges are canonicalized and deduplicated.
    static MultilayerGraph from_edges(int node_count,
                                      std::vector<std::vector<Edge>> layers,
                                      std::vector<std::string> node_labels = {},
                                      std::vector<std::string> layer_names = {});

    int node_count() const { return n_; }
    int layer_count() const { return static_cast<int>(layers_.size()); }

    std::size_t layer_edge_count(int layer) const { return layer_edges(layer).size(); }
    // m = sum of m_i over all layers (one unit per (layer, edge) instance).
    std::size_t total_edge_instances() const { return total_instances_; }
    std::size_t aggregated_edge_count() const { return aggregated_.size(); }

    const std::vector<Edge>& layer_edges(int layer) const;
    const std::vector<Edge>& aggregated_edges() const { return aggregated_; }
    const std::vector<NodeId>& neighbors(int layer, NodeId v) const;

    bool has_edge(int layer, Edge e) const;
    // Number of layers containing e; 0 if absent everywhere.
    int layer_count_of(Edge e) const;
    // Sorted layer indices containing e; empty if absent.
    const std::vector<int>& layers_of(Edge e) const;
    // Index of e in aggregated_edges(), or -1.
    int aggregated_index(Edge e) const;

    const std::string& node_label(NodeId v) const { return node_labels_[v]; }
    const std::string& layer_name(int layer) const { return layer_names_[layer]; }
    std::optional<NodeId> node_id(const std::string& label) const;

    // Non-edges {u,w} of `layer` closing at least one wedge (v,{u,w}) of the
    // layer. Sorted canonically.
    std::vector<Edge> candidate_new_edges(int layer) const;

    const ParseStats& parse_stats() const { return stats_; }

    // Inverse of parse(): `<layer-name> <u-label> <v-label>` per instance.
    void write_mledges(std::ostream& out) const;

private:
    void check_layer(int layer) const;
    void finalize();

    int n_ = 0;
    std::vector<std::string> node_labels_;
    std::unordered_map<std::string, NodeId> node_ids_;
    std::vector<std::string> layer_names_;
    std::vector<std::vector<Edge>> layers_;                // sorted, unique
    std::vector<std::vector<std::vector<NodeId>>> adj_;    // [layer][node], sorted
    std::vector<Edge> aggregated_;                         // sorted
    std::vector<std::vector<int>> edge_layers_;            // parallel to aggregated_
    std::unordered_map<Edge, int, EdgeHash> edge_index_;
    std::size_t total_instances_ = 0;
    ParseStats stats_;
};

}  // namespace mlstc
