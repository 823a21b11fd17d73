#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <unordered_map>
#include <vector>

#include "mlstc/graph.hpp"

namespace mlstc {

// Open triangle (center, {u,w}): both legs {center,u} and {center,w} exist in
// the layer, the closing edge {u,w} does not.
struct Wedge {
    NodeId center = 0;
    Edge ends;

    friend bool operator==(const Wedge&, const Wedge&) = default;
    friend auto operator<=>(const Wedge&, const Wedge&) = default;
};

// All wedges of one layer, ordered by (center, ends).
std::vector<Wedge> enumerate_wedges(const MultilayerGraph& g, int layer);

// Centers v with (v,{u,w}) a wedge of `layer` with respect to e = {u,w};
// empty unless e is a non-edge of the layer. Sorted.
std::vector<NodeId> wedge_centers_for(const MultilayerGraph& g, int layer, Edge e);

struct WedgeWitness {
    std::int32_t layer = 0;
    NodeId center = 0;
};

// Node-weighted graph with one node per aggregated input edge; an adjacency
// per wedge leg pair, deduplicated over layers. Adjacency order follows the
// first witness in (layer, center, ends) order.
struct WedgeGraph {
    std::vector<Edge> node_edges;        // aggregated edges, canonical order
    std::vector<std::int64_t> weights;   // layer counts

    struct Adjacency {
        std::int32_t a = 0, b = 0;       // node indices, a < b
        WedgeWitness witness;            // first witnessing (layer, center)
    };
    std::vector<Adjacency> adjacencies;
};

WedgeGraph build_wedge_graph(const MultilayerGraph& g);
// Restriction to a subset of layers (single-layer baselines use one element).
WedgeGraph build_wedge_graph(const MultilayerGraph& g, std::span<const int> layers);

// 3-uniform hypergraph: one node per edge that exists somewhere or closes a
// wedge somewhere, one hyperedge per wedge triple (legs + closing edge).
struct WedgeHypergraph {
    struct Node {
        Edge edge;
        std::int64_t weight = 0;
        std::vector<std::int32_t> existing_layers;   // layers containing edge
        std::vector<std::int32_t> candidate_layers;  // layers where it closes a wedge
    };
    struct Hyperedge {
        std::array<std::int32_t, 3> nodes{};         // sorted node indices
        std::vector<WedgeWitness> witnesses;         // all (layer, center) origins
    };

    std::vector<Node> nodes;          // canonical edge order
    std::vector<Hyperedge> hyperedges;

    int node_index(Edge e) const;
    std::unordered_map<Edge, int, EdgeHash> index;
};

WedgeHypergraph build_wedge_hypergraph(const MultilayerGraph& g);
WedgeHypergraph build_wedge_hypergraph(const MultilayerGraph& g, std::span<const int> layers);

// Text dumps: one `edge u v weight w` line per node, then one line per
// (hyper)edge listing its member edges.
void dump_wedge_graph(std::ostream& out, const MultilayerGraph& g, const WedgeGraph& w);
void dump_wedge_hypergraph(std::ostream& out, const MultilayerGraph& g, const WedgeHypergraph& h);

}  // namespace mlstc
