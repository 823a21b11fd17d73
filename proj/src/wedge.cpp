#include "mlstc/wedge.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

namespace mlstc {

std::vector<Wedge> enumerate_wedges(const MultilayerGraph& g, int layer) {
    std::vector<Wedge> out;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const auto& nbrs = g.neighbors(layer, v);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                Edge gap{nbrs[i], nbrs[j]};  // sorted neighbor list keeps u < w
                if (!g.has_edge(layer, gap)) out.push_back(Wedge{v, gap});
            }
        }
    }
    return out;
}

std::vector<NodeId> wedge_centers_for(const MultilayerGraph& g, int layer, Edge e) {
    std::vector<NodeId> centers;
    if (g.has_edge(layer, e)) return centers;
    const auto& nu = g.neighbors(layer, e.u);
    const auto& nv = g.neighbors(layer, e.v);
    std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                          std::back_inserter(centers));
    return centers;
}

WedgeGraph build_wedge_graph(const MultilayerGraph& g) {
    std::vector<int> all(g.layer_count());
    std::iota(all.begin(), all.end(), 0);
    return build_wedge_graph(g, all);
}

WedgeGraph build_wedge_graph(const MultilayerGraph& g, std::span<const int> layers) {
    WedgeGraph w;
    // Node set: edges present in the selected layers (all aggregated edges
    // when every layer is selected).
    std::unordered_map<Edge, int, EdgeHash> node_of;
    for (Edge e : g.aggregated_edges()) {
        const auto& in_layers = g.layers_of(e);
        std::int64_t count = 0;
        for (int l : in_layers)
            if (std::find(layers.begin(), layers.end(), l) != layers.end()) ++count;
        if (count == 0) continue;
        node_of.emplace(e, static_cast<int>(w.node_edges.size()));
        w.node_edges.push_back(e);
        w.weights.push_back(count);
    }

    struct PairHash {
        std::size_t operator()(const std::pair<std::int32_t, std::int32_t>& p) const {
            return std::hash<std::int64_t>{}((static_cast<std::int64_t>(p.first) << 32) | p.second);
        }
    };
    std::unordered_map<std::pair<std::int32_t, std::int32_t>, bool, PairHash> seen;

    for (int layer : layers) {
        for (const Wedge& wd : enumerate_wedges(g, layer)) {
            std::int32_t a = node_of.at(make_edge(wd.center, wd.ends.u));
            std::int32_t b = node_of.at(make_edge(wd.center, wd.ends.v));
            if (a > b) std::swap(a, b);
            if (seen.emplace(std::make_pair(a, b), true).second)
                w.adjacencies.push_back({a, b, {layer, wd.center}});
        }
    }
    return w;
}

int WedgeHypergraph::node_index(Edge e) const {
    auto it = index.find(e);
    return it == index.end() ? -1 : it->second;
}

WedgeHypergraph build_wedge_hypergraph(const MultilayerGraph& g) {
    std::vector<int> all(g.layer_count());
    std::iota(all.begin(), all.end(), 0);
    return build_wedge_hypergraph(g, all);
}

WedgeHypergraph build_wedge_hypergraph(const MultilayerGraph& g, std::span<const int> layers) {
    WedgeHypergraph h;

    // Node universe: edges existing in the selected layers plus candidates
    // closing a wedge in one of them.
    std::vector<std::pair<Edge, std::pair<std::int32_t, bool>>> roles;  // (edge, (layer, existing))
    for (int layer : layers) {
        for (Edge e : g.layer_edges(layer)) roles.push_back({e, {layer, true}});
        for (Edge e : g.candidate_new_edges(layer)) roles.push_back({e, {layer, false}});
    }
    std::sort(roles.begin(), roles.end());

    for (const auto& [edge, role] : roles) {
        if (h.nodes.empty() || !(h.nodes.back().edge == edge)) {
            h.nodes.push_back({edge, 0, {}, {}});
            h.index.emplace(edge, static_cast<int>(h.nodes.size() - 1));
        }
        auto& node = h.nodes.back();
        node.weight += 1;
        if (role.second) node.existing_layers.push_back(role.first);
        else node.candidate_layers.push_back(role.first);
    }

    struct TripleHash {
        std::size_t operator()(const std::array<std::int32_t, 3>& t) const {
            std::size_t s = std::hash<std::int32_t>{}(t[0]);
            s = s * 1000003u + static_cast<std::size_t>(t[1]);
            s = s * 1000003u + static_cast<std::size_t>(t[2]);
            return s;
        }
    };
    std::unordered_map<std::array<std::int32_t, 3>, int, TripleHash> triple_index;

    for (int layer : layers) {
        for (const Wedge& wd : enumerate_wedges(g, layer)) {
            std::array<std::int32_t, 3> triple = {
                static_cast<std::int32_t>(h.index.at(make_edge(wd.center, wd.ends.u))),
                static_cast<std::int32_t>(h.index.at(make_edge(wd.center, wd.ends.v))),
                static_cast<std::int32_t>(h.index.at(wd.ends))};
            std::sort(triple.begin(), triple.end());
            auto [it, fresh] = triple_index.emplace(triple, static_cast<int>(h.hyperedges.size()));
            if (fresh) h.hyperedges.push_back({triple, {}});
            h.hyperedges[it->second].witnesses.push_back({layer, wd.center});
        }
    }
    return h;
}

void dump_wedge_graph(std::ostream& out, const MultilayerGraph& g, const WedgeGraph& w) {
    for (std::size_t i = 0; i < w.node_edges.size(); ++i) {
        Edge e = w.node_edges[i];
        out << "edge " << g.node_label(e.u) << ' ' << g.node_label(e.v)
            << " weight " << w.weights[i] << '\n';
    }
    for (const auto& adj : w.adjacencies) {
        Edge a = w.node_edges[adj.a], b = w.node_edges[adj.b];
        out << "wedge " << g.node_label(a.u) << ' ' << g.node_label(a.v) << "  "
            << g.node_label(b.u) << ' ' << g.node_label(b.v) << '\n';
    }
}

void dump_wedge_hypergraph(std::ostream& out, const MultilayerGraph& g, const WedgeHypergraph& h) {
    for (const auto& node : h.nodes) {
        out << "edge " << g.node_label(node.edge.u) << ' ' << g.node_label(node.edge.v)
            << " weight " << node.weight << '\n';
    }
    for (const auto& he : h.hyperedges) {
        out << "wedge";
        for (std::int32_t ni : he.nodes) {
            Edge e = h.nodes[ni].edge;
            out << "  " << g.node_label(e.u) << ' ' << g.node_label(e.v);
        }
        out << '\n';
    }
}

}  // namespace mlstc
