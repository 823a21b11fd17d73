#include "mlstc/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace mlstc {

ColumnOrder ColumnOrder::parse(const std::string& spec) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : spec) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    if (parts.size() != 3) throw std::invalid_argument("columns spec needs 3 fields: " + spec);
    ColumnOrder out{-1, -1, -1};
    for (int i = 0; i < 3; ++i) {
        if (parts[i] == "layer") out.layer = i;
        else if (parts[i] == "src") out.src = i;
        else if (parts[i] == "dst") out.dst = i;
        else throw std::invalid_argument("unknown column name: " + parts[i]);
    }
    if (out.layer < 0 || out.src < 0 || out.dst < 0)
        throw std::invalid_argument("columns spec must name layer, src and dst once each");
    return out;
}

MultilayerGraph MultilayerGraph::parse(std::istream& in, const ColumnOrder& cols,
                                       ParseStats* stats) {
    MultilayerGraph g;
    std::unordered_map<std::string, int> layer_ids;
    std::vector<std::unordered_map<Edge, bool, EdgeHash>> seen;  // per layer

    auto intern_node = [&g](const std::string& label) -> NodeId {
        auto it = g.node_ids_.find(label);
        if (it != g.node_ids_.end()) return it->second;
        NodeId id = static_cast<NodeId>(g.node_labels_.size());
        g.node_labels_.push_back(label);
        g.node_ids_.emplace(label, id);
        return id;
    };

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        g.stats_.lines_total++;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;

        std::istringstream fields(line);
        std::string tok[3];
        std::string extra;
        if (!(fields >> tok[0] >> tok[1] >> tok[2]))
            throw ParseError("expected 3 whitespace-separated fields", lineno);
        if (fields >> extra)
            throw ParseError("expected 3 whitespace-separated fields, found more", lineno);

        const std::string& layer_label = tok[cols.layer];
        const std::string& src_label = tok[cols.src];
        const std::string& dst_label = tok[cols.dst];

        if (src_label == dst_label) throw ParseError("self-loop edge rejected", lineno);

        int layer;
        auto lit = layer_ids.find(layer_label);
        if (lit == layer_ids.end()) {
            layer = static_cast<int>(g.layer_names_.size());
            layer_ids.emplace(layer_label, layer);
            g.layer_names_.push_back(layer_label);
            g.layers_.emplace_back();
            seen.emplace_back();
        } else {
            layer = lit->second;
        }

        NodeId u = intern_node(src_label);
        NodeId v = intern_node(dst_label);
        Edge e = make_edge(u, v);
        if (!seen[layer].emplace(e, true).second) {
            g.stats_.duplicate_edges++;
            continue;
        }
        g.layers_[layer].push_back(e);
    }
    if (g.layers_.empty()) throw ParseError("no edges found; a multilayer graph needs k >= 1", lineno);

    g.n_ = static_cast<int>(g.node_labels_.size());
    g.finalize();
    if (stats) *stats = g.stats_;
    return g;
}

MultilayerGraph MultilayerGraph::parse_file(const std::string& path, const ColumnOrder& cols,
                                            ParseStats* stats) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return parse(in, cols, stats);
}

MultilayerGraph MultilayerGraph::from_edges(int node_count,
                                            std::vector<std::vector<Edge>> layers,
                                            std::vector<std::string> node_labels,
                                            std::vector<std::string> layer_names) {
    if (node_count < 0) throw std::invalid_argument("negative node count");
    if (layers.empty()) throw std::invalid_argument("a multilayer graph needs k >= 1");
    MultilayerGraph g;
    g.n_ = node_count;
    if (node_labels.empty()) {
        for (int i = 0; i < node_count; ++i) node_labels.push_back(std::to_string(i));
    }
    if (static_cast<int>(node_labels.size()) != node_count)
        throw std::invalid_argument("node label count mismatch");
    g.node_labels_ = std::move(node_labels);
    for (NodeId i = 0; i < g.n_; ++i) g.node_ids_.emplace(g.node_labels_[i], i);

    if (layer_names.empty()) {
        for (std::size_t i = 0; i < layers.size(); ++i) layer_names.push_back(std::to_string(i + 1));
    }
    if (layer_names.size() != layers.size())
        throw std::invalid_argument("layer name count mismatch");
    g.layer_names_ = std::move(layer_names);

    for (auto& layer : layers) {
        for (Edge& e : layer) {
            if (e.u < 0 || e.v >= node_count) throw std::invalid_argument("edge endpoint out of range");
            e = make_edge(e.u, e.v);
        }
    }
    g.layers_ = std::move(layers);
    g.finalize();
    return g;
}

void MultilayerGraph::finalize() {
    total_instances_ = 0;
    for (auto& layer : layers_) {
        std::sort(layer.begin(), layer.end());
        layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
        total_instances_ += layer.size();
    }

    aggregated_.clear();
    for (const auto& layer : layers_) aggregated_.insert(aggregated_.end(), layer.begin(), layer.end());
    std::sort(aggregated_.begin(), aggregated_.end());
    aggregated_.erase(std::unique(aggregated_.begin(), aggregated_.end()), aggregated_.end());

    edge_index_.clear();
    edge_index_.reserve(aggregated_.size() * 2);
    for (std::size_t i = 0; i < aggregated_.size(); ++i)
        edge_index_.emplace(aggregated_[i], static_cast<int>(i));

    edge_layers_.assign(aggregated_.size(), {});
    for (int i = 0; i < layer_count(); ++i)
        for (Edge e : layers_[i]) edge_layers_[edge_index_.at(e)].push_back(i);

    adj_.assign(layers_.size(), std::vector<std::vector<NodeId>>(n_));
    for (int i = 0; i < layer_count(); ++i) {
        for (Edge e : layers_[i]) {
            adj_[i][e.u].push_back(e.v);
            adj_[i][e.v].push_back(e.u);
        }
        for (auto& nbrs : adj_[i]) std::sort(nbrs.begin(), nbrs.end());
    }
}

void MultilayerGraph::check_layer(int layer) const {
    if (layer < 0 || layer >= layer_count())
        throw std::out_of_range("invalid layer index " + std::to_string(layer));
}

const std::vector<Edge>& MultilayerGraph::layer_edges(int layer) const {
    check_layer(layer);
    return layers_[layer];
}

const std::vector<NodeId>& MultilayerGraph::neighbors(int layer, NodeId v) const {
    check_layer(layer);
    return adj_[layer][v];
}

bool MultilayerGraph::has_edge(int layer, Edge e) const {
    check_layer(layer);
    return std::binary_search(layers_[layer].begin(), layers_[layer].end(), e);
}

int MultilayerGraph::layer_count_of(Edge e) const {
    return static_cast<int>(layers_of(e).size());
}

const std::vector<int>& MultilayerGraph::layers_of(Edge e) const {
    static const std::vector<int> kEmpty;
    auto it = edge_index_.find(e);
    if (it == edge_index_.end()) return kEmpty;
    return edge_layers_[it->second];
}

int MultilayerGraph::aggregated_index(Edge e) const {
    auto it = edge_index_.find(e);
    return it == edge_index_.end() ? -1 : it->second;
}

std::optional<NodeId> MultilayerGraph::node_id(const std::string& label) const {
    auto it = node_ids_.find(label);
    if (it == node_ids_.end()) return std::nullopt;
    return it->second;
}

std::vector<Edge> MultilayerGraph::candidate_new_edges(int layer) const {
    check_layer(layer);
    std::vector<Edge> out;
    std::unordered_map<Edge, bool, EdgeHash> seen;
    for (NodeId v = 0; v < n_; ++v) {
        const auto& nbrs = adj_[layer][v];
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                Edge gap{nbrs[i], nbrs[j]};
                if (has_edge(layer, gap)) continue;
                if (seen.emplace(gap, true).second) out.push_back(gap);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

void MultilayerGraph::write_mledges(std::ostream& out) const {
    for (int i = 0; i < layer_count(); ++i)
        for (Edge e : layers_[i])
            out << layer_names_[i] << ' ' << node_labels_[e.u] << ' ' << node_labels_[e.v] << '\n';
}

}  // namespace mlstc
