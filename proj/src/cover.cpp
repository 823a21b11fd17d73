#include "mlstc/cover.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <queue>

namespace mlstc {

const char* cover_method_name(CoverMethod m) {
    switch (m) {
        case CoverMethod::pricing: return "pricing";
        case CoverMethod::greedy: return "greedy";
        case CoverMethod::exact: return "exact";
    }
    return "?";
}

CoverInstance CoverInstance::from_wedge_graph(const WedgeGraph& w) {
    CoverInstance inst;
    inst.rank = 2;
    inst.weights = w.weights;
    inst.edges.reserve(w.adjacencies.size());
    for (const auto& adj : w.adjacencies) inst.edges.push_back({adj.a, adj.b, -1});
    return inst;
}

CoverInstance CoverInstance::from_wedge_hypergraph(const WedgeHypergraph& h) {
    CoverInstance inst;
    inst.rank = 3;
    inst.weights.reserve(h.nodes.size());
    for (const auto& node : h.nodes) inst.weights.push_back(node.weight);
    inst.edges.reserve(h.hyperedges.size());
    for (const auto& he : h.hyperedges) inst.edges.push_back(he.nodes);
    return inst;
}

bool is_valid_cover(const CoverInstance& inst, const std::vector<std::int32_t>& selected) {
    std::vector<char> in(inst.weights.size(), 0);
    for (std::int32_t v : selected) {
        if (v < 0 || v >= static_cast<std::int32_t>(inst.weights.size())) return false;
        in[v] = 1;
    }
    for (const auto& e : inst.edges) {
        bool hit = false;
        for (int i = 0; i < inst.rank; ++i) hit = hit || in[e[i]];
        if (!hit) return false;
    }
    return true;
}

CoverSolution pricing_cover(const CoverInstance& inst, std::ostream* trace) {
    std::vector<std::int64_t> residual = inst.weights;
    std::int64_t dual = 0;

    for (std::size_t ei = 0; ei < inst.edges.size(); ++ei) {
        const auto& e = inst.edges[ei];
        std::int64_t min_res = std::numeric_limits<std::int64_t>::max();
        for (int i = 0; i < inst.rank; ++i) min_res = std::min(min_res, residual[e[i]]);
        if (min_res == 0) continue;  // some endpoint already tight
        dual += min_res;
        if (trace) *trace << "edge " << ei << " raise " << min_res << " tight";
        for (int i = 0; i < inst.rank; ++i) {
            residual[e[i]] -= min_res;
            if (trace && residual[e[i]] == 0) *trace << ' ' << e[i];
        }
        if (trace) *trace << '\n';
    }

    CoverSolution sol;
    sol.method = CoverMethod::pricing;
    for (std::size_t v = 0; v < residual.size(); ++v) {
        if (residual[v] == 0) {
            sol.selected.push_back(static_cast<std::int32_t>(v));
            sol.total_weight += inst.weights[v];
        }
    }
    sol.optimality_bound = dual;  // LP-dual value, lower bound on the optimum
    return sol;
}

CoverSolution greedy_cover(const CoverInstance& inst, GreedyOptions opts) {
    const std::size_t n = inst.weights.size();
    std::vector<std::vector<std::int32_t>> incident(n);
    for (std::size_t ei = 0; ei < inst.edges.size(); ++ei)
        for (int i = 0; i < inst.rank; ++i)
            incident[inst.edges[ei][i]].push_back(static_cast<std::int32_t>(ei));

    std::vector<std::int64_t> count(n, 0);
    for (std::size_t v = 0; v < n; ++v) count[v] = static_cast<std::int64_t>(incident[v].size());
    std::vector<char> covered(inst.edges.size(), 0);
    std::size_t uncovered = inst.edges.size();

    // (count-at-push, node); stale entries are re-pushed on pop.
    auto better = [&](std::int64_t ca, std::int32_t va, std::int64_t cb, std::int32_t vb) {
        if (!opts.weight_normalized) {
            if (ca != cb) return ca > cb;
        } else {
            std::int64_t lhs = ca * inst.weights[vb];
            std::int64_t rhs = cb * inst.weights[va];
            if (lhs != rhs) return lhs > rhs;
        }
        return va < vb;
    };
    using Entry = std::pair<std::int64_t, std::int32_t>;
    auto cmp = [&](const Entry& a, const Entry& b) {
        return better(b.first, b.second, a.first, a.second);
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> pq(cmp);
    for (std::size_t v = 0; v < n; ++v)
        if (count[v] > 0) pq.push({count[v], static_cast<std::int32_t>(v)});

    CoverSolution sol;
    sol.method = CoverMethod::greedy;
    while (uncovered > 0) {
        auto [c, v] = pq.top();
        pq.pop();
        if (c != count[v]) {
            if (count[v] > 0) pq.push({count[v], v});
            continue;
        }
        sol.selected.push_back(v);
        sol.total_weight += inst.weights[v];
        for (std::int32_t ei : incident[v]) {
            if (covered[ei]) continue;
            covered[ei] = 1;
            --uncovered;
            for (int i = 0; i < inst.rank; ++i) --count[inst.edges[ei][i]];
        }
    }
    std::sort(sol.selected.begin(), sol.selected.end());
    return sol;
}

namespace {

class ExactSearcher {
public:
    explicit ExactSearcher(const CoverInstance& inst) : inst_(inst) {
        const std::size_t n = inst.weights.size();
        incident_.resize(n);
        for (std::size_t ei = 0; ei < inst.edges.size(); ++ei)
            for (int i = 0; i < inst.rank; ++i)
                incident_[inst.edges[ei][i]].push_back(static_cast<std::int32_t>(ei));
        state_.assign(n, kFree);
        cover_count_.assign(inst.edges.size(), 0);
        uncovered_ = inst.edges.size();
    }

    CoverSolution run() {
        // Warm start from the approximations; keeps pruning effective.
        CoverSolution pricing = pricing_cover(inst_);
        CoverSolution greedy = greedy_cover(inst_);
        if (solution_less(greedy.total_weight, greedy.selected, pricing.total_weight,
                          pricing.selected)) {
            best_weight_ = greedy.total_weight;
            best_set_ = greedy.selected;
        } else {
            best_weight_ = pricing.total_weight;
            best_set_ = pricing.selected;
        }
        search();
        CoverSolution sol;
        sol.method = CoverMethod::exact;
        sol.selected = best_set_;
        sol.total_weight = best_weight_;
        sol.optimality_bound = best_weight_;
        return sol;
    }

private:
    static constexpr char kFree = 0, kIncluded = 1, kExcluded = 2;

    static bool solution_less(std::int64_t wa, const std::vector<std::int32_t>& sa,
                              std::int64_t wb, const std::vector<std::int32_t>& sb) {
        if (wa != wb) return wa < wb;
        return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(), sb.end());
    }

    void include(std::int32_t v) {
        state_[v] = kIncluded;
        included_.push_back(v);
        cur_weight_ += inst_.weights[v];
        for (std::int32_t ei : incident_[v])
            if (cover_count_[ei]++ == 0) --uncovered_;
    }

    void undo_include() {
        std::int32_t v = included_.back();
        included_.pop_back();
        state_[v] = kFree;
        cur_weight_ -= inst_.weights[v];
        for (std::int32_t ei : incident_[v])
            if (--cover_count_[ei] == 0) ++uncovered_;
    }

    // Forces nodes that are the last free endpoint of an uncovered edge.
    // Returns false when some edge can no longer be covered.
    bool propagate() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t ei = 0; ei < inst_.edges.size(); ++ei) {
                if (cover_count_[ei] > 0) continue;
                int free_count = 0;
                std::int32_t last_free = -1;
                for (int i = 0; i < inst_.rank; ++i) {
                    std::int32_t v = inst_.edges[ei][i];
                    if (state_[v] == kFree) {
                        ++free_count;
                        last_free = v;
                    }
                }
                if (free_count == 0) return false;
                if (free_count == 1) {
                    include(last_free);
                    changed = true;
                }
            }
        }
        return true;
    }

    // Weight of a disjoint packing of uncovered edges; admissible lower bound
    // on the additional cover weight.
    std::int64_t lower_bound() const {
        std::vector<char> used(inst_.weights.size(), 0);
        std::int64_t bound = 0;
        for (std::size_t ei = 0; ei < inst_.edges.size(); ++ei) {
            if (cover_count_[ei] > 0) continue;
            bool disjoint = true;
            std::int64_t min_w = std::numeric_limits<std::int64_t>::max();
            for (int i = 0; i < inst_.rank; ++i) {
                std::int32_t v = inst_.edges[ei][i];
                if (state_[v] != kFree) continue;
                if (used[v]) disjoint = false;
                min_w = std::min(min_w, inst_.weights[v]);
            }
            if (!disjoint) continue;
            for (int i = 0; i < inst_.rank; ++i) {
                std::int32_t v = inst_.edges[ei][i];
                if (state_[v] == kFree) used[v] = 1;
            }
            bound += min_w;
        }
        return bound;
    }

    std::int32_t pick_branch_node() const {
        std::int32_t best = -1;
        std::int64_t best_deg = 0;
        std::vector<std::int64_t> degree(inst_.weights.size(), 0);
        for (std::size_t ei = 0; ei < inst_.edges.size(); ++ei) {
            if (cover_count_[ei] > 0) continue;
            for (int i = 0; i < inst_.rank; ++i) {
                std::int32_t v = inst_.edges[ei][i];
                if (state_[v] == kFree) ++degree[v];
            }
        }
        for (std::size_t v = 0; v < degree.size(); ++v) {
            if (degree[v] > best_deg) {
                best_deg = degree[v];
                best = static_cast<std::int32_t>(v);
            }
        }
        return best;
    }

    void search() {
        std::size_t mark = included_.size();
        if (!propagate()) {
            while (included_.size() > mark) undo_include();
            return;
        }
        if (uncovered_ == 0) {
            std::vector<std::int32_t> sol(included_);
            std::sort(sol.begin(), sol.end());
            if (solution_less(cur_weight_, sol, best_weight_, best_set_)) {
                best_weight_ = cur_weight_;
                best_set_ = std::move(sol);
            }
            while (included_.size() > mark) undo_include();
            return;
        }
        // Strict inequality: equal-weight subtrees stay open so the
        // lexicographic tie-break sees every optimum.
        if (cur_weight_ + lower_bound() > best_weight_) {
            while (included_.size() > mark) undo_include();
            return;
        }

        std::int32_t v = pick_branch_node();
        include(v);
        search();
        undo_include();

        state_[v] = kExcluded;
        search();
        state_[v] = kFree;

        while (included_.size() > mark) undo_include();
    }

    const CoverInstance& inst_;
    std::vector<std::vector<std::int32_t>> incident_;
    std::vector<char> state_;
    std::vector<std::int32_t> cover_count_;
    std::size_t uncovered_ = 0;
    std::int64_t cur_weight_ = 0;
    std::vector<std::int32_t> included_;
    std::int64_t best_weight_ = 0;
    std::vector<std::int32_t> best_set_;
};

}  // namespace

CoverSolution exact_cover(const CoverInstance& inst, std::size_t max_edges) {
    if (inst.edges.size() > max_edges)
        throw BudgetError("instance too large for exact solver (" +
                          std::to_string(inst.edges.size()) + " edges > budget " +
                          std::to_string(max_edges) + "); use the LP export instead");
    return ExactSearcher(inst).run();
}

}  // namespace mlstc
