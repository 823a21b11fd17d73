#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mlstc/wedge.hpp"

namespace mlstc {

// Minimum weighted vertex cover instance over an r-uniform hypergraph,
// r in {2, 3}. Edge order is part of the instance: the pricing solver
// processes edges exactly in the stored order.
struct CoverInstance {
    int rank = 2;
    std::vector<std::int64_t> weights;                 // > 0
    std::vector<std::array<std::int32_t, 3>> edges;    // [2] == -1 when rank == 2

    static CoverInstance from_wedge_graph(const WedgeGraph& w);
    static CoverInstance from_wedge_hypergraph(const WedgeHypergraph& h);

    int nodes_in_edge(std::size_t e) const { return rank; }
};

enum class CoverMethod { pricing, greedy, exact };

const char* cover_method_name(CoverMethod m);

struct CoverSolution {
    std::vector<std::int32_t> selected;  // sorted node indices
    std::int64_t total_weight = 0;
    CoverMethod method = CoverMethod::pricing;
    // For exact: equals total_weight. For pricing: the dual value (sum of
    // prices), a lower bound on the optimum after division by 1.
    std::optional<std::int64_t> optimality_bound;
};

class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Primal-dual pricing: raises the price of each edge whose nodes are all
// slack until one becomes tight; tight nodes form the cover. Guarantees
// total_weight <= rank * optimum. Optional trace stream prints each raise.
CoverSolution pricing_cover(const CoverInstance& inst, std::ostream* trace = nullptr);

struct GreedyOptions {
    // Default ranks nodes by raw uncovered-edge count; the normalized variant
    // divides by node weight. Ties break toward the lowest node index.
    bool weight_normalized = false;
};

CoverSolution greedy_cover(const CoverInstance& inst, GreedyOptions opts = {});

inline constexpr std::size_t kDefaultExactBudget = 500000;  // edges

// Branch and bound, exact. Deterministic: among optima, returns the
// lexicographically smallest selected set. Throws BudgetError when the
// instance has more edges than `max_edges`.
CoverSolution exact_cover(const CoverInstance& inst, std::size_t max_edges = kDefaultExactBudget);

bool is_valid_cover(const CoverInstance& inst, const std::vector<std::int32_t>& selected);

}  // namespace mlstc
