#pragma once

#include <vector>

#include "elect/rational.hpp"

namespace elect::detail {

// Max flow over exact rationals (Edmonds-Karp: BFS augmenting paths, so the
// augmentation count is O(V*E) regardless of capacity values).
class FlowNetwork {
public:
    explicit FlowNetwork(int nodes) : adj_(static_cast<size_t>(nodes)) {}

    // Returns the edge id; flow_on(id) reads the flow pushed through it.
    int add_edge(int from, int to, Rational cap);

    Rational max_flow(int source, int sink);

    Rational flow_on(int edge_id) const;

private:
    struct Edge {
        int to;
        Rational residual;
    };
    std::vector<Edge> edges_;  // edge 2k forward, 2k+1 its reverse
    std::vector<std::vector<int>> adj_;
};

}  // namespace elect::detail
