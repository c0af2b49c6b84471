#pragma once

#include <cstdint>
#include <vector>

namespace elect::detail {

// Successive-shortest-path min-cost max-flow on integer capacities/costs.
// Costs may be negative as long as the input graph is acyclic.
class CostFlowNetwork {
   public:
    explicit CostFlowNetwork(int num_nodes);

    // Returns the edge id; flow_on() reads back the flow it carries.
    int add_edge(int from, int to, long long capacity, long long cost);

    // Maximum flow from source to sink at minimum total cost.
    // Returns {flow, cost}.
    std::pair<long long, long long> min_cost_max_flow(int source, int sink);

    long long flow_on(int edge_id) const;

   private:
    struct Edge {
        int to;
        long long residual;
        long long cost;
    };
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacent_;
};

}  // namespace elect::detail
