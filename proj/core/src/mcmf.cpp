#include "mcmf.hpp"

#include <deque>
#include <limits>

namespace elect::detail {

namespace {
constexpr long long kInfinite = std::numeric_limits<long long>::max() / 4;
}

CostFlowNetwork::CostFlowNetwork(int num_nodes) : adjacent_(static_cast<size_t>(num_nodes)) {}

int CostFlowNetwork::add_edge(int from, int to, long long capacity, long long cost) {
    int id = static_cast<int>(edges_.size());
    edges_.push_back({to, capacity, cost});
    edges_.push_back({from, 0, -cost});
    adjacent_[static_cast<size_t>(from)].push_back(id);
    adjacent_[static_cast<size_t>(to)].push_back(id + 1);
    return id;
}

std::pair<long long, long long> CostFlowNetwork::min_cost_max_flow(int source, int sink) {
    size_t n = adjacent_.size();
    long long flow = 0;
    long long cost = 0;
    std::vector<long long> dist(n);
    std::vector<int> parent_edge(n);
    std::vector<bool> in_queue(n);
    for (;;) {
        // Bellman-Ford (queue form) tolerates the negative edge costs that
        // appear in residual graphs.
        dist.assign(n, kInfinite);
        parent_edge.assign(n, -1);
        in_queue.assign(n, false);
        dist[static_cast<size_t>(source)] = 0;
        std::deque<int> queue{source};
        in_queue[static_cast<size_t>(source)] = true;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            in_queue[static_cast<size_t>(u)] = false;
            for (int id : adjacent_[static_cast<size_t>(u)]) {
                const Edge& edge = edges_[static_cast<size_t>(id)];
                if (edge.residual <= 0) continue;
                long long candidate = dist[static_cast<size_t>(u)] + edge.cost;
                if (candidate < dist[static_cast<size_t>(edge.to)]) {
                    dist[static_cast<size_t>(edge.to)] = candidate;
                    parent_edge[static_cast<size_t>(edge.to)] = id;
                    if (!in_queue[static_cast<size_t>(edge.to)]) {
                        in_queue[static_cast<size_t>(edge.to)] = true;
                        queue.push_back(edge.to);
                    }
                }
            }
        }
        if (parent_edge[static_cast<size_t>(sink)] < 0) break;
        long long bottleneck = kInfinite;
        for (int v = sink; v != source;) {
            const Edge& edge = edges_[static_cast<size_t>(parent_edge[static_cast<size_t>(v)])];
            bottleneck = std::min(bottleneck, edge.residual);
            v = edges_[static_cast<size_t>(parent_edge[static_cast<size_t>(v)] ^ 1)].to;
        }
        for (int v = sink; v != source;) {
            int id = parent_edge[static_cast<size_t>(v)];
            edges_[static_cast<size_t>(id)].residual -= bottleneck;
            edges_[static_cast<size_t>(id ^ 1)].residual += bottleneck;
            v = edges_[static_cast<size_t>(id ^ 1)].to;
        }
        flow += bottleneck;
        cost += bottleneck * dist[static_cast<size_t>(sink)];
    }
    return {flow, cost};
}

long long CostFlowNetwork::flow_on(int edge_id) const {
    return edges_[static_cast<size_t>(edge_id) ^ 1].residual;
}

}  // namespace elect::detail
