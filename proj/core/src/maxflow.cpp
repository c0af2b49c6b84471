#include "maxflow.hpp"

#include <queue>
#include <utility>

namespace elect::detail {

int FlowNetwork::add_edge(int from, int to, Rational cap) {
    int id = static_cast<int>(edges_.size());
    edges_.push_back({to, std::move(cap)});
    edges_.push_back({from, Rational(0)});
    adj_[static_cast<size_t>(from)].push_back(id);
    adj_[static_cast<size_t>(to)].push_back(id + 1);
    return id;
}

Rational FlowNetwork::max_flow(int source, int sink) {
    Rational total(0);
    std::vector<int> parent_edge(adj_.size());
    for (;;) {
        std::fill(parent_edge.begin(), parent_edge.end(), -1);
        parent_edge[static_cast<size_t>(source)] = -2;
        std::queue<int> q;
        q.push(source);
        while (!q.empty() && parent_edge[static_cast<size_t>(sink)] == -1) {
            int u = q.front();
            q.pop();
            for (int id : adj_[static_cast<size_t>(u)]) {
                const Edge& edge = edges_[static_cast<size_t>(id)];
                if (edge.residual == 0 || parent_edge[static_cast<size_t>(edge.to)] != -1) continue;
                parent_edge[static_cast<size_t>(edge.to)] = id;
                q.push(edge.to);
            }
        }
        if (parent_edge[static_cast<size_t>(sink)] == -1) break;
        Rational push;
        bool first = true;
        for (int v = sink; v != source;) {
            const Edge& edge = edges_[static_cast<size_t>(parent_edge[static_cast<size_t>(v)])];
            if (first || edge.residual < push) push = edge.residual;
            first = false;
            v = edges_[static_cast<size_t>(parent_edge[static_cast<size_t>(v)] ^ 1)].to;
        }
        for (int v = sink; v != source;) {
            int id = parent_edge[static_cast<size_t>(v)];
            edges_[static_cast<size_t>(id)].residual -= push;
            edges_[static_cast<size_t>(id ^ 1)].residual += push;
            v = edges_[static_cast<size_t>(id ^ 1)].to;
        }
        total += push;
    }
    return total;
}

Rational FlowNetwork::flow_on(int edge_id) const {
    return edges_[static_cast<size_t>(edge_id) ^ 1].residual;
}

}  // namespace elect::detail
