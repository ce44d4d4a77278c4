#include "rigidity/maxflow.hpp"

#include <algorithm>
#include <limits>

namespace rigidity {

MaxFlow::MaxFlow(int node_count)
    : adjacency_(node_count), level_(node_count), next_arc_(node_count) {}

int MaxFlow::add_arc(int from, int to, long long capacity) {
    const int id = static_cast<int>(arcs_.size());
    arcs_.push_back(Arc{to, capacity});
    arcs_.push_back(Arc{from, 0});
    adjacency_[from].push_back(id);
    adjacency_[to].push_back(id + 1);
    return id;
}

bool MaxFlow::build_levels(int source, int sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<int> queue;
    queue.push_back(source);
    level_[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        for (int arc_id : adjacency_[v]) {
            const Arc& arc = arcs_[arc_id];
            if (arc.cap > 0 && level_[arc.to] < 0) {
                level_[arc.to] = level_[v] + 1;
                queue.push_back(arc.to);
            }
        }
    }
    return level_[sink] >= 0;
}

long long MaxFlow::augment(int v, int sink, long long limit) {
    if (v == sink) return limit;
    for (std::size_t& i = next_arc_[v]; i < adjacency_[v].size(); ++i) {
        const int arc_id = adjacency_[v][i];
        Arc& arc = arcs_[arc_id];
        if (arc.cap <= 0 || level_[arc.to] != level_[v] + 1) continue;
        const long long pushed = augment(arc.to, sink, std::min(limit, arc.cap));
        if (pushed > 0) {
            arc.cap -= pushed;
            arcs_[arc_id ^ 1].cap += pushed;
            return pushed;
        }
    }
    return 0;
}

long long MaxFlow::run(int source, int sink) {
    long long total = 0;
    while (build_levels(source, sink)) {
        std::fill(next_arc_.begin(), next_arc_.end(), 0);
        for (;;) {
            const long long pushed =
                augment(source, sink, std::numeric_limits<long long>::max());
            if (pushed == 0) break;
            total += pushed;
        }
    }
    return total;
}

std::vector<char> MaxFlow::nodes_reaching_sink(int sink) const {
    // Walk the residual network backwards from the sink: node w reaches the
    // sink iff some residual arc w -> x leads to a node x that reaches it.
    // Every arc x' -> x appears as the paired reverse of an arc in
    // adjacency_[x], so scanning pairs covers all incoming arcs.
    std::vector<char> reaches(adjacency_.size(), 0);
    std::vector<int> queue;
    reaches[sink] = 1;
    queue.push_back(sink);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int x = queue[head];
        for (int arc_id : adjacency_[x]) {
            const int origin = arcs_[arc_id].to;  // tail of the paired arc origin -> x
            if (!reaches[origin] && arcs_[arc_id ^ 1].cap > 0) {
                reaches[origin] = 1;
                queue.push_back(origin);
            }
        }
    }
    return reaches;
}

} // namespace rigidity
