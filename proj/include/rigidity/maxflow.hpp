#pragma once

#include <vector>

namespace rigidity {

// Dinic maximum flow over integer capacities. Deterministic: arcs are stored
// and explored in insertion order, so the final residual network (and
// anything derived from it) is reproducible.
class MaxFlow {
public:
    explicit MaxFlow(int node_count);

    // Adds a forward arc with the given capacity and its zero-capacity
    // reverse; returns the forward arc id (reverse id is id ^ 1).
    int add_arc(int from, int to, long long capacity);

    long long run(int source, int sink);

    // After run(): marks every node that can still reach `sink` in the
    // residual network. The complement on the relevant node class yields the
    // sink-side minimum cut.
    std::vector<char> nodes_reaching_sink(int sink) const;

private:
    struct Arc {
        int to = 0;
        long long cap = 0;
    };

    bool build_levels(int source, int sink);
    long long augment(int v, int sink, long long limit);

    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<int> level_;
    std::vector<std::size_t> next_arc_;
};

} // namespace rigidity
