#include "degseq/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace degseq {

SimpleGraph::SimpleGraph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 1)
        throw std::invalid_argument("graph needs at least one vertex");
    adj_.assign(static_cast<std::size_t>(n) * n, 0);
    degrees_.assign(n, 0);

    for (auto& [u, v] : edges) {
        if (u > v)
            std::swap(u, v);
        if (u < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v)
            throw std::invalid_argument("self-loops are not allowed");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");

    for (const auto& [u, v] : edges) {
        adj_[static_cast<std::size_t>(u) * n + v] = 1;
        adj_[static_cast<std::size_t>(v) * n + u] = 1;
        ++degrees_[u];
        ++degrees_[v];
    }
    edges_ = std::move(edges);
}

} // namespace degseq
