#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace degseq {

/// Undirected simple graph with a dense adjacency matrix and a degree
/// cache. Immutable after construction.
class SimpleGraph {
public:
    SimpleGraph(int n, std::vector<std::pair<int, int>> edges);

    int size() const { return n_; }
    bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u) * n_ + v] != 0; }
    const std::vector<int>& degrees() const { return degrees_; }
    long long edge_count() const { return static_cast<long long>(edges_.size()); }
    /// Edge list with u < v, sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

private:
    int n_;
    std::vector<std::uint8_t> adj_;
    std::vector<int> degrees_;
    std::vector<std::pair<int, int>> edges_;
};

} // namespace degseq
