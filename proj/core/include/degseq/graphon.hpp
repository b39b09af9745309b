#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "degseq/degree_function.hpp"
#include "degseq/graph.hpp"
#include "degseq/mle.hpp"

namespace degseq {

/// Small pattern graph for homomorphism densities. At most 8 vertices
/// (the densities are computed by brute-force enumeration).
class MotifGraph {
public:
    MotifGraph(int k, std::vector<std::pair<int, int>> edges); // 1-based edges

    int vertex_count() const { return k_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    /// 0-based edges.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    static MotifGraph single_edge() { return MotifGraph(2, {{1, 2}}); }
    static MotifGraph triangle() { return MotifGraph(3, {{1, 2}, {2, 3}, {1, 3}}); }

private:
    int k_;
    std::vector<std::pair<int, int>> edges_;
};

/// Step-function representation of g on a uniform grid, defining the
/// graphon W(x,y) = sigmoid(g(x)+g(y)).
struct GraphonFit {
    int M = 0;
    double g0 = 0;          ///< g(0)
    std::vector<double> g;  ///< value of g on ((i-1)/M, i/M]
    double residual = 0;    ///< max_x |f(x) - int W(x,.)| on the grid

    double g_at(double x) const;
    double w(double x, double y) const;
};

/// |hom(H,G)| / n^k by exhaustive enumeration with edge pruning.
double hom_density_graph(const MotifGraph& H, const SimpleGraph& G);

/// t(H,W) as a k-fold cell sum over the step grid; exact for the step
/// representation. Grids are subsampled to 64 cells for motifs with
/// k >= 4; throws std::invalid_argument if the cell budget is still
/// exceeded (lower M in that case).
double hom_density_graphon(const MotifGraph& H, const GraphonFit& fit);

/// Solves for g such that f(x) = int W(x,y) dy via the fixed-point
/// iteration on the real-valued targets n_grid * f(i/n_grid). Requires
/// is_interior(f); throws std::invalid_argument otherwise, and
/// infeasible_degrees_error / std::runtime_error on fit failure.
GraphonFit fit_graphon(const DegreeFunction& f, int n_grid, const FitConfig& cfg = {});

/// psi(z) = int sigmoid(z + g(y)) dy, exact cell sum; strictly increasing.
double psi(double z, const GraphonFit& fit);

/// Inverse of psi by bracketed bisection; |psi(result) - y| <= 1e-12.
/// Requires y strictly inside (0,1).
double psi_inverse(double y, const GraphonFit& fit);

/// Adjusts g so that f(x) = int W(x,y) dy holds at every grid point by
/// iterating g <- psi^{-1}(f) (with damping) to its fixed point.
/// Idempotent up to 1e-10.
GraphonFit canonicalize_g(const GraphonFit& fit, const DegreeFunction& f);

struct MotifComparison {
    double t_graphon = 0;
    std::vector<double> t_samples;
};

/// Fits the graphon for f, then samples `trials` beta-model graphs of
/// size n with beta_i = g(i/n) and reports t(H,W) next to each sampled
/// t(H,G).
MotifComparison predicted_vs_empirical(const MotifGraph& H, const DegreeFunction& f,
                                       int n, int trials, std::uint64_t seed);

} // namespace degseq
