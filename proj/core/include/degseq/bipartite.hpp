#pragma once

#include <vector>

namespace degseq {

/// Row and column sums of a candidate m x n 0-1 matrix. Row sums must not
/// exceed n, column sums must not exceed m.
struct BipartiteMargins {
    std::vector<int> row_sums;
    std::vector<int> col_sums;

    BipartiteMargins(std::vector<int> rows, std::vector<int> cols);
    int m() const { return static_cast<int>(row_sums.size()); }
    int n() const { return static_cast<int>(col_sums.size()); }
};

/// Gale-Ryser criterion: a 0-1 matrix with these margins exists iff the
/// totals match and both prefix conditions against the conjugate sequences
/// hold.
bool gale_ryser_check(const BipartiteMargins& margins);

/// Feasibility certificate for integer margins close to the row/column sums
/// of a probability matrix with entries in [delta, 1-delta]: totals equal,
/// |r_i - sum_j p_ij| <= delta^2 n / 4 and |c_j - sum_i p_ij| <= delta^2 m / 4.
/// When this returns true the margins admit a 0-1 matrix.
bool claim_margins_feasible(const std::vector<std::vector<double>>& p,
                            const std::vector<int>& row_sums,
                            const std::vector<int>& col_sums, double delta);

} // namespace degseq
