#pragma once

#include <optional>
#include <string>
#include <vector>

#include "degseq/beta_model.hpp"

namespace degseq {

struct FitConfig {
    double tol = 1e-10;            ///< L-inf residual threshold
    int max_iter = 5000;
    double divergence_bound = 50.0; ///< L-inf escape radius
    std::optional<std::vector<double>> x0; ///< default: zero vector
};

enum class FitStatus { Converged, Diverged, MaxIterReached, InfeasibleDegrees };

std::string to_string(FitStatus status);

struct FitReport {
    FitStatus status = FitStatus::InfeasibleDegrees;
    std::optional<BetaVector> beta_hat;
    int iterations = 0;
    double residual_linf = 0;  ///< |x_k - x_{k+1}|_inf at exit
    double theta_hat = 0;      ///< empirical two-step contraction ratio
    double error_bound = 0;    ///< 2 * residual_linf / (1 - theta_hat)
};

/// One step of the fixed-point map: phi_i(x) = log d_i - log sum_{j != i}
/// 1/(e^{-x_j} + e^{x_i}), each term computed via max-shifted exponentials.
/// Throws infeasible_degrees_error if any d_i <= 0.
std::vector<double> phi(const std::vector<double>& x, const std::vector<double>& d);

/// Iterates x <- phi(x) until the L-inf residual drops below cfg.tol,
/// the iterates escape cfg.divergence_bound (Diverged: MLE presumed
/// nonexistent), or cfg.max_iter is hit. Degree targets may be real-valued
/// but must lie strictly inside (0, n-1).
FitReport fit_mle(const std::vector<double>& d, const FitConfig& cfg = {});

/// Analytic Jacobian of phi. Every row satisfies sum_j |J_ij| = 1.
std::vector<std::vector<double>> jacobian_phi(const std::vector<double>& x,
                                              const std::vector<double>& d);

/// Certified two-step L-inf contraction factor 1 - 2(n-2)delta^2/(n-1)
/// with delta = e^{-4K}/2, valid while iterates stay bounded by K.
double contraction_theta(double K, int n);

/// Verifies |AB|_inf <= 1 - 2(n-2)delta^2/(n-1) for two members of the
/// matrix class with row norms <= 1, diagonals >= delta and off-diagonals
/// <= -delta/(n-1). Throws std::invalid_argument if A or B is not in the
/// class.
bool matrix_class_product_bound_check(const std::vector<std::vector<double>>& A,
                                      const std::vector<std::vector<double>>& B,
                                      double delta);

/// Checks |phi(x)-phi(y)|_1 <= 2 e^{2K} |x-y|_1 with K = max of the two
/// sup norms.
bool l1_lipschitz_check(const std::vector<double>& x, const std::vector<double>& y,
                        const std::vector<double>& d);

/// Mode of the conjugate posterior: fit_mle on the pseudo-degrees
/// (d_obs + n0 * d0) / (n0 + 1). Requires n0 > 0 and d0 strictly inside
/// (0, n-1) componentwise.
FitReport posterior_mode(const std::vector<double>& d_obs, double n0,
                         const std::vector<double>& d0, const FitConfig& cfg = {});

} // namespace degseq
