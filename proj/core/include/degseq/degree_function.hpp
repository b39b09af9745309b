#pragma once

#include <vector>

namespace degseq {

class DegreeSequence;

/// Nonincreasing step function f : [0,1] -> [0,1] on a uniform grid:
/// an explicit value at 0 plus the value on each half-open cell
/// ((i-1)/M, i/M]. Left continuity on (0,1) is built into the lookup.
class DegreeFunction {
public:
    DegreeFunction(double f0, std::vector<double> values);

    int grid_size() const { return static_cast<int>(values_.size()); }
    double f0() const { return f0_; }
    const std::vector<double>& values() const { return values_; }

    /// Step lookup: f(0) = f0, f(x) = value of the cell containing x.
    double operator()(double x) const;

    double min_value() const;
    double max_value() const;

private:
    double f0_;
    std::vector<double> values_;
};

/// The continuum Erdos-Gallai functional
///   G_f(x) = int_x^1 min{f(y),x} dy + x^2 - int_0^x f(y) dy
/// evaluated at x = i/M, i = 1..M. Integrals are closed-form over the
/// step cells, so the values are exact for the representation.
std::vector<double> continuum_eg(const DegreeFunction& f);

struct InteriorDiagnosis {
    bool bounds_ok = false; ///< 0 < min f and max f < 1
    bool gf_ok = false;     ///< min over grid of G_f(x) > eps
    double min_value = 0;
    double max_value = 0;
    double min_gf = 0;
    bool interior() const { return bounds_ok && gf_ok; }
};

InteriorDiagnosis interior_diagnosis(const DegreeFunction& f, double eps = 1e-9);

/// True iff f is bounded strictly inside (0,1) and G_f > eps on the grid.
bool is_interior(const DegreeFunction& f, double eps = 1e-9);

/// d_1 = floor(n f(0)), d_i = floor(n f(i/n)) for i >= 2, with the degree
/// sum repaired to even by incrementing d_1 (falling back to the first
/// later index where +1 keeps the sequence monotone and within n-1).
DegreeSequence discretize_limit(const DegreeFunction& f, int n);

/// Checks the limiting-degree-variate inequality: G_D(x) >= 0 at every
/// grid point (non-strict).
bool degree_variate_check(const DegreeFunction& D);

} // namespace degseq
