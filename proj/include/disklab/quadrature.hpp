#pragma once

#include <functional>
#include <vector>

#include "disklab/geometry.hpp"

namespace disklab {

struct QuadratureConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_depth = 40;
    double divergence_threshold = 1e-3;
    int theta_grid = 1024;

    void validate() const {
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
            throw std::domain_error("QuadratureConfig: tolerances must be > 0");
        if (max_depth < 10)
            throw std::domain_error("QuadratureConfig: max_depth must be >= 10");
    }
};

struct IntegralResult {
    Complex value = 0.0;
    double err = 0.0;
    bool converged = false;
    bool diverging = false;
    long evaluations = 0;
};

/// Deterministic adaptive bisection on [a,b] with an embedded 7/15-point
/// Gauss-Kronrod pair per panel; the panel error estimate is the rule
/// difference.  eval_err_rate adds a per-unit-length certified evaluation
/// error of the integrand to the reported err.
IntegralResult integrate_line(const std::function<Complex(double)>& f, double a, double b,
                              const QuadratureConfig& cfg, double eval_err_rate = 0.0);

/// Radial integral of a nonnegative integrand on [0, r_max] split into the
/// panels [0,1/2], [1-2^-j, 1-2^-(j-1)] toward the boundary.  The integrand
/// callback packs the value into the real part and a pointwise certified
/// evaluation error into the imaginary part; both are integrated, and the
/// error integral lands in `err`.  `increments` receives the values of the
/// complete dyadic panels.
IntegralResult integrate_radial_panels(const std::function<Complex(double)>& f, double r_max,
                                       const QuadratureConfig& cfg,
                                       std::vector<double>* increments = nullptr);

} // namespace disklab
