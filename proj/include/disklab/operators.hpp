#pragma once

#include <optional>
#include <vector>

#include "disklab/maps.hpp"
#include "disklab/quadrature.hpp"

namespace disklab {

/// T_g f(z) = int_0^z f(t) g'(t) dt along the segment [0, z].
IntegralResult apply_T(const AnalyticMap& g, const AnalyticMap& f, Complex z,
                       const QuadratureConfig& cfg);

/// S_g f(z) = int_0^z f'(t) g(t) dt.
IntegralResult apply_S(const AnalyticMap& g, const AnalyticMap& f, Complex z,
                       const QuadratureConfig& cfg);

/// M_g f(z) = f(z) g(z).
Complex apply_M(const AnalyticMap& g, const AnalyticMap& f, Complex z);

/// |M_g f(z) - f(0)g(0) - T_g f(z) - S_g f(z)|.  Throws if either quadrature
/// fails to converge.
double identity_residual(const AnalyticMap& g, const AnalyticMap& f, Complex z,
                         const QuadratureConfig& cfg);

/// V(g, theta) up to r_max: int_0^{r_max} |g'(t e^{i theta})| dt with dyadic
/// panels toward the boundary; `diverging` is set when the last 8 complete
/// dyadic increments all exceed the configured threshold.
IntegralResult radial_variation(const AnalyticMap& g, double theta, double r_max,
                                const QuadratureConfig& cfg,
                                std::vector<double>* increments = nullptr);

struct VariationProfile {
    std::vector<double> thetas;
    std::vector<IntegralResult> values;
    std::optional<double> sup_finite;  // present only when every angle converged
};

VariationProfile brv_sup(const AnalyticMap& g, const std::vector<double>& thetas, double r_max,
                         const QuadratureConfig& cfg);

/// Smallest r (dyadic bisection) with sup_theta int_r^{1-} |g'| <= eps; the
/// integral beyond the quadrature cut is certified through the map's
/// coefficient tail.  nullopt when no radius can be certified.
std::optional<double> ui_radius(const AnalyticMap& g, double eps,
                                const std::vector<double>& thetas, const QuadratureConfig& cfg);

/// max over the grid of (1-|z|^2)|g'(z)|: a lower bound for the T_g operator
/// norm on the bounded functions.
double bloch_lower(const AnalyticMap& g, const std::vector<Complex>& grid);

/// Grid sup of |g|: a lower bound for the S_g operator norm.
double s_lower(const AnalyticMap& g, const std::vector<Complex>& grid);

struct BoundReport {
    double bloch_lower = 0.0;
    double s_lower = 0.0;
    std::optional<double> brv_upper;
};

enum class ProbeFamily { monomials, dilation_differences };

/// Sup-grid estimates of |T_g f_n| for a null family f_n; trend data only, no
/// verdict (a limit is not observable from finitely many n).
std::vector<double> compactness_probe(const MapPtr& g, ProbeFamily family, int n_max,
                                      const QuadratureConfig& cfg, double grid_r = 0.999,
                                      int grid_m = 64);

/// Sup-grid estimate of |g(z) - g(z e^{i delta})| over the given points.
double rotation_modulus(const AnalyticMap& g, double delta, const std::vector<Complex>& grid);

/// pi * h1_norm(g', r, m) - int_0^r |g'(t e^{i theta})| dt.
double fejer_riesz_margin(const PowerSeries& g, double theta, double r, int m,
                          const QuadratureConfig& cfg);

} // namespace disklab
