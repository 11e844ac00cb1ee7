#include "disklab/operators.hpp"

#include <algorithm>
#include <cmath>

namespace disklab {

IntegralResult apply_T(const AnalyticMap& g, const AnalyticMap& f, Complex z,
                       const QuadratureConfig& cfg) {
    if (std::abs(z) >= 1.0) throw std::domain_error("apply_T: need |z| < 1");
    double worst = 0.0;
    auto integrand = [&](double s) {
        const Complex t = s * z;
        const Evaluation fe = f.eval(t);
        const Evaluation ge = g.deriv(t);
        worst = std::max(worst, fe.err * (std::abs(ge.value) + ge.err) +
                                    ge.err * std::abs(fe.value));
        return fe.value * ge.value * z;
    };
    IntegralResult r = integrate_line(integrand, 0.0, 1.0, cfg);
    r.err += worst * std::abs(z);
    r.converged = r.converged && r.err <= cfg.abs_tol * (1.0 + 1e-12) + worst * std::abs(z);
    return r;
}

IntegralResult apply_S(const AnalyticMap& g, const AnalyticMap& f, Complex z,
                       const QuadratureConfig& cfg) {
    if (std::abs(z) >= 1.0) throw std::domain_error("apply_S: need |z| < 1");
    double worst = 0.0;
    auto integrand = [&](double s) {
        const Complex t = s * z;
        const Evaluation fe = f.deriv(t);
        const Evaluation ge = g.eval(t);
        worst = std::max(worst, fe.err * (std::abs(ge.value) + ge.err) +
                                    ge.err * std::abs(fe.value));
        return fe.value * ge.value * z;
    };
    IntegralResult r = integrate_line(integrand, 0.0, 1.0, cfg);
    r.err += worst * std::abs(z);
    r.converged = r.converged && r.err <= cfg.abs_tol * (1.0 + 1e-12) + worst * std::abs(z);
    return r;
}

Complex apply_M(const AnalyticMap& g, const AnalyticMap& f, Complex z) {
    return f.eval(z).value * g.eval(z).value;
}

double identity_residual(const AnalyticMap& g, const AnalyticMap& f, Complex z,
                         const QuadratureConfig& cfg) {
    const IntegralResult t = apply_T(g, f, z, cfg);
    const IntegralResult s = apply_S(g, f, z, cfg);
    if (!t.converged || !s.converged)
        throw std::runtime_error("identity_residual: quadrature did not converge");
    const Complex m = apply_M(g, f, z);
    const Complex c = f.eval(0.0).value * g.eval(0.0).value;
    return std::abs(m - c - t.value - s.value);
}

IntegralResult radial_variation(const AnalyticMap& g, double theta, double r_max,
                                const QuadratureConfig& cfg, std::vector<double>* increments) {
    if (!(r_max < 1.0)) throw std::domain_error("radial_variation: need r_max < 1");
    const Complex dir = std::polar(1.0, theta);
    auto integrand = [&](double t) {
        const Evaluation d = g.deriv(t * dir);
        return Complex(std::abs(d.value), d.err);
    };
    return integrate_radial_panels(integrand, r_max, cfg, increments);
}

VariationProfile brv_sup(const AnalyticMap& g, const std::vector<double>& thetas, double r_max,
                         const QuadratureConfig& cfg) {
    if (thetas.empty()) throw std::invalid_argument("brv_sup: empty grid");
    VariationProfile out;
    out.thetas = thetas;
    out.values.reserve(thetas.size());
    bool all_ok = true;
    double sup = 0.0;
    for (double theta : thetas) {
        IntegralResult r = radial_variation(g, theta, r_max, cfg);
        if (!r.converged || r.diverging) all_ok = false;
        sup = std::max(sup, r.value.real());
        out.values.push_back(r);
    }
    if (all_ok) out.sup_finite = sup;
    return out;
}

std::optional<double> ui_radius(const AnalyticMap& g, double eps,
                                const std::vector<double>& thetas, const QuadratureConfig& cfg) {
    if (!(eps > 0.0)) throw std::domain_error("ui_radius: eps must be > 0");
    if (thetas.empty()) throw std::invalid_argument("ui_radius: empty grid");

    // quadrature cut with a certified coefficient-side tail
    double r_cut = -1.0, tail_cut = 0.0;
    for (int j = 4; j <= 48; ++j) {
        const double r = 1.0 - std::ldexp(1.0, -j);
        const auto t = g.radial_variation_tail(r);
        if (t && *t <= eps / 8.0) {
            r_cut = r;
            tail_cut = *t;
            break;
        }
    }
    if (r_cut < 0.0) return std::nullopt;

    QuadratureConfig q = cfg;
    q.abs_tol = std::max(cfg.abs_tol, eps * 1e-4);
    auto tail_sup = [&](double r) {
        double sup = 0.0;
        for (double theta : thetas) {
            const Complex dir = std::polar(1.0, theta);
            auto integrand = [&](double t) {
                const Evaluation d = g.deriv(t * dir);
                return Complex(std::abs(d.value), d.err);
            };
            const IntegralResult res = integrate_line(integrand, r, r_cut, q);
            sup = std::max(sup, res.value.real() + res.value.imag() + res.err);
        }
        return sup + tail_cut;
    };

    if (tail_sup(0.0) <= eps) return 0.0;
    double lo = 0.0, hi = r_cut;
    for (int it = 0; it < 30 && hi - lo > 1e-7; ++it) {
        const double mid = 0.5 * (lo + hi);
        (tail_sup(mid) <= eps ? hi : lo) = mid;
    }
    return hi;
}

double bloch_lower(const AnalyticMap& g, const std::vector<Complex>& grid) {
    if (grid.empty()) throw std::invalid_argument("bloch_lower: empty grid");
    double best = 0.0;
    for (Complex z : grid) {
        if (std::abs(z) >= 1.0) continue;
        best = std::max(best, (1.0 - std::norm(z)) * std::abs(g.deriv(z).value));
    }
    return best;
}

double s_lower(const AnalyticMap& g, const std::vector<Complex>& grid) {
    if (grid.empty()) throw std::invalid_argument("s_lower: empty grid");
    double best = 0.0;
    for (Complex z : grid) {
        if (std::abs(z) >= 1.0) continue;
        best = std::max(best, std::abs(g.eval(z).value));
    }
    return best;
}

std::vector<double> compactness_probe(const MapPtr& g, ProbeFamily family, int n_max,
                                      const QuadratureConfig& cfg, double grid_r, int grid_m) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n_max));
    double norm_scale = 1.0;
    if (family == ProbeFamily::dilation_differences) {
        // keep the family inside the unit ball
        norm_scale = 2.0 * sup_norm_estimate(*g, 0.999, 512);
        if (norm_scale == 0.0) norm_scale = 1.0;
    }
    for (int n = 1; n <= n_max; ++n) {
        MapPtr f;
        if (family == ProbeFamily::monomials) {
            f = std::make_shared<PowerSeries>(PowerSeries::monomial(n));
        } else {
            const double r = 1.0 - std::ldexp(1.0, -n);
            f = std::make_shared<LinearCombinationMap>(Complex(1.0 / norm_scale), g,
                                                       Complex(-1.0 / norm_scale), dilate(g, r));
        }
        double sup = 0.0;
        for (int j = 0; j < grid_m; ++j) {
            const Complex z = std::polar(grid_r, kTwoPi * j / grid_m);
            sup = std::max(sup, std::abs(apply_T(*g, *f, z, cfg).value));
        }
        out.push_back(sup);
    }
    return out;
}

double rotation_modulus(const AnalyticMap& g, double delta, const std::vector<Complex>& grid) {
    if (grid.empty()) throw std::invalid_argument("rotation_modulus: empty grid");
    const Complex rot = std::polar(1.0, delta);
    double best = 0.0;
    for (Complex z : grid)
        best = std::max(best, std::abs(g.eval(z).value - g.eval(z * rot).value));
    return best;
}

double fejer_riesz_margin(const PowerSeries& g, double theta, double r, int m,
                          const QuadratureConfig& cfg) {
    const PowerSeries gp = g.derivative();
    const double h1 = h1_norm(gp, r, m).value;
    const Complex dir = std::polar(1.0, theta);
    auto integrand = [&](double t) {
        const Evaluation d = g.deriv(t * dir);
        return Complex(std::abs(d.value), d.err);
    };
    const IntegralResult res = integrate_radial_panels(integrand, r, cfg);
    return kPi * h1 - res.value.real();
}

} // namespace disklab
