#include "disklab/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace disklab {

namespace {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1] (positive half).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    int depth;
};

struct PanelEval {
    Complex kronrod;
    Complex gauss;
    double err;
};

PanelEval gk15(const std::function<Complex(double)>& f, double a, double b, long& evals) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    Complex resk = kWgk[7] * f(c);
    Complex resg = kWg[3] * f(c);
    for (int i = 0; i < 7; ++i) {
        const Complex f1 = f(c - h * kXgk[i]);
        const Complex f2 = f(c + h * kXgk[i]);
        resk += kWgk[i] * (f1 + f2);
        if (i % 2 == 1) resg += kWg[i / 2] * (f1 + f2);
    }
    evals += 15;
    resk *= h;
    resg *= h;
    return {resk, resg, std::abs(resk - resg)};
}

} // namespace

IntegralResult integrate_line(const std::function<Complex(double)>& f, double a, double b,
                              const QuadratureConfig& cfg, double eval_err_rate) {
    cfg.validate();
    IntegralResult out;
    const double total_len = std::abs(b - a);
    if (total_len == 0.0) {
        out.converged = true;
        return out;
    }

    std::vector<Panel> stack{{a, b, 0}};
    bool depth_exhausted = false;
    while (!stack.empty()) {
        const Panel p = stack.back();
        stack.pop_back();
        const PanelEval pe = gk15(f, p.a, p.b, out.evaluations);
        const double frac = std::abs(p.b - p.a) / total_len;
        const double mag = std::abs(pe.kronrod);
        const bool ok = pe.err <= cfg.abs_tol * frac || pe.err <= cfg.rel_tol * mag ||
                        pe.err <= 1e-15 * mag;  // machine-precision floor near kinks
        if (ok || p.depth >= cfg.max_depth) {
            out.value += pe.kronrod;
            out.err += pe.err;
            if (!ok) depth_exhausted = true;
        } else {
            const double mid = 0.5 * (p.a + p.b);
            stack.push_back({mid, p.b, p.depth + 1});
            stack.push_back({p.a, mid, p.depth + 1});
        }
    }
    out.err += eval_err_rate * total_len;
    out.converged = !depth_exhausted;
    return out;
}

IntegralResult integrate_radial_panels(const std::function<Complex(double)>& f, double r_max,
                                       const QuadratureConfig& cfg,
                                       std::vector<double>* increments) {
    cfg.validate();
    if (!(r_max > 0.0 && r_max < 1.0))
        throw std::domain_error("integrate_radial_panels: need 0 < r_max < 1");

    IntegralResult out;
    std::vector<double> incs;
    QuadratureConfig panel_cfg = cfg;
    bool panels_ok = true;
    double value = 0.0, eval_err = 0.0;

    double lo = 0.0;
    int j = 1;
    while (lo < r_max) {
        const double edge = 1.0 - std::ldexp(1.0, -j);  // 1 - 2^-j
        const double hi = std::min(edge, r_max);
        if (hi > lo) {
            panel_cfg.abs_tol = cfg.abs_tol * (hi - lo) / r_max;
            const IntegralResult r = integrate_line(f, lo, hi, panel_cfg);
            value += r.value.real();
            eval_err += r.value.imag();
            out.err += r.err;
            out.evaluations += r.evaluations;
            if (!r.converged) panels_ok = false;
            if (hi == edge && j >= 2) incs.push_back(r.value.real());  // complete dyadic panel
            lo = hi;
        }
        if (edge >= r_max) break;
        ++j;
        if (j > 1070) break;  // r_max indistinguishable from 1 in double precision
    }
    out.value = value;
    out.err += std::max(0.0, eval_err);
    out.converged = panels_ok && out.err <= cfg.abs_tol * (1.0 + 1e-12);

    if (incs.size() >= 8) {
        bool all_big = true;
        for (std::size_t i = incs.size() - 8; i < incs.size(); ++i)
            if (incs[i] <= cfg.divergence_threshold) all_big = false;
        out.diverging = all_big;
    }
    if (out.diverging) out.converged = false;
    if (increments) *increments = std::move(incs);
    return out;
}

} // namespace disklab
