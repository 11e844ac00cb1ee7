#include "disklab/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace disklab {

namespace {

double wrap_angle(double t) {
    t = std::fmod(t, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    return t;
}

} // namespace

double rho_unchecked(Complex z, Complex w) {
    return std::abs((z - w) / (1.0 - std::conj(w) * z));
}

double rho(const DiskPoint& z, const DiskPoint& w) {
    return rho_unchecked(z.value(), w.value());
}

Complex mobius_swap(Complex a, Complex z) {
    return (a - z) / (1.0 - std::conj(a) * z);
}

EuclideanDisk pseudo_disk_euclidean(const PseudoDisk& d) {
    const Complex a = d.center.value();
    const double r = d.radius;
    const double aa = std::norm(a);
    const double den = 1.0 - r * r * aa;
    return {a * ((1.0 - r * r) / den), r * (1.0 - aa) / den};
}

CarlesonSquare::CarlesonSquare(double center, double length)
    : arc_center(wrap_angle(center)), arc_length(length) {
    if (!(length > 0.0 && length <= kTwoPi))
        throw std::domain_error("CarlesonSquare: arc length must be in (0, 2pi]");
}

bool CarlesonSquare::contains(Complex z) const {
    const double r = std::abs(z);
    if (r >= 1.0 || r < 1.0 - arc_length / kTwoPi) return false;
    if (arc_length >= kTwoPi) return true;
    double d = wrap_angle(std::arg(z) - arc_center);
    if (d > kPi) d -= kTwoPi;
    return std::abs(d) <= arc_length / 2.0;
}

double PointMassMeasure::total_mass() const {
    double s = 0.0;
    for (const auto& [p, m] : atoms) s += m;
    return s;
}

double carleson_constant(const PointMassMeasure& mu, int depth) {
    if (depth < 1) throw std::domain_error("carleson_constant: depth must be >= 1");
    if (mu.atoms.empty()) return 0.0;

    double best = 0.0;
    for (int g = 0; g <= depth; ++g) {
        const std::int64_t n_arcs = std::int64_t{1} << g;
        const double len = kTwoPi / static_cast<double>(n_arcs);
        const double r_min = 1.0 - len / kTwoPi;
        std::vector<double> mass(static_cast<std::size_t>(n_arcs), 0.0);
        for (const auto& [p, m] : mu.atoms) {
            if (std::abs(p.value()) < r_min) continue;
            double t = std::arg(p.value());
            if (t < 0.0) t += kTwoPi;
            auto j = static_cast<std::int64_t>(t / len);
            if (j >= n_arcs) j = n_arcs - 1;
            mass[static_cast<std::size_t>(j)] += m;
        }
        const double m_best = *std::max_element(mass.begin(), mass.end());
        best = std::max(best, m_best / len);
    }
    return best;
}

bool stolz_contains(const StolzRegion& region, const DiskPoint& z) {
    const Complex vertex = std::polar(1.0, region.vertex_angle);
    return std::abs(vertex - z.value()) <= region.aperture * (1.0 - std::abs(z.value()));
}

namespace grids {

std::vector<double> thetas(int m) {
    std::vector<double> out(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) out[static_cast<std::size_t>(j)] = kTwoPi * j / m;
    return out;
}

std::vector<Complex> circle(double r, int m) {
    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) out.push_back(std::polar(r, kTwoPi * j / m));
    return out;
}

std::vector<Complex> polar(double r_max, int n_r, int m) {
    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(n_r) * static_cast<std::size_t>(m) + 1);
    out.emplace_back(0.0, 0.0);
    for (int i = 0; i < n_r; ++i) {
        const double r = r_max * (i + 1) / static_cast<double>(n_r + 1);
        for (int j = 0; j < m; ++j) out.push_back(std::polar(r, kTwoPi * j / m));
    }
    return out;
}

} // namespace grids

} // namespace disklab
