#include "disklab/domains.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace disklab {

namespace {

constexpr double kGeomTol = 1e-12;
constexpr double kLn2 = 0.6931471805599453;

double positive_angle(Complex z) {
    double t = std::arg(z);
    if (t < 0.0) t += kTwoPi;
    return t;
}

double point_segment_distance(Complex p, Complex a, Complex b) {
    const Complex ab = b - a;
    const double len2 = std::norm(ab);
    double t = ((p - a).real() * ab.real() + (p - a).imag() * ab.imag()) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

} // namespace

SpiralDomain::SpiralDomain(Kind kind, double t_max) : kind_(kind), t_max_(t_max) {
    if (t_max_ < 4.0) throw std::domain_error("SpiralDomain: t_max too small");
    if (kind_ == Kind::reciprocal) {
        // tilt of the slit against circles: tan = 1/(2 pi t) <= 1/(2 pi)
        cos_pitch_ = 1.0 / std::sqrt(1.0 + 1.0 / (kTwoPi * kTwoPi));
        core_radius_ = std::max(1.0 / t_max_, kGeomTol);
    } else {
        cos_pitch_ = 1.0 / std::sqrt(1.0 + (kLn2 / kTwoPi) * (kLn2 / kTwoPi));
        core_radius_ = std::max(std::exp2(-t_max_), kGeomTol);
    }
}

std::string SpiralDomain::name() const {
    return kind_ == Kind::reciprocal ? "spiral_reciprocal" : "spiral_exponential";
}

Complex SpiralDomain::slit_point(double t) const {
    const double r = kind_ == Kind::reciprocal ? 1.0 / t : std::exp2(-t);
    return std::polar(r, kTwoPi * t);
}

Complex SpiralDomain::mid_channel_point(double t) const {
    double r;
    if (kind_ == Kind::reciprocal)
        r = 0.5 * (1.0 / t + 1.0 / (t + 1.0));
    else
        r = 0.75 * std::exp2(-t);
    return std::polar(r, kTwoPi * t);
}

std::vector<Complex> SpiralDomain::channel_path(double t0, double t1, double step) const {
    std::vector<Complex> out;
    const int n = std::max(1, static_cast<int>(std::ceil(std::abs(t1 - t0) / step)));
    for (int i = 0; i <= n; ++i)
        out.push_back(mid_channel_point(t0 + (t1 - t0) * i / n));
    return out;
}

Complex SpiralDomain::basepoint() const {
    return kind_ == Kind::reciprocal ? mid_channel_point(1.5) : mid_channel_point(0.5);
}

int SpiralDomain::channel_index(Complex z) const {
    const double s = std::abs(z);
    const double f = positive_angle(z) / kTwoPi;
    if (kind_ == Kind::reciprocal) {
        // crossings at radii 1/(k+f), k >= 1
        const double x = 1.0 / s - f;
        return std::max(0, static_cast<int>(std::ceil(x)) - 1);
    }
    // crossings at radii 2^{-(k+f)}, k >= 0
    const double y = -std::log2(s) - f;
    return std::max(0, static_cast<int>(std::ceil(y)));
}

double SpiralDomain::obstacle_clearance(Complex z) const {
    const double s = std::abs(z);
    double clearance = 1.0 - s;              // unit circle
    clearance = std::min(clearance, s - core_radius_);  // truncated core, 0 included
    if (clearance <= 0.0) return clearance;

    const double f = positive_angle(z) / kTwoPi;
    double gap = std::numeric_limits<double>::infinity();
    if (kind_ == Kind::reciprocal) {
        const double x = 1.0 / s - f;  // crossing index offset
        const auto k0 = static_cast<long>(std::floor(x));
        for (long k = std::max<long>(1, k0 - 1); k <= k0 + 1; ++k) {
            const double t = static_cast<double>(k) + f;
            if (t > t_max_) break;
            gap = std::min(gap, std::abs(s - 1.0 / t));
        }
    } else {
        const double y = -std::log2(s) - f;
        const auto k0 = static_cast<long>(std::floor(y));
        for (long k = std::max<long>(0, k0 - 1); k <= k0 + 1; ++k) {
            const double t = static_cast<double>(k) + f;
            if (t > t_max_) break;
            gap = std::min(gap, std::abs(s - std::exp2(-t)));
        }
    }
    return std::min(clearance, gap * cos_pitch_);
}

bool SpiralDomain::contains(Complex z) const {
    const double s = std::abs(z);
    if (s >= 1.0 || s <= kGeomTol) return false;
    const double f = positive_angle(z) / kTwoPi;
    // radial gap to the nearest crossings (untruncated slit)
    double gap = std::numeric_limits<double>::infinity();
    if (kind_ == Kind::reciprocal) {
        const double x = 1.0 / s - f;
        const auto k0 = static_cast<long>(std::floor(x));
        for (long k = std::max<long>(1, k0 - 1); k <= k0 + 1; ++k)
            gap = std::min(gap, std::abs(s - 1.0 / (static_cast<double>(k) + f)));
    } else {
        const double y = -std::log2(s) - f;
        const auto k0 = static_cast<long>(std::floor(y));
        for (long k = std::max<long>(0, k0 - 1); k <= k0 + 1; ++k)
            gap = std::min(gap, std::abs(s - std::exp2(-(static_cast<double>(k) + f))));
    }
    return gap * cos_pitch_ > kGeomTol;
}

double r_point(const SpiralDomain& domain, int n) {
    if (domain.kind() != SpiralDomain::Kind::reciprocal)
        throw std::invalid_argument("r_point: reciprocal spiral only");
    if (n < 1) throw std::domain_error("r_point: n >= 1");
    return 0.5 * (1.0 / n + 1.0 / (n + 1.0));
}

Complex branch_log(const SpiralDomain& domain, Complex z) {
    if (domain.kind() != SpiralDomain::Kind::reciprocal)
        throw std::invalid_argument("branch_log: reciprocal spiral only");
    if (!domain.contains(z)) throw std::domain_error("branch_log: point not in the domain");
    const int m = domain.channel_index(z);
    return {std::log(std::abs(z)), positive_angle(z) + kTwoPi * (m + 1)};
}

LogPair h_and_hprime(const SpiralDomain& domain, Complex z) {
    const Complex ell = branch_log(domain, z);
    return {std::log(ell), 1.0 / (z * ell)};
}

CombDomain::CombDomain(int n_slits) : n_slits_(n_slits) {
    if (n_slits < 1) throw std::domain_error("CombDomain: need at least one slit");
}

bool CombDomain::contains(Complex z) const {
    const double x = z.real(), y = z.imag();
    if (!(x > 0.0 && x < 1.0 && y > 0.0 && y < 1.0)) return false;
    for (int n = 1; n <= n_slits_; ++n) {
        const double sx = std::exp2(-n);
        if (point_segment_distance(z, {sx, 0.5}, {sx, 1.0}) <= kGeomTol) return false;
    }
    return true;
}

double CombDomain::obstacle_clearance(Complex z) const {
    const double x = z.real(), y = z.imag();
    double c = std::min(std::min(x, 1.0 - x), std::min(y, 1.0 - y));
    for (int n = 1; n <= n_slits_; ++n) {
        const double sx = std::exp2(-n);
        c = std::min(c, point_segment_distance(z, {sx, 0.5}, {sx, 1.0}));
    }
    return c;
}

DomainPath make_path(const Domain& domain, std::vector<Complex> vertices, double sample_step) {
    if (vertices.size() < 2) throw std::invalid_argument("make_path: need at least 2 vertices");
    DomainPath out;
    out.min_clearance = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
        const Complex a = vertices[i], b = vertices[i + 1];
        const double len = std::abs(b - a);
        const int samples = std::max(2, static_cast<int>(std::ceil(len / sample_step)));
        for (int s = 0; s <= samples; ++s) {
            const Complex p = a + (b - a) * (static_cast<double>(s) / samples);
            if (!domain.contains(p))
                throw std::runtime_error("make_path: polyline leaves the domain");
            out.min_clearance = std::min(out.min_clearance, domain.obstacle_clearance(p));
        }
        out.length += len;
    }
    out.vertices = std::move(vertices);
    return out;
}

IntegralResult j_integral(const Domain& domain, const std::function<Complex(Complex)>& f,
                          const DomainPath& path, const QuadratureConfig& cfg) {
    if (path.vertices.size() < 2) throw std::invalid_argument("j_integral: degenerate path");
    IntegralResult total;
    total.converged = true;
    const std::size_t nseg = path.vertices.size() - 1;
    QuadratureConfig seg_cfg = cfg;
    for (std::size_t i = 0; i < nseg; ++i) {
        const Complex a = path.vertices[i], b = path.vertices[i + 1];
        for (int s = 0; s <= 8; ++s) {
            const Complex p = a + (b - a) * (s / 8.0);
            if (!domain.contains(p))
                throw std::runtime_error("j_integral: path leaves the domain");
        }
        seg_cfg.abs_tol = cfg.abs_tol / static_cast<double>(nseg);
        const IntegralResult seg =
            integrate_line([&](double t) { return f(a + (b - a) * t) * (b - a); }, 0.0, 1.0,
                           seg_cfg);
        total.value += seg.value;
        total.err += seg.err;
        total.evaluations += seg.evaluations;
        if (!seg.converged) total.converged = false;
    }
    return total;
}

} // namespace disklab
