#pragma once

#include <array>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "disklab/quadrature.hpp"

namespace disklab {

/// Planar domain with slit obstacles, queried by the path machinery.
class Domain {
  public:
    virtual ~Domain() = default;
    virtual std::string name() const = 0;
    /// Exact membership up to geometric tolerance 1e-12.
    virtual bool contains(Complex z) const = 0;
    /// Lower bound on the distance from z to the blocked set (slits, outer
    /// boundary, truncated spiral core).  Negative or zero means blocked.
    virtual double obstacle_clearance(Complex z) const = 0;
    virtual std::array<double, 4> bbox() const = 0;  // xmin, xmax, ymin, ymax
    virtual Complex basepoint() const = 0;
};

/// Unit disk minus a spiral slit accumulating at the origin.
///   reciprocal:  gamma(t) = e^{2 pi i t} / t,   t >= 1
///   exponential: gamma(t) = e^{2 pi i t} / 2^t, t >= 0
class SpiralDomain final : public Domain {
  public:
    enum class Kind { reciprocal, exponential };

    explicit SpiralDomain(Kind kind, double t_max = 1e4);

    std::string name() const override;
    bool contains(Complex z) const override;
    double obstacle_clearance(Complex z) const override;
    std::array<double, 4> bbox() const override { return {-1.0, 1.0, -1.0, 1.0}; }
    Complex basepoint() const override;

    Kind kind() const { return kind_; }
    double t_max() const { return t_max_; }

    /// Number of slit crossings of the ray through z with radius > |z|
    /// (the inter-slit channel index).
    int channel_index(Complex z) const;

    /// Point of the spiral at parameter t.
    Complex slit_point(double t) const;

    /// Midpoint of the channel at parameter t (same angle as slit_point(t),
    /// radius between consecutive crossings); passes through the inter-slit
    /// test radii at integer t for the reciprocal kind.
    Complex mid_channel_point(double t) const;

    /// Polyline along the channel middle from parameter t0 to t1.
    std::vector<Complex> channel_path(double t0, double t1, double step = 0.01) const;

  private:
    Kind kind_;
    double t_max_;
    double cos_pitch_;  // lower bound on cos of the slit tilt against circles
    double core_radius_;
};

/// r_n = (1/n + 1/(n+1))/2, strictly between consecutive crossings of the
/// positive axis (reciprocal spiral only).
double r_point(const SpiralDomain& domain, int n);

/// The branch of log on the reciprocal spiral domain with positive imaginary
/// part, fixed by the channel winding.  Throws outside the domain.
Complex branch_log(const SpiralDomain& domain, Complex z);

struct LogPair {
    Complex H;       // principal log of branch_log(z)
    Complex Hprime;  // 1/(z * branch_log(z))
};
LogPair h_and_hprime(const SpiralDomain& domain, Complex z);

/// Open unit square minus the comb slits {2^-n + iy : 1/2 <= y <= 1}.
class CombDomain final : public Domain {
  public:
    explicit CombDomain(int n_slits = 12);

    std::string name() const override { return "comb"; }
    bool contains(Complex z) const override;
    double obstacle_clearance(Complex z) const override;
    std::array<double, 4> bbox() const override { return {0.0, 1.0, 0.0, 1.0}; }
    Complex basepoint() const override { return {0.5, 0.25}; }

    int n_slits() const { return n_slits_; }

  private:
    int n_slits_;
};

/// Polyline inside a domain.
struct DomainPath {
    std::vector<Complex> vertices;
    double length = 0.0;
    double min_clearance = 0.0;
};

/// Builds the path and validates every segment against the domain (sampled at
/// the clearance scale).  Throws if the polyline leaves the domain.
DomainPath make_path(const Domain& domain, std::vector<Complex> vertices,
                     double sample_step = 1e-3);

/// Integral of f along the polyline; panel-adaptive per segment.  Throws when
/// a sampled path point leaves the domain.
IntegralResult j_integral(const Domain& domain, const std::function<Complex(Complex)>& f,
                          const DomainPath& path, const QuadratureConfig& cfg);

} // namespace disklab
