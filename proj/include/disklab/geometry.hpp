#pragma once

#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace disklab {

using Complex = std::complex<double>;

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;

/// A point strictly inside the unit disk.  Construction rejects |z| >= 1;
/// nothing is clamped or projected.
class DiskPoint {
  public:
    DiskPoint(double re, double im) : DiskPoint(Complex(re, im)) {}
    explicit DiskPoint(Complex z) : z_(z) {
        if (std::abs(z) >= 1.0)
            throw std::domain_error("DiskPoint: modulus must be < 1");
    }

    Complex value() const { return z_; }
    double re() const { return z_.real(); }
    double im() const { return z_.imag(); }

  private:
    Complex z_;
};

/// Pseudo-hyperbolic metric rho(z,w) = |(z-w)/(1 - conj(w) z)|.
double rho(const DiskPoint& z, const DiskPoint& w);

/// Unchecked variant for interior points produced by trusted code paths.
double rho_unchecked(Complex z, Complex w);

/// Disk automorphism phi_a(z) = (a - z)/(1 - conj(a) z); involutive, swaps 0 and a.
Complex mobius_swap(Complex a, Complex z);

/// Pseudo-hyperbolic disk {z : rho(center, z) < radius}, 0 < radius < 1.
struct PseudoDisk {
    DiskPoint center;
    double radius;

    PseudoDisk(DiskPoint c, double r) : center(c), radius(r) {
        if (!(r > 0.0 && r < 1.0))
            throw std::domain_error("PseudoDisk: radius must be in (0,1)");
    }
};

struct EuclideanDisk {
    Complex center;
    double radius;
};

/// Euclidean disk equal as a set to the pseudo-hyperbolic one.
EuclideanDisk pseudo_disk_euclidean(const PseudoDisk& d);

/// Carleson square over the boundary arc centered at arc_center with the given
/// arc length: {r e^{i t} : e^{i t} in I, 1 - |I|/(2 pi) <= r < 1}.
struct CarlesonSquare {
    double arc_center;  // radians, normalized to [0, 2pi)
    double arc_length;  // in (0, 2pi]

    CarlesonSquare(double center, double length);
    bool contains(Complex z) const;
};

/// Finite atomic measure on the disk.
struct PointMassMeasure {
    std::vector<std::pair<DiskPoint, double>> atoms;

    void add(DiskPoint p, double mass) {
        if (mass < 0.0) throw std::domain_error("PointMassMeasure: mass must be >= 0");
        atoms.emplace_back(p, mass);
    }
    double total_mass() const;
};

/// Max over all dyadic Carleson squares of generation 0..depth of mu(S_I)/|I|.
/// Generation g has 2^g arcs of length 2pi/2^g.  Empty measure gives 0.
double carleson_constant(const PointMassMeasure& mu, int depth);

/// Nontangential approach region with vertex e^{i vertex_angle}:
/// {z : |vertex - z| <= aperture (1 - |z|)}, aperture >= 1.
struct StolzRegion {
    double vertex_angle;
    double aperture;

    StolzRegion(double angle, double m) : vertex_angle(angle), aperture(m) {
        if (m < 1.0) throw std::domain_error("StolzRegion: aperture must be >= 1");
    }
};

bool stolz_contains(const StolzRegion& region, const DiskPoint& z);

// Deterministic evaluation grids used by norm estimators and experiments.
namespace grids {

/// m equispaced angles 2 pi j / m.
std::vector<double> thetas(int m);

/// Circle |z| = r sampled at m equispaced angles.
std::vector<Complex> circle(double r, int m);

/// Polar grid: radii (i+1)/(n_r+1) scaled to r_max, m angles each.
std::vector<Complex> polar(double r_max, int n_r, int m);

} // namespace grids

} // namespace disklab
