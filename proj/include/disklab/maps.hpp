#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "disklab/geometry.hpp"

namespace disklab {

/// Value together with a bound on the truncation/representation error.
struct Evaluation {
    Complex value;
    double err = 0.0;
};

struct NormEstimate {
    double value = 0.0;
    double eval_err = 0.0;  // worst evaluation error encountered on the grid
};

/// Evaluation contract for an analytic function on the unit disk.  Both
/// eval and deriv report a certified error bound; implementations are
/// immutable after construction and safe to share across threads.
class AnalyticMap {
  public:
    virtual ~AnalyticMap() = default;

    virtual Evaluation eval(Complex z) const = 0;
    virtual Evaluation deriv(Complex z) const = 0;

    /// Values on the circle |z| = r at m equispaced angles.  Overridden where
    /// a faster evaluation than the pointwise loop exists.
    virtual std::vector<Evaluation> eval_on_circle(double r, int m) const;

    /// Certified bound for sup_theta int_r^1 |f'(t e^{i theta})| dt, when the
    /// representation supports one (coefficient-side bound).
    virtual std::optional<double> radial_variation_tail(double /*r*/) const {
        return std::nullopt;
    }
};

using MapPtr = std::shared_ptr<const AnalyticMap>;

/// Analytic tail rule attached to a truncated coefficient sequence.
/// series(rho)  >= sum_{n>N} |a_n| rho^n
/// deriv(rho)   >= sum_{n>N} n |a_n| rho^{n-1}
/// variation(r) >= sum_{n>N} |a_n| (1 - r^n)
struct TailBound {
    std::function<double(double)> series;
    std::function<double(double)> deriv;
    std::function<double(double)> variation;

    static TailBound none();
    /// Exact geometric rule for sum_{k>k_stored} 2^{-k} z^{2^k}.
    static TailBound lacunary(int k_stored);

    double l1() const { return series(1.0); }
};

/// Dense coefficients a_0..a_N plus a tail rule.
class PowerSeries : public AnalyticMap {
  public:
    explicit PowerSeries(std::vector<Complex> coeffs, TailBound tail = TailBound::none());

    Evaluation eval(Complex z) const override;
    Evaluation deriv(Complex z) const override;
    std::vector<Evaluation> eval_on_circle(double r, int m) const override;
    std::optional<double> radial_variation_tail(double r) const override;

    const std::vector<Complex>& coefficients() const { return coeffs_; }
    const TailBound& tail() const { return tail_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient-wise derivative; tail rules shift accordingly.
    PowerSeries derivative() const;

    static PowerSeries constant(Complex c);
    static PowerSeries identity();
    static PowerSeries monomial(int n, Complex a = 1.0);
    /// sum_{k=0}^{k_stored} 2^{-k} z^{2^k} with the exact lacunary tail rule.
    static PowerSeries lacunary(int k_stored);

  private:
    std::vector<Complex> coeffs_;
    TailBound tail_;
    TailBound deriv_tail_;  // rule for the coefficient sequence of the derivative
    PowerSeries(std::vector<Complex> c, TailBound t, TailBound dt);
};

/// f(factor * z) for |factor| <= 1: dilation (real factor) or rotation.
class ScaledArgumentMap : public AnalyticMap {
  public:
    ScaledArgumentMap(MapPtr base, Complex factor);
    Evaluation eval(Complex z) const override;
    Evaluation deriv(Complex z) const override;

  private:
    MapPtr base_;
    Complex factor_;
};

/// Integer power g^n of a base map.
class PowerMap : public AnalyticMap {
  public:
    PowerMap(MapPtr base, int n);
    Evaluation eval(Complex z) const override;
    Evaluation deriv(Complex z) const override;

  private:
    MapPtr base_;
    int n_;
};

/// alpha*f + beta*g.
class LinearCombinationMap : public AnalyticMap {
  public:
    LinearCombinationMap(Complex alpha, MapPtr f, Complex beta, MapPtr g);
    Evaluation eval(Complex z) const override;
    Evaluation deriv(Complex z) const override;

  private:
    Complex alpha_, beta_;
    MapPtr f_, g_;
};

MapPtr dilate(MapPtr f, double r);
MapPtr rotate(MapPtr f, double delta);

/// (1/2pi) int |f(r e^{i t})| dt by the m-node periodic trapezoid rule.
NormEstimate h1_norm(const AnalyticMap& f, double r, int m);

/// sum_{K < n <= N} |a_n| plus the stored tail rule at 1.  Throws if K > N.
double l1_tail(const PowerSeries& f, int K);

/// pi * h1_norm(g', r, m) - sum_{n>=1} |a_n|  (classical inequality margin).
double hardy_margin(const PowerSeries& g, double r, int m);

/// Grid maximum of |f| on |z| = r; a lower bound for the sup norm,
/// nondecreasing in r by the maximum principle.
double sup_norm_estimate(const AnalyticMap& f, double r, int m);

/// Error with a 1-based line number for malformed coefficient/zero files.
struct FileFormatError : std::runtime_error {
    int line;
    FileFormatError(const std::string& what, int line_number)
        : std::runtime_error(what), line(line_number) {}
};

/// Coefficient CSV: columns n,re,im, ascending n, no gaps.
PowerSeries read_coefficients_csv(const std::string& path);
void write_coefficients_csv(const std::string& path, const PowerSeries& f);

} // namespace disklab
