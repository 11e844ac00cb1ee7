#include "disklab/blaschke.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace disklab {

namespace {

Complex blaschke_factor(Complex a, Complex z) {
    return (std::abs(a) / a) * (a - z) / (1.0 - std::conj(a) * z);
}

// d/dz of the normalized factor: (|a|/a)(|a|^2 - 1)/(1 - conj(a) z)^2.
Complex blaschke_factor_deriv(Complex a, Complex z) {
    const Complex d = 1.0 - std::conj(a) * z;
    return (std::abs(a) / a) * (std::norm(a) - 1.0) / (d * d);
}

double wrapped_angle_gap(double x, double y) {
    double d = std::fmod(std::abs(x - y), kTwoPi);
    return std::min(d, kTwoPi - d);
}

// |a - e^{i theta}| >= max(1-|a|, 2 sqrt(|a|) |sin(gap/2)|).
double boundary_distance_lower(double modulus, double angle, double theta) {
    const double gap = wrapped_angle_gap(angle, theta);
    return std::max(1.0 - modulus, 2.0 * std::sqrt(modulus) * std::abs(std::sin(gap / 2.0)));
}

class GeometricRule final : public GenerationRule {
  public:
    explicit GeometricRule(double q) : q_(q) {
        if (!(q > 0.0 && q < 1.0)) throw std::domain_error("geometric rule: q in (0,1)");
    }
    std::string name() const override { return "geometric"; }
    Complex zero(int k) const override { return 1.0 - std::pow(q_, k); }
    double tail_one_minus(int N) const override { return std::pow(q_, N + 1) / (1.0 - q_); }
    std::optional<double> frostman_tail(double theta, int N) const override {
        const double s = 2.0 * std::abs(std::sin(theta / 2.0));
        if (s == 0.0) return std::nullopt;  // zeros accumulate at angle 0; sum diverges
        double extension = 0.0;
        int M = N;
        for (int k = N + 1; k <= N + 200; ++k, M = k) {
            const double a = 1.0 - std::pow(q_, k);
            if (a <= 0.0) continue;
            extension += (1.0 - a) / std::abs(Complex(a, 0.0) - std::polar(1.0, theta));
        }
        const double denom = 2.0 * std::sqrt(std::max(0.5, 1.0 - std::pow(q_, M))) *
                             std::abs(std::sin(theta / 2.0));
        return extension + tail_one_minus(M) / denom;
    }

  private:
    double q_;
};

class Frostman4Rule final : public GenerationRule {
  public:
    std::string name() const override { return "frostman4"; }
    Complex zero(int k) const override {
        return (1.0 - std::pow(4.0, -k)) * std::polar(1.0, std::ldexp(1.0, -k));
    }
    double tail_one_minus(int N) const override {
        return std::pow(4.0, -(N + 1)) / (1.0 - 0.25);
    }
    std::optional<double> frostman_tail(double theta, int N) const override {
        // Explicit certified per-term bounds; moduli reach 1 in double
        // precision long before k = 600 and the remaining terms are dominated
        // by (pi/2) 2^{-k}, which underflows.
        double bound = 0.0;
        for (int k = N + 1; k <= N + 600; ++k) {
            const double one_minus = std::pow(4.0, -k);
            if (one_minus == 0.0) break;
            const double dist = boundary_distance_lower(1.0 - one_minus, std::ldexp(1.0, -k), theta);
            bound += one_minus / dist;
        }
        return bound;
    }
};

class OneOverKSqRule final : public GenerationRule {
  public:
    std::string name() const override { return "one_over_k_sq"; }
    Complex zero(int k) const override {
        const double d = static_cast<double>(k) + 1.0;
        return 1.0 - 1.0 / (d * d);
    }
    double tail_one_minus(int N) const override { return 1.0 / (N + 1); }
    std::optional<double> frostman_tail(double theta, int N) const override {
        const double s = 2.0 * std::abs(std::sin(theta / 2.0));
        if (s == 0.0) return std::nullopt;
        double extension = 0.0;
        int M = N;
        for (int k = N + 1; k <= N + 200; ++k, M = k) {
            const Complex a = zero(k);
            extension += (1.0 - std::abs(a)) / std::abs(a - std::polar(1.0, theta));
        }
        return extension + tail_one_minus(M) / s;
    }
};

} // namespace

std::shared_ptr<const GenerationRule> geometric_rule(double q) {
    return std::make_shared<GeometricRule>(q);
}
std::shared_ptr<const GenerationRule> frostman4_rule() {
    return std::make_shared<Frostman4Rule>();
}
std::shared_ptr<const GenerationRule> one_over_k_sq_rule() {
    return std::make_shared<OneOverKSqRule>();
}

std::shared_ptr<const GenerationRule> make_rule(const std::string& name, double param) {
    if (name == "geometric") return geometric_rule(param);
    if (name == "frostman4") return frostman4_rule();
    if (name == "one_over_k_sq") return one_over_k_sq_rule();
    throw std::invalid_argument("unknown zero generation rule: " + name);
}

ZeroSequence::ZeroSequence(std::vector<Complex> zeros,
                           std::shared_ptr<const GenerationRule> rule)
    : zeros_(std::move(zeros)), rule_(std::move(rule)) {
    for (const Complex& a : zeros_) {
        if (a == Complex(0.0)) throw std::domain_error("ZeroSequence: zeros must be nonzero");
        if (std::abs(a) >= 1.0) throw std::domain_error("ZeroSequence: zeros must be inside the disk");
    }
}

ZeroSequence ZeroSequence::from_rule(std::shared_ptr<const GenerationRule> rule, int count) {
    std::vector<Complex> z;
    z.reserve(static_cast<std::size_t>(count));
    for (int k = 1; k <= count; ++k) z.push_back(rule->zero(k));
    return ZeroSequence(std::move(z), std::move(rule));
}

double ZeroSequence::tail_one_minus(int N) const {
    if (!rule_) return 0.0;
    return rule_->tail_one_minus(N);
}

BlaschkeProduct::BlaschkeProduct(ZeroSequence zeros, int truncation, Complex phase)
    : zeros_(std::move(zeros)), n_(truncation), phase_(phase) {
    if (n_ < 1 || n_ > zeros_.count())
        throw std::domain_error("BlaschkeProduct: truncation out of range");
    tail_ = zeros_.tail_one_minus(n_);
}

Evaluation BlaschkeProduct::eval(Complex z) const {
    const double az = std::abs(z);
    if (tail_ > 0.0 && az >= 1.0)
        throw std::domain_error("BlaschkeProduct: infinite product evaluated on the boundary");
    Complex v = phase_;
    const auto& zs = zeros_.zeros();
    for (int k = 0; k < n_; ++k) v *= blaschke_factor(zs[static_cast<std::size_t>(k)], z);
    const double err = tail_ > 0.0 ? 2.0 * tail_ / (1.0 - az) : 0.0;
    return {v, err};
}

Evaluation BlaschkeProduct::deriv(Complex z) const {
    const double az = std::abs(z);
    if (tail_ > 0.0 && az >= 1.0)
        throw std::domain_error("BlaschkeProduct: infinite product evaluated on the boundary");
    const auto& zs = zeros_.zeros();
    const auto n = static_cast<std::size_t>(n_);
    // prefix/suffix product rule; exact at stored zeros
    std::vector<Complex> f(n), df(n), suffix(n + 1);
    for (std::size_t k = 0; k < n; ++k) {
        f[k] = blaschke_factor(zs[k], z);
        df[k] = blaschke_factor_deriv(zs[k], z);
    }
    suffix[n] = 1.0;
    for (std::size_t k = n; k-- > 0;) suffix[k] = suffix[k + 1] * f[k];
    Complex acc = 0.0, prefix = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        acc += df[k] * prefix * suffix[k + 1];
        prefix *= f[k];
    }
    acc *= phase_;
    double err = 0.0;
    if (tail_ > 0.0) {
        const double g = 1.0 - az;
        err = 2.0 * tail_ / (g * g) + std::abs(acc) * 2.0 * tail_ / g;
    }
    return {acc, err};
}

Evaluation BlaschkeProduct::eval_subproduct(int k, Complex z) const {
    if (k < 1 || k > n_) throw std::out_of_range("eval_subproduct: index out of range");
    const double az = std::abs(z);
    if (tail_ > 0.0 && az >= 1.0)
        throw std::domain_error("BlaschkeProduct: infinite product evaluated on the boundary");
    Complex v = phase_;
    const auto& zs = zeros_.zeros();
    for (int j = 0; j < n_; ++j)
        if (j != k - 1) v *= blaschke_factor(zs[static_cast<std::size_t>(j)], z);
    const double err = tail_ > 0.0 ? 2.0 * tail_ / (1.0 - az) : 0.0;
    return {v, err};
}

FrostmanSup frostman_sup(const ZeroSequence& zeros, const std::vector<double>& thetas) {
    if (thetas.empty()) throw std::invalid_argument("frostman_sup: empty grid");
    FrostmanSup out;
    out.sup = -1.0;
    const int N = zeros.count();
    for (double theta : thetas) {
        const Complex e = std::polar(1.0, theta);
        double s = 0.0;
        for (const Complex& a : zeros.zeros()) s += (1.0 - std::abs(a)) / std::abs(a - e);
        if (zeros.rule()) {
            const auto tail = zeros.rule()->frostman_tail(theta, N);
            if (!tail) {
                ++out.divergent_angles;
                continue;
            }
            s += *tail;
        }
        if (s > out.sup) {
            out.sup = s;
            out.argmax_theta = theta;
        }
    }
    if (out.sup < 0.0) throw std::runtime_error("frostman_sup: no certifiable grid angle");
    return out;
}

double separation_constant(const ZeroSequence& zeros) {
    const auto& zs = zeros.zeros();
    if (zs.size() < 2) throw std::invalid_argument("separation_constant: need >= 2 zeros");
    double best = 1.0;
    for (std::size_t j = 0; j < zs.size(); ++j)
        for (std::size_t k = j + 1; k < zs.size(); ++k)
            best = std::min(best, rho_unchecked(zs[j], zs[k]));
    return best;
}

double interp_delta(const ZeroSequence& zeros) {
    const auto& zs = zeros.zeros();
    const int N = zeros.count();
    if (N == 1 && !zeros.rule()) return 1.0;
    constexpr int kExtension = 60;
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k < N; ++k) {
        const Complex a = zs[static_cast<std::size_t>(k)];
        double p = 1.0;
        for (int j = 0; j < N; ++j)
            if (j != k) p *= rho_unchecked(a, zs[static_cast<std::size_t>(j)]);
        int M = N;
        if (zeros.rule()) {
            for (int j = N + 1; j <= N + kExtension; ++j, M = j)
                p *= rho_unchecked(a, zeros.rule()->zero(j));
            // 1 - rho(a, w) <= 4 (1-|w|)/(1-|a|), so the remaining factors
            // multiply to at least this certified value.
            const double m = 1.0 - 4.0 * zeros.rule()->tail_one_minus(M) / (1.0 - std::abs(a));
            p *= std::max(0.0, m);
        }
        best = std::min(best, p);
    }
    return best;
}

namespace {

// Numerator polynomial of B' for a finite product, R = P'Q - P Q' with
// P = prod(a_k - z), Q = prod(1 - conj(a_k) z), in ascending coefficients.
std::vector<Complex> bprime_numerator(const std::vector<Complex>& zeros) {
    auto mul = [](const std::vector<Complex>& p, Complex c0, Complex c1) {
        // multiply by (c0 + c1 z)
        std::vector<Complex> out(p.size() + 1, Complex(0.0));
        for (std::size_t i = 0; i < p.size(); ++i) {
            out[i] += p[i] * c0;
            out[i + 1] += p[i] * c1;
        }
        return out;
    };
    std::vector<Complex> P{1.0}, Q{1.0};
    for (const Complex& a : zeros) {
        P = mul(P, a, -1.0);
        Q = mul(Q, 1.0, -std::conj(a));
    }
    auto deriv = [](const std::vector<Complex>& p) {
        std::vector<Complex> out;
        for (std::size_t i = 1; i < p.size(); ++i) out.push_back(static_cast<double>(i) * p[i]);
        if (out.empty()) out.push_back(0.0);
        return out;
    };
    const auto Pp = deriv(P), Qp = deriv(Q);
    auto mulpoly = [](const std::vector<Complex>& x, const std::vector<Complex>& y) {
        std::vector<Complex> out(x.size() + y.size() - 1, Complex(0.0));
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
        return out;
    };
    auto A = mulpoly(Pp, Q);
    const auto B = mulpoly(P, Qp);
    if (B.size() > A.size()) A.resize(B.size(), 0.0);
    for (std::size_t i = 0; i < B.size(); ++i) A[i] -= B[i];
    while (A.size() > 1 && std::abs(A.back()) < 1e-14 * std::abs(A.front())) A.pop_back();
    return A;
}

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs) {
    // companion matrix eigenvalues
    int deg = static_cast<int>(coeffs.size()) - 1;
    while (deg > 0 && coeffs[static_cast<std::size_t>(deg)] == Complex(0.0)) --deg;
    if (deg < 1) return {};
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(deg, deg);
    const Complex lead = coeffs[static_cast<std::size_t>(deg)];
    for (int i = 0; i < deg; ++i) {
        if (i + 1 < deg) C(i + 1, i) = 1.0;
        C(i, deg - 1) = -coeffs[static_cast<std::size_t>(i)] / lead;
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(C, false);
    std::vector<Complex> roots;
    roots.reserve(static_cast<std::size_t>(deg));
    for (int i = 0; i < deg; ++i) roots.push_back(solver.eigenvalues()(i));
    return roots;
}

Complex poly_eval(const std::vector<Complex>& c, Complex z) {
    Complex acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

bool all_real_in_01(const std::vector<Complex>& zeros) {
    for (const Complex& a : zeros)
        if (a.imag() != 0.0 || !(a.real() > 0.0 && a.real() < 1.0)) return false;
    return true;
}

// Sign-change bracketing of B' on each gap between consecutive real zeros.
CriticalPointSet critical_points_real(const BlaschkeProduct& b) {
    std::vector<double> zs;
    for (int k = 0; k < b.truncation(); ++k)
        zs.push_back(b.zero_sequence().zeros()[static_cast<std::size_t>(k)].real());
    std::sort(zs.begin(), zs.end());
    CriticalPointSet out;
    auto bp = [&b](double t) { return b.deriv(Complex(t, 0.0)).value.real(); };
    for (std::size_t k = 0; k + 1 < zs.size(); ++k) {
        const double gap = zs[k + 1] - zs[k];
        double lo = zs[k] + 1e-9 * gap, hi = zs[k + 1] - 1e-9 * gap;
        double flo = bp(lo), fhi = bp(hi);
        if (!(flo * fhi < 0.0))
            throw std::runtime_error("critical_points: no sign change in a zero gap");
        for (int it = 0; it < 200 && hi - lo > 1e-17; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double fm = bp(mid);
            if (fm == 0.0) {
                lo = hi = mid;
                break;
            }
            (flo * fm < 0.0 ? hi : lo) = mid;
            if (lo == mid) flo = fm;
        }
        const double root = 0.5 * (lo + hi);
        out.points.emplace_back(root, 0.0);
        out.residuals.push_back(std::abs(b.deriv(Complex(root, 0.0)).value));
    }
    return out;
}

} // namespace

CriticalPointSet critical_points(const BlaschkeProduct& b) {
    if (!b.is_finite())
        throw std::invalid_argument("critical_points: finite products only");
    const int n = b.truncation();
    if (n < 2) throw std::invalid_argument("critical_points: degree must be >= 2");

    std::vector<Complex> zs(b.zero_sequence().zeros().begin(),
                            b.zero_sequence().zeros().begin() + n);
    if (all_real_in_01(zs)) return critical_points_real(b);

    const auto R = bprime_numerator(zs);
    const auto Rp = [&R] {
        std::vector<Complex> d;
        for (std::size_t i = 1; i < R.size(); ++i) d.push_back(static_cast<double>(i) * R[i]);
        return d;
    }();
    CriticalPointSet out;
    for (Complex root : polynomial_roots(R)) {
        // one Newton polish on the numerator
        const Complex dp = poly_eval(Rp, root);
        if (dp != Complex(0.0)) root -= poly_eval(R, root) / dp;
        if (std::abs(root) < 1.0 - 1e-12) {
            out.points.push_back(root);
            out.residuals.push_back(std::abs(b.deriv(root).value));
        }
    }
    if (static_cast<int>(out.points.size()) != n - 1)
        throw std::runtime_error("critical_points: in-disk root count != n-1 (numerical failure)");
    std::sort(out.points.begin(), out.points.end(), [](Complex a, Complex c) {
        return a.real() != c.real() ? a.real() < c.real() : a.imag() < c.imag();
    });
    return out;
}

bool interlace_check(const std::vector<double>& zeros, const CriticalPointSet& crit) {
    if (zeros.size() < 2) throw std::invalid_argument("interlace_check: need >= 2 zeros");
    for (std::size_t k = 0; k + 1 < zeros.size(); ++k)
        if (!(zeros[k] > 0.0 && zeros[k] < 1.0 && zeros[k] < zeros[k + 1]))
            throw std::invalid_argument("interlace_check: zeros must be increasing in (0,1)");
    if (!(zeros.back() > 0.0 && zeros.back() < 1.0))
        throw std::invalid_argument("interlace_check: zeros must be increasing in (0,1)");
    if (crit.points.size() != zeros.size() - 1) return false;
    for (std::size_t k = 0; k + 1 < zeros.size(); ++k) {
        const Complex p = crit.points[k];
        if (std::abs(p.imag()) > 1e-10) return false;
        if (!(p.real() > zeros[k] && p.real() < zeros[k + 1])) return false;
    }
    return true;
}

namespace {

// G = B'/Btilde assembled in product form.  For a finite product with real
// zeros the numerator of B' factors through the critical points and their
// circle inversions, so the ratio is evaluable everywhere in the disk with no
// 0/0 cancellation.
class NonvanishingFactor final : public AnalyticMap {
  public:
    NonvanishingFactor(std::vector<double> zeros, std::vector<double> crit, double scale)
        : a_(std::move(zeros)), b_(std::move(crit)), scale_(scale) {}

    Evaluation eval(Complex z) const override { return {value(z), 0.0}; }

    Evaluation deriv(Complex z) const override {
        // logarithmic derivative; G never vanishes on the disk
        Complex logd = 0.0;
        for (double bj : b_) {
            logd += 1.0 / (z - 1.0 / bj);
            logd += -bj / (1.0 - bj * z);
        }
        for (double ak : a_) logd += 2.0 * ak / (1.0 - ak * z);
        return {value(z) * logd, 0.0};
    }

  private:
    Complex value(Complex z) const {
        Complex num = scale_;
        for (double bj : b_) num *= (z - 1.0 / bj) * (1.0 - bj * z);
        Complex den = 1.0;
        for (double ak : a_) {
            const Complex q = 1.0 - ak * z;
            den *= q * q;
        }
        return num / den;
    }

    std::vector<double> a_, b_;
    double scale_;
};

} // namespace

DerivativeFactorization derivative_factorization(const BlaschkeProduct& b) {
    const int n = b.truncation();
    std::vector<Complex> zs(b.zero_sequence().zeros().begin(),
                            b.zero_sequence().zeros().begin() + n);
    if (!b.is_finite() || !all_real_in_01(zs))
        throw std::invalid_argument("derivative_factorization: finite real-zero products only");

    const CriticalPointSet crit = critical_points(b);
    std::vector<double> bs;
    bs.reserve(crit.points.size());
    for (Complex p : crit.points) bs.push_back(p.real());

    // leading coefficient of P'Q - PQ': prod(a_k) * sum(a_k - 1/a_k)
    double prod_a = 1.0, sum_s = 0.0;
    std::vector<double> as;
    for (const Complex& a : zs) {
        as.push_back(a.real());
        prod_a *= a.real();
        sum_s += a.real() - 1.0 / a.real();
    }
    const double r_lead = prod_a * sum_s;

    // R/Ptilde = r_lead (-1)^{n-1} prod(z - 1/b_j); pick the sign of Btilde
    // making G positive on (0,1).
    const double base_scale = r_lead * ((n - 1) % 2 == 0 ? 1.0 : -1.0);
    double g0 = base_scale;
    for (double bj : bs) g0 *= -1.0 / bj;  // value of prod(z - 1/b_j) at z = 0
    const double sign = g0 > 0.0 ? 1.0 : -1.0;

    std::vector<Complex> crit_zeros(bs.begin(), bs.end());
    BlaschkeProduct btilde(ZeroSequence(std::move(crit_zeros)),
                           static_cast<int>(bs.size()), Complex(sign, 0.0));
    auto g = std::make_shared<NonvanishingFactor>(std::move(as), std::move(bs),
                                                  base_scale / sign);
    return {std::move(btilde), std::move(g)};
}

double min_modulus_off_disks(const BlaschkeProduct& b, double eps,
                             const std::vector<Complex>& grid) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::domain_error("min_modulus_off_disks: eps in (0,1)");
    const auto& zs = b.zero_sequence().zeros();
    double best = std::numeric_limits<double>::infinity();
    for (Complex z : grid) {
        if (std::abs(z) >= 1.0) continue;
        bool outside = true;
        for (int k = 0; k < b.truncation() && outside; ++k)
            if (rho_unchecked(z, zs[static_cast<std::size_t>(k)]) < eps * (1.0 - 1e-9))
                outside = false;
        if (!outside) continue;
        best = std::min(best, std::abs(b.eval(z).value));
    }
    if (!std::isfinite(best))
        throw std::runtime_error("min_modulus_off_disks: no grid point outside the disks");
    return best;
}

double max_on_circle(const BlaschkeProduct& b, int k, int points) {
    if (k < 1 || k > b.truncation()) throw std::out_of_range("max_on_circle: k out of range");
    if (points < 512) points = 512;
    const Complex a = b.zero_sequence().zeros()[static_cast<std::size_t>(k - 1)];
    const double r = (1.0 - std::abs(a)) / 2.0;
    double best = 0.0;
    for (int j = 0; j < points; ++j) {
        const Complex z = a + std::polar(r, kTwoPi * j / points);
        best = std::max(best, std::abs(b.eval(z).value));
    }
    return best;
}

GpvConstants gpv_constants(const ZeroSequence& zeros, int samples) {
    const auto& zs = zeros.zeros();
    const int n = zeros.count();
    if (n >= 2 && separation_constant(zeros) == 0.0)
        throw std::runtime_error("gpv_constants: duplicate zeros (not interpolating)");

    auto disjoint = [&zs, n](double alpha) {
        std::vector<EuclideanDisk> d;
        d.reserve(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k)
            d.push_back(pseudo_disk_euclidean(
                PseudoDisk(DiskPoint(zs[static_cast<std::size_t>(k)]), alpha)));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (std::abs(d[static_cast<std::size_t>(i)].center -
                             d[static_cast<std::size_t>(j)].center) <
                    d[static_cast<std::size_t>(i)].radius +
                        d[static_cast<std::size_t>(j)].radius - 1e-15)
                    return false;
        return true;
    };

    GpvConstants out;
    if (n < 2 || disjoint(0.5)) {
        out.alpha = 0.5;  // search cap
    } else {
        double lo = 0.0, hi = 0.5;
        for (int it = 0; it < 40; ++it) {
            const double mid = 0.5 * (lo + hi);
            (disjoint(mid) ? lo : hi) = mid;
        }
        out.alpha = lo;
    }

    const BlaschkeProduct b(zeros, n);
    constexpr double kGolden = 0.6180339887498949;
    const int half = samples / 2;
    double beta = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n; ++k) {
        const Complex a = zs[static_cast<std::size_t>(k)];
        const double w = 1.0 - std::abs(a);
        for (int i = 0; i < samples; ++i) {
            Complex u;
            if (i < half) {
                u = std::polar(out.alpha * 0.97, kTwoPi * i / half);  // near-rim ring
            } else {
                const int j = i - half;
                u = std::polar(out.alpha * std::sqrt((j + 0.5) / (samples - half)),
                               kTwoPi * kGolden * j);
            }
            const Complex z = mobius_swap(a, u);
            beta = std::min(beta, std::abs(b.deriv(z).value) * w);
        }
    }
    out.beta = beta;
    return out;
}

ZeroSequence read_zeros_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open zero file: " + path);
    std::string line;
    int lineno = 0;
    bool polar_format = false, header_seen = false;
    std::string rule_name;
    double rule_param = 0.0;
    int count = 0;
    std::vector<Complex> zeros;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream ss(line.substr(1));
            std::string key;
            ss >> key;
            if (key == "rule:") {
                ss >> rule_name >> rule_param;
            } else if (key == "count:") {
                ss >> count;
            }
            continue;
        }
        if (!header_seen) {
            header_seen = true;
            if (line == "re,im") {
                polar_format = false;
                continue;
            }
            if (line == "modulus,arg_radians") {
                polar_format = true;
                continue;
            }
            throw FileFormatError("zero file must start with header re,im or modulus,arg_radians",
                                  lineno);
        }
        std::istringstream ss(line);
        double x, y;
        char comma;
        if (!(ss >> x >> comma >> y) || comma != ',')
            throw FileFormatError("bad zero row", lineno);
        const Complex a = polar_format ? std::polar(x, y) : Complex(x, y);
        if (a == Complex(0.0)) throw FileFormatError("zero at the origin is not allowed", lineno);
        if (std::abs(a) >= 1.0) throw FileFormatError("zero outside the open disk", lineno);
        zeros.push_back(a);
    }
    std::shared_ptr<const GenerationRule> rule;
    if (!rule_name.empty()) {
        rule = make_rule(rule_name, rule_param);
        if (zeros.empty()) {
            if (count <= 0) throw FileFormatError("rule given without count or rows", lineno);
            return ZeroSequence::from_rule(rule, count);
        }
    }
    if (zeros.empty()) throw FileFormatError("no zeros in file", lineno == 0 ? 1 : lineno);
    return ZeroSequence(std::move(zeros), std::move(rule));
}

} // namespace disklab
