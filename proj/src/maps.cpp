#include "disklab/maps.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace disklab {

std::vector<Evaluation> AnalyticMap::eval_on_circle(double r, int m) const {
    std::vector<Evaluation> out;
    out.reserve(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) out.push_back(eval(std::polar(r, kTwoPi * j / m)));
    return out;
}

TailBound TailBound::none() {
    auto zero = [](double) { return 0.0; };
    return {zero, zero, zero};
}

TailBound TailBound::lacunary(int k_stored) {
    // Terms 2^{-k} rho^{2^k}, k > k_stored.  Summed explicitly until
    // negligible; the leftover is dominated by the geometric series 2^{-k}.
    auto series = [k_stored](double rho) {
        double s = 0.0;
        int k = k_stored + 1;
        for (; k <= k_stored + 80; ++k) {
            const double t = std::ldexp(std::pow(rho, std::ldexp(1.0, k)), -k);
            s += t;
            if (t < 1e-300) break;
        }
        return s + std::ldexp(1.0, -k);  // leftover bound
    };
    auto deriv = [k_stored](double rho) {
        if (rho >= 1.0) return std::numeric_limits<double>::infinity();
        double s = 0.0;
        int k = k_stored + 1;
        for (; k <= k_stored + 80; ++k) {
            const double t = std::pow(rho, std::ldexp(1.0, k) - 1.0);
            s += t;
            if (t < 1e-300) break;
        }
        // remaining exponents increase at least by one each term
        const double last = std::pow(rho, std::ldexp(1.0, k) - 1.0);
        return s + last / (1.0 - rho);
    };
    auto variation = [k_stored](double r) {
        double s = 0.0;
        int k = k_stored + 1;
        for (; k <= k_stored + 80; ++k) {
            const double t = std::ldexp(1.0 - std::pow(r, std::ldexp(1.0, k)), -k);
            s += t;
            if (t < 1e-300) break;
        }
        return s + std::ldexp(1.0, -k);
    };
    return {series, deriv, variation};
}

PowerSeries::PowerSeries(std::vector<Complex> coeffs, TailBound tail)
    : coeffs_(std::move(coeffs)), tail_(std::move(tail)) {
    if (coeffs_.empty()) coeffs_.push_back(0.0);
    // Derivative-of-derivative tails are not tracked; the shifted rule below
    // covers one differentiation, which is all the estimators need.
    deriv_tail_ = TailBound{tail_.deriv, [](double) { return std::numeric_limits<double>::infinity(); },
                            [](double) { return std::numeric_limits<double>::infinity(); }};
}

PowerSeries::PowerSeries(std::vector<Complex> c, TailBound t, TailBound dt)
    : coeffs_(std::move(c)), tail_(std::move(t)), deriv_tail_(std::move(dt)) {
    if (coeffs_.empty()) coeffs_.push_back(0.0);
}

Evaluation PowerSeries::eval(Complex z) const {
    Complex acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return {acc, tail_.series(std::abs(z))};
}

Evaluation PowerSeries::deriv(Complex z) const {
    Complex acc = 0.0;
    for (std::size_t n = coeffs_.size(); n-- > 1;)
        acc = acc * z + static_cast<double>(n) * coeffs_[n];
    return {acc, tail_.deriv(std::abs(z))};
}

std::vector<Evaluation> PowerSeries::eval_on_circle(double r, int m) const {
    std::vector<Complex> acc(static_cast<std::size_t>(m), Complex(0.0));
    const double err = tail_.series(r);
    // Per-coefficient accumulation, skipping zero coefficients; the phase
    // recurrence is resynchronized periodically to hold rounding drift at bay.
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        if (coeffs_[n] == Complex(0.0)) continue;
        const double rn = std::pow(r, static_cast<double>(n));
        const Complex a = coeffs_[n] * rn;
        const double step_angle = kTwoPi * static_cast<double>(n) / m;
        const Complex step = std::polar(1.0, step_angle);
        Complex ph = 1.0;
        for (int j = 0; j < m; ++j) {
            if ((j & 127) == 0) ph = std::polar(1.0, step_angle * j);
            acc[static_cast<std::size_t>(j)] += a * ph;
            ph *= step;
        }
    }
    std::vector<Evaluation> out(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) out[static_cast<std::size_t>(j)] = {acc[static_cast<std::size_t>(j)], err};
    return out;
}

std::optional<double> PowerSeries::radial_variation_tail(double r) const {
    double s = 0.0;
    for (std::size_t n = 1; n < coeffs_.size(); ++n)
        s += std::abs(coeffs_[n]) * (1.0 - std::pow(r, static_cast<double>(n)));
    return s + tail_.variation(r);
}

PowerSeries PowerSeries::derivative() const {
    std::vector<Complex> d;
    if (coeffs_.size() > 1) {
        d.reserve(coeffs_.size() - 1);
        for (std::size_t n = 1; n < coeffs_.size(); ++n)
            d.push_back(static_cast<double>(n) * coeffs_[n]);
    }
    return PowerSeries(std::move(d), deriv_tail_, TailBound{deriv_tail_.deriv, deriv_tail_.deriv, deriv_tail_.deriv});
}

PowerSeries PowerSeries::constant(Complex c) { return PowerSeries({c}); }

PowerSeries PowerSeries::identity() { return monomial(1); }

PowerSeries PowerSeries::monomial(int n, Complex a) {
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1, Complex(0.0));
    c.back() = a;
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::lacunary(int k_stored) {
    std::vector<Complex> c((std::size_t{1} << k_stored) + 1, Complex(0.0));
    for (int k = 0; k <= k_stored; ++k)
        c[std::size_t{1} << k] = std::ldexp(1.0, -k);
    const TailBound tail = TailBound::lacunary(k_stored);
    // Derivative coefficients are z^{2^k - 1}; their own tail rules.
    auto dseries = [k_stored](double rho) { return TailBound::lacunary(k_stored).deriv(rho); };
    auto dderiv = [k_stored](double rho) {
        if (rho >= 1.0) return std::numeric_limits<double>::infinity();
        double s = 0.0;
        int k = k_stored + 1;
        for (; k <= k_stored + 80; ++k) {
            const double e = std::ldexp(1.0, k) - 2.0;
            const double t = (std::ldexp(1.0, k) - 1.0) * std::pow(rho, e);
            s += t;
            if (t < 1e-300) break;
        }
        const double e = std::ldexp(1.0, k);
        return s + 2.0 * e * std::pow(rho, e - 2.0) / ((1.0 - rho) * (1.0 - rho));
    };
    auto dvar = [dseries](double) { return std::numeric_limits<double>::infinity(); };
    TailBound deriv_tail{dseries, dderiv, dvar};
    return PowerSeries(std::move(c), tail, deriv_tail);
}

ScaledArgumentMap::ScaledArgumentMap(MapPtr base, Complex factor)
    : base_(std::move(base)), factor_(factor) {
    if (std::abs(factor) > 1.0 + 1e-15)
        throw std::domain_error("ScaledArgumentMap: |factor| must be <= 1");
}

Evaluation ScaledArgumentMap::eval(Complex z) const { return base_->eval(factor_ * z); }

Evaluation ScaledArgumentMap::deriv(Complex z) const {
    Evaluation d = base_->deriv(factor_ * z);
    return {factor_ * d.value, std::abs(factor_) * d.err};
}

PowerMap::PowerMap(MapPtr base, int n) : base_(std::move(base)), n_(n) {
    if (n < 1) throw std::domain_error("PowerMap: exponent must be >= 1");
}

Evaluation PowerMap::eval(Complex z) const {
    Evaluation b = base_->eval(z);
    const double m = std::abs(b.value) + b.err;
    Complex v = 1.0;
    for (int i = 0; i < n_; ++i) v *= b.value;
    return {v, n_ * b.err * std::pow(m, n_ - 1)};
}

Evaluation PowerMap::deriv(Complex z) const {
    Evaluation b = base_->eval(z);
    Evaluation d = base_->deriv(z);
    Complex v = 1.0;
    for (int i = 0; i < n_ - 1; ++i) v *= b.value;
    const double m = std::abs(b.value) + b.err;
    const double err = n_ * (d.err * std::pow(m, n_ - 1) +
                             (n_ - 1) * b.err * (std::abs(d.value) + d.err) * std::pow(m, std::max(0, n_ - 2)));
    return {static_cast<double>(n_) * v * d.value, err};
}

LinearCombinationMap::LinearCombinationMap(Complex alpha, MapPtr f, Complex beta, MapPtr g)
    : alpha_(alpha), beta_(beta), f_(std::move(f)), g_(std::move(g)) {}

Evaluation LinearCombinationMap::eval(Complex z) const {
    Evaluation a = f_->eval(z), b = g_->eval(z);
    return {alpha_ * a.value + beta_ * b.value, std::abs(alpha_) * a.err + std::abs(beta_) * b.err};
}

Evaluation LinearCombinationMap::deriv(Complex z) const {
    Evaluation a = f_->deriv(z), b = g_->deriv(z);
    return {alpha_ * a.value + beta_ * b.value, std::abs(alpha_) * a.err + std::abs(beta_) * b.err};
}

MapPtr dilate(MapPtr f, double r) {
    if (!(r > 0.0 && r <= 1.0)) throw std::domain_error("dilate: r must be in (0,1]");
    return std::make_shared<ScaledArgumentMap>(std::move(f), Complex(r, 0.0));
}

MapPtr rotate(MapPtr f, double delta) {
    return std::make_shared<ScaledArgumentMap>(std::move(f), std::polar(1.0, delta));
}

NormEstimate h1_norm(const AnalyticMap& f, double r, int m) {
    if (m < 16) throw std::domain_error("h1_norm: need m >= 16 quadrature nodes");
    if (!(r < 1.0)) throw std::domain_error("h1_norm: need r < 1");
    const auto vals = f.eval_on_circle(r, m);
    double s = 0.0, worst = 0.0;
    for (const auto& v : vals) {
        s += std::abs(v.value);
        worst = std::max(worst, v.err);
    }
    return {s / m, worst};
}

double l1_tail(const PowerSeries& f, int K) {
    const int N = f.degree();
    if (K > N) throw std::out_of_range("l1_tail: K exceeds stored coefficient count");
    double s = 0.0;
    const auto& c = f.coefficients();
    for (int n = K + 1; n <= N; ++n) s += std::abs(c[static_cast<std::size_t>(n)]);
    return s + f.tail().l1();
}

double hardy_margin(const PowerSeries& g, double r, int m) {
    const PowerSeries gp = g.derivative();
    double coeff_sum = 0.0;
    const auto& c = g.coefficients();
    for (std::size_t n = 1; n < c.size(); ++n) coeff_sum += std::abs(c[n]);
    coeff_sum += g.tail().l1();
    return kPi * h1_norm(gp, r, m).value - coeff_sum;
}

double sup_norm_estimate(const AnalyticMap& f, double r, int m) {
    if (m < 16) throw std::domain_error("sup_norm_estimate: need m >= 16");
    if (!(r < 1.0)) throw std::domain_error("sup_norm_estimate: need r < 1");
    const auto vals = f.eval_on_circle(r, m);
    double best = 0.0;
    for (const auto& v : vals) best = std::max(best, std::abs(v.value));
    return best;
}

PowerSeries read_coefficients_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open coefficient file: " + path);
    std::vector<Complex> coeffs;
    std::string line;
    int lineno = 0;
    long expected_n = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (lineno == 1 && line.rfind("n,", 0) == 0) continue;  // header
        std::istringstream ss(line);
        std::string tok;
        long n;
        double re, im;
        char c1, c2;
        if (!(ss >> n >> c1 >> re >> c2 >> im) || c1 != ',' || c2 != ',')
            throw FileFormatError("bad coefficient row", lineno);
        if (n != expected_n)
            throw FileFormatError("coefficient index gap or disorder", lineno);
        coeffs.emplace_back(re, im);
        ++expected_n;
    }
    if (coeffs.empty()) throw FileFormatError("no coefficients", lineno == 0 ? 1 : lineno);
    return PowerSeries(std::move(coeffs));
}

void write_coefficients_csv(const std::string& path, const PowerSeries& f) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write coefficient file: " + path);
    out << "n,re,im\n";
    out.precision(17);
    const auto& c = f.coefficients();
    for (std::size_t n = 0; n < c.size(); ++n)
        out << n << ',' << c[n].real() << ',' << c[n].imag() << '\n';
}

} // namespace disklab
