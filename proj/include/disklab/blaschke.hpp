#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "disklab/maps.hpp"

namespace disklab {

/// Closed-form zero generator with certified tail sums.  k is 1-based.
class GenerationRule {
  public:
    virtual ~GenerationRule() = default;
    virtual std::string name() const = 0;
    virtual Complex zero(int k) const = 0;
    /// sum_{k>N} (1 - |a_k|), exact or a certified upper bound.
    virtual double tail_one_minus(int N) const = 0;
    /// Certified upper bound for sum_{k>N} (1-|a_k|)/|a_k - e^{i theta}|,
    /// or nullopt where the sum diverges / cannot be certified.
    virtual std::optional<double> frostman_tail(double theta, int N) const = 0;
};

/// a_k = 1 - q^k, 0 < q < 1.
std::shared_ptr<const GenerationRule> geometric_rule(double q);
/// a_k = (1 - 4^{-k}) e^{i 2^{-k}}.
std::shared_ptr<const GenerationRule> frostman4_rule();
/// a_k = 1 - 1/(k+1)^2 (indexing starts past the origin).
std::shared_ptr<const GenerationRule> one_over_k_sq_rule();
/// Lookup by the CLI rule-name contract; throws on unknown names.
std::shared_ptr<const GenerationRule> make_rule(const std::string& name, double param);

/// Finite list of nonzero zeros inside the disk, optionally backed by a
/// generation rule supplying the analytic tail.
class ZeroSequence {
  public:
    explicit ZeroSequence(std::vector<Complex> zeros,
                          std::shared_ptr<const GenerationRule> rule = nullptr);

    static ZeroSequence from_rule(std::shared_ptr<const GenerationRule> rule, int count);

    const std::vector<Complex>& zeros() const { return zeros_; }
    int count() const { return static_cast<int>(zeros_.size()); }
    const GenerationRule* rule() const { return rule_.get(); }
    std::shared_ptr<const GenerationRule> rule_ptr() const { return rule_; }

    /// sum_{k>N} (1-|a_k|); zero without a rule.
    double tail_one_minus(int N) const;

  private:
    std::vector<Complex> zeros_;
    std::shared_ptr<const GenerationRule> rule_;
};

/// Finite Blaschke product over the first `truncation` zeros, with the
/// classical normalization (|a|/a)(a-z)/(1-conj(a)z) per factor and an
/// optional extra unimodular phase.
class BlaschkeProduct : public AnalyticMap {
  public:
    BlaschkeProduct(ZeroSequence zeros, int truncation, Complex phase = 1.0);

    Evaluation eval(Complex z) const override;
    Evaluation deriv(Complex z) const override;

    /// Product with the k-th stored zero removed (k 1-based).
    Evaluation eval_subproduct(int k, Complex z) const;

    const ZeroSequence& zero_sequence() const { return zeros_; }
    int truncation() const { return n_; }
    Complex phase() const { return phase_; }
    bool is_finite() const { return zeros_.rule() == nullptr; }

  private:
    ZeroSequence zeros_;
    int n_;
    Complex phase_;
    double tail_;  // sum_{k>n} (1-|a_k|)
};

struct FrostmanSup {
    double sup = 0.0;
    double argmax_theta = 0.0;
    int divergent_angles = 0;  // grid angles where no certified bound exists
};

/// Grid maximum of the Frostman sum, tail included via the rule.
FrostmanSup frostman_sup(const ZeroSequence& zeros, const std::vector<double>& thetas);

/// min_{j != k} rho(a_j, a_k) over the stored truncation.
double separation_constant(const ZeroSequence& zeros);

/// min_k |B_k(a_k)| via pseudo-hyperbolic distance products, rule-extended and
/// with a certified tail multiplier; 1 for a single zero, 0 for duplicates.
double interp_delta(const ZeroSequence& zeros);

struct CriticalPointSet {
    std::vector<Complex> points;
    std::vector<double> residuals;  // |B'(b_k)|
};

/// All n-1 zeros of B' in the disk for a finite product of degree n >= 2.
/// General products go through the companion matrix of the numerator of B';
/// products with real zeros in (0,1) use sign-change bracketing on the
/// interlacing intervals, which stays accurate where the polynomial
/// coefficients are hopelessly ill-conditioned.  Throws if the in-disk root
/// count is not n-1.
CriticalPointSet critical_points(const BlaschkeProduct& b);

/// True iff all critical points are real, inside (0,1), with exactly one in
/// each gap between consecutive zeros.  Zeros must be real and increasing.
bool interlace_check(const std::vector<double>& zeros, const CriticalPointSet& crit);

struct DerivativeFactorization {
    BlaschkeProduct btilde;   // zeros at the critical points, sign normalized
    MapPtr g_factor;          // nonvanishing G with B' = Btilde * G, G > 0 on (0,1)
};

/// B' = Btilde * G for a finite product with real zeros in (0,1).
DerivativeFactorization derivative_factorization(const BlaschkeProduct& b);

/// min |B| over the grid points outside every pseudo-disk Delta(a_k, eps).
double min_modulus_off_disks(const BlaschkeProduct& b, double eps,
                             const std::vector<Complex>& grid);

/// max |B| on the circle centered at the k-th zero with radius (1-|a_k|)/2.
double max_on_circle(const BlaschkeProduct& b, int k, int points = 512);

struct GpvConstants {
    double alpha = 0.0;
    double beta = 0.0;
};

/// alpha: largest radius (cap 0.5, 40 bisection steps) with pairwise disjoint
/// pseudo-disks; beta: sampled min of |B'(z)|(1-|a_k|) over each disk.
GpvConstants gpv_constants(const ZeroSequence& zeros, int samples = 64);

/// Zero CSV: header `re,im` or `modulus,arg_radians`; optional directives
/// `# rule: <name> [param]` and `# count: <n>` generate from a rule.
ZeroSequence read_zeros_csv(const std::string& path);

} // namespace disklab
