#ifndef KHF_ADMISSIBILITY_HPP
#define KHF_ADMISSIBILITY_HPP

// Hayman-class membership criteria for f = e^g with nonnegative g, plus the
// arc/central-limit diagnostics that define the class.
//
// Quasiexponential criterion (entire g):
//     B beta^n/n! <= b_n <= L lambda^n/n!,  2 lambda < 3 beta
//     cut h(t) = e^{-alpha t},  alpha in (lambda/3, beta/2)
// Quasigeometric criterion (finite R):
//     B n^beta/R^n <= b_n <= L n^lambda/R^n,  beta, lambda > -1,
//     2 lambda < 3 beta + 1
//     cut h(t) = (1 - t/R)^alpha,  alpha in (lambda/3 + 4/3, beta/2 + 3/2)
// Polynomial g: e^g is in the class iff gcd{n >= 1 : b_n > 0} = 1.
//
// Exponents are fitted from a coefficient window as lower/upper envelope
// slopes of the transformed sequence (log(b_n n!) against n, respectively
// log(b_n R^n) against log n): a least-squares trend line, block extrema of
// its residuals, then a line through those envelope points. Stability is
// the drift of the exponent between the full window and its upper half;
// oscillating divisor sums (the sigma_1(n)/n family never settles closer
// than ~1.6% at desk windows) fix the tolerance at 3%.
//
// "fails_hypothesis" vs "inapplicable" at the beta = -1 boundary: a smooth
// envelope (lambda-beta gap <= 0.25) measures the true exponent, so the
// hypothesis definitively fails; a large gap means the coefficients straddle
// the boundary and the criterion cannot decide.

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "khf/evaluator.hpp"
#include "khf/numeric.hpp"
#include "khf/series.hpp"
#include "khf/trend.hpp"

namespace khf {

enum class CriterionKind { quasiexponential, quasigeometric, polynomial_gcd, inapplicable };
enum class Verdict { hayman, fails_hypothesis, inapplicable };

std::string to_string(CriterionKind k);
std::string to_string(Verdict v);

struct Window {
  long lo = 0;
  long hi = 0;
};

struct FitOptions {
  int blocks = 16;
  double stability_tolerance = 0.03;  // |exponent drift| / max(1, |exponent|)
};

struct GrowthFit {
  Window window;
  double beta_hat = 0;
  double lambda_hat = 0;
  double B_hat = 0;
  double L_hat = 0;
  double residual = 0;      // max |envelope point - fitted envelope line|
  double beta_drift = 0;    // exponent change, full window vs upper half
  double lambda_drift = 0;
  bool stable = false;
};

struct Inapplicability {
  std::string reason;
};

using FitResult = std::variant<GrowthFit, Inapplicability>;

FitResult fit_quasiexponential(const CoefficientSeries& g, Window window,
                               const FitOptions& = {});
FitResult fit_quasigeometric(const CoefficientSeries& g, const Real& radius,
                             Window window, const FitOptions& = {});

// gcd test for polynomial g (Hayman's Theorem, item (b)).
Verdict polynomial_gcd_check(const CoefficientSeries& g);
long polynomial_support_gcd(const CoefficientSeries& g);

// omega_g(t) = (1/6)(b_1 t + 8 b_2 t^2 + (9/2) t^3 g'''(t))
Real omega_g(const FamilyEvaluator& ev, const Real& t);

// Admissible open interval for the cut exponent alpha under the fit.
std::pair<double, double> cut_exponent_window(const GrowthFit& fit, CriterionKind kind);

// Major-arc condition of the criterion: omega_g(t) h(t)^3 over the grid.
// alpha is validated against the fit's window (CutOutsideWindow otherwise).
TrendReport cut_check(const FamilyEvaluator& ev, const GrowthFit& fit,
                      CriterionKind kind, double alpha,
                      const std::vector<Real>& t_grid, const TrendRule& rule = {});

// Cut value h(t): e^{-alpha t} for entire g, (1 - t/R)^alpha otherwise.
Real cut_value(const FamilyEvaluator& ev, CriterionKind kind, double alpha,
               const Real& t);

struct ArcGridOptions {
  int coarse_points = 512;
  int refine_rounds = 2;
  int refine_points = 24;
};

struct ArcValue {
  Real value;
  Real theta_argmax;
};

// sigma(t) * sup_{h <= |theta| <= pi} |f(t e^{i theta})| / f(t), in log domain
ArcValue minor_arc_diagnostic(const FamilyEvaluator& ev, const Real& t,
                              const Real& h_value, const ArcGridOptions& = {});

// sup_{|theta| <= h sigma} |E(e^{i theta X_breve}) e^{theta^2/2} - 1|
ArcValue major_arc_diagnostic(const FamilyEvaluator& ev, const Real& t,
                              const Real& h_value, const ArcGridOptions& = {});

// sup_n |P(X_t = n) sqrt(2 pi) sigma - e^{-(n-m)^2/(2 sigma^2)}| over
// n in [0, m + 12 sigma], plus the n = -1 boundary term e^{-(1+m)^2/(2s^2)}.
Real central_limit_sup(const FamilyEvaluator& ev, const Real& t);

// Max over the (t, theta) grid of Re g(te^{i theta}) - g(t) minus the lemma
// right-hand side; a positive value is a reported outcome (constants too
// tight), not an error.
struct LemmaBoundParams {
  double B = 1;
  double beta = 1;
};
Real lemma_bound_check(const FamilyEvaluator& ev, const std::string& kind,
                       const LemmaBoundParams& params,
                       const std::vector<Real>& t_grid, int theta_points = 64);

struct ReportOptions {
  long order = 1024;                  // truncation N used to build the fit window
  Window window;                      // defaults to [N/4, N]
  std::optional<double> alpha;        // cut exponent override
  int approach_k_lo = 4;              // grid t = R(1-2^-k) or t = 2^k
  int approach_k_hi = 9;
  bool with_arcs = true;
  bool with_clt = false;
  long clt_coefficient_budget = 8000;
  ArcGridOptions arc;
  FitOptions fit;
  TrendRule trend;
  EvaluatorOptions evaluator;
};

struct AdmissibilityReport {
  CriterionKind criterion = CriterionKind::inapplicable;
  Verdict verdict = Verdict::inapplicable;
  std::optional<GrowthFit> fit;
  std::string inapplicable_reason;
  double margin = 0;  // 3 beta - 2 lambda, resp. 3 beta + 1 - 2 lambda
  std::pair<double, double> cut_window{0, 0};
  std::optional<double> alpha_used;
  std::optional<long> gcd;
  std::optional<TrendReport> variance_trend;
  std::optional<TrendReport> cut_trend;
  std::optional<TrendReport> minor_arc_trend;
  std::optional<TrendReport> major_arc_trend;
  std::optional<TrendReport> clt_trend;
  std::vector<std::string> notes;
};

AdmissibilityReport full_report(const CoefficientSeries& g, const ReportOptions& = {});

// Default 6-point approach grid toward R.
std::vector<Real> approach_grid(const FamilyEvaluator& ev, int k_lo, int k_hi);

}  // namespace khf

#endif
