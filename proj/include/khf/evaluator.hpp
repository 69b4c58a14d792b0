#ifndef KHF_EVALUATOR_HPP
#define KHF_EVALUATOR_HPP

// Log-domain, high-precision evaluation of the Khinchin family of f = e^g:
//
//   log f(t) = g(t)
//   m(t)     = t g'(t)  = sum n b_n t^n
//   sigma^2  = t g'(t) + t^2 g''(t) = sum n^2 b_n t^n
//   P(X_t = n) = a_n t^n / f(t)
//   E e^{i theta X_t} = f(t e^{i theta}) / f(t)
//                     = exp(sum b_n t^n (cos n theta - 1) + i sum b_n t^n sin n theta)
//
// Truncation is adaptive: a sum at t keeps extending the coefficient range
// until `consecutive` successive terms each contribute less than eps_tail of
// the current partial sum of sum n^2 b_n t^n (the most tail-sensitive of the
// three base sums); third-derivative sums apply the same rule to their own
// terms. Series sums run in MPFR directly (its exponent range absorbs t^n
// for entire series); only f(t), t^n and masses are carried as logarithms.
//
// Thread safety: evaluation is const; the internal coefficient caches are
// grow-only with atomic publication, so concurrent evaluations at different
// t are safe and deterministic.

#include <atomic>
#include <deque>
#include <map>
#include <mutex>
#include <vector>

#include "khf/numeric.hpp"
#include "khf/series.hpp"

namespace khf {

struct TailPolicy {
  double epsilon_log10 = -30;  // eps_tail = 10^epsilon_log10
  int consecutive = 10;        // K
};

struct EvaluatorOptions {
  TailPolicy tail;
  long max_terms = 2'000'000;  // hard ceiling on the truncation length
};

class FamilyEvaluator {
 public:
  explicit FamilyEvaluator(CoefficientSeries g, EvaluatorOptions opts = {});

  const CoefficientSeries& series() const { return g_; }
  const Real& radius() const { return g_.radius(); }
  bool entire() const { return g_.entire(); }
  const EvaluatorOptions& options() const { return opts_; }

  struct Moments {
    Real log_f;     // g(t)
    Real mean;      // m(t)
    Real variance;  // sigma^2(t)
    long terms;     // truncation length used
  };
  Moments moments(const Real& t) const;

  Real log_f(const Real& t) const;
  Real mean(const Real& t) const;
  Real variance(const Real& t) const;

  // g''(t) and g'''(t) via term-wise series (never finite differences)
  Real second_derivative(const Real& t) const;
  Real third_derivative(const Real& t) const;

  // g'''(t) / g''(t)^{3/2}; for nonnegative coefficients the fulcrum sup
  // over the vertical line is attained at phi = 0, so this single value is
  // the gaussianity criterion quantity.
  Real gaussianity_ratio(const Real& t) const;

  // Re g(t e^{i theta}) - g(t)  (<= 0) and the imaginary counterpart
  struct ThetaSums {
    Real delta_re;
    Real delta_im;
  };
  ThetaSums theta_sums(const Real& t, const Real& theta) const;
  Real re_delta(const Real& t, const Real& theta) const;

  Complex char_fn(const Real& t, const Real& theta) const;
  Complex normalized_char(const Real& t, const Real& theta) const;

  // mass function of X_t; requires coefficients of f = e^g up to n
  Real mass(const Real& t, long n) const;
  Real log_mass(const Real& t, long n) const;

  // exact a_n and log a_n of f = e^g (b_0 split off in log domain)
  Rational coefficient(long n) const;
  Real log_coefficient(long n) const;

  // truncation length the tail policy selects at t (weight-2 rule)
  long terms_required(const Real& t) const;

 private:
  void check_domain(const Real& t) const;
  long coefficient_limit() const;
  const Real& bcoeff(long n) const;
  void ensure_bcoeffs(long upto) const;
  void ensure_fcoeffs(long upto) const;
  Moments compute_moments(const Real& t) const;

  CoefficientSeries g_;
  EvaluatorOptions opts_;
  Real eps_tail_;
  Real b0_real_;

  mutable std::deque<Real> breal_;
  mutable std::atomic<long> bpublished_{0};
  mutable std::mutex bmutex_;

  mutable std::vector<Rational> fcoeff_;
  mutable std::deque<Real> flog_;
  mutable std::atomic<long> fpublished_{0};
  mutable std::mutex fmutex_;

  mutable std::map<Real, Moments> moments_cache_;
  mutable std::mutex cache_mutex_;
};

}  // namespace khf

#endif
