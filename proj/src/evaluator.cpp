#include "khf/evaluator.hpp"

#include "khf/errors.hpp"

namespace khf {

FamilyEvaluator::FamilyEvaluator(CoefficientSeries g, EvaluatorOptions opts)
    : g_(std::move(g)), opts_(opts) {
  eps_tail_ = pow(Real(10), Real(opts_.tail.epsilon_log10));
  b0_real_ = make_real(g_.coeff(0));
  fcoeff_.push_back(Rational(1));  // a_0 of e^{g - b_0}
  flog_.push_back(Real(0));
  fpublished_.store(1, std::memory_order_release);
}

void FamilyEvaluator::check_domain(const Real& t) const {
  if (!(t > 0) || (!entire() && !(t < radius())))
    throw DomainError("t = " + format_real(t, 8) + " outside (0, R)");
}

long FamilyEvaluator::coefficient_limit() const {
  return g_.extendable() ? opts_.max_terms : g_.truncation_order();
}

void FamilyEvaluator::ensure_bcoeffs(long upto) const {
  if (bpublished_.load(std::memory_order_acquire) > upto) return;
  std::lock_guard<std::mutex> lock(bmutex_);
  long have = bpublished_.load(std::memory_order_relaxed);
  for (long n = have; n <= upto; ++n) breal_.push_back(g_.coeff_real(n));
  if (upto + 1 > have) bpublished_.store(upto + 1, std::memory_order_release);
}

const Real& FamilyEvaluator::bcoeff(long n) const {
  ensure_bcoeffs(n);
  return breal_[static_cast<std::size_t>(n)];
}

FamilyEvaluator::Moments FamilyEvaluator::compute_moments(const Real& t) const {
  check_domain(t);
  const long limit = coefficient_limit();
  const int K = opts_.tail.consecutive;
  const long poly_degree = g_.is_polynomial() ? g_.max_nonzero_index() : -1;
  Real s0 = b0_real_, s1 = 0, s2 = 0;
  Real tpow = 1;
  int quiet = 0;
  for (long n = 1; n <= limit; ++n) {
    if (poly_degree >= 0 && n > poly_degree) return Moments{s0, s1, s2, n - 1};
    tpow *= t;
    const Real& b = bcoeff(n);
    if (b != 0 || s2 != 0) {
      Real term0 = b * tpow;
      Real term1 = n * term0;
      Real term2 = n * term1;
      s0 += term0;
      s1 += term1;
      s2 += term2;
      if (s2 > 0 && term2 < eps_tail_ * s2)
        ++quiet;
      else
        quiet = 0;
      if (quiet >= K) return Moments{s0, s1, s2, n};
    }
  }
  throw TruncationInsufficient(
      "tail policy unmet within " + std::to_string(limit) + " terms at t = " +
      format_real(t, 8) + " for " + g_.provenance().to_string());
}

FamilyEvaluator::Moments FamilyEvaluator::moments(const Real& t) const {
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = moments_cache_.find(t);
    if (it != moments_cache_.end()) return it->second;
  }
  Moments m = compute_moments(t);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  moments_cache_.emplace(t, m);
  return m;
}

Real FamilyEvaluator::log_f(const Real& t) const { return moments(t).log_f; }
Real FamilyEvaluator::mean(const Real& t) const { return moments(t).mean; }
Real FamilyEvaluator::variance(const Real& t) const { return moments(t).variance; }

Real FamilyEvaluator::second_derivative(const Real& t) const {
  Moments m = moments(t);
  // sum n(n-1) b_n t^n = t^2 g''(t)
  return (m.variance - m.mean) / (t * t);
}

Real FamilyEvaluator::third_derivative(const Real& t) const {
  check_domain(t);
  const long limit = coefficient_limit();
  const int K = opts_.tail.consecutive;
  const long poly_degree = g_.is_polynomial() ? g_.max_nonzero_index() : -1;
  Real s = 0;
  Real tpow = 1;
  int quiet = 0;
  for (long n = 1; n <= limit; ++n) {
    if (poly_degree >= 0 && n > poly_degree) return s / (t * t * t);
    tpow *= t;
    if (n < 3) continue;
    const Real& b = bcoeff(n);
    if (b == 0 && s == 0) continue;
    Real term = Real(n) * (n - 1) * (n - 2) * b * tpow;
    s += term;
    if (s > 0 && term < eps_tail_ * s)
      ++quiet;
    else
      quiet = 0;
    if (quiet >= K) return s / (t * t * t);
  }
  if (s == 0) return s;  // no n >= 3 coefficient within range
  throw TruncationInsufficient("tail policy unmet for third derivative at t = " +
                               format_real(t, 8));
}

Real FamilyEvaluator::gaussianity_ratio(const Real& t) const {
  Real g2 = second_derivative(t);
  if (!(g2 > 0))
    throw DegenerateSecondDerivative(
        "g''(t) = 0 (degree-one series) has no gaussianity ratio");
  return third_derivative(t) / pow(g2, Real(3) / 2);
}

long FamilyEvaluator::terms_required(const Real& t) const { return moments(t).terms; }

FamilyEvaluator::ThetaSums FamilyEvaluator::theta_sums(const Real& t,
                                                       const Real& theta) const {
  check_domain(t);
  const long terms = moments(t).terms;
  Real cos_step, sin_step;
  Real c = 1, s = 0;  // cos(n theta), sin(n theta) at n = 0
  cos_step = cos(theta);
  sin_step = sin(theta);
  Real dre = 0, dim = 0;
  Real tpow = 1;
  for (long n = 1; n <= terms; ++n) {
    tpow *= t;
    Real cn = c * cos_step - s * sin_step;
    Real sn = s * cos_step + c * sin_step;
    c = cn;
    s = sn;
    const Real& b = bcoeff(n);
    if (b == 0) continue;
    Real bt = b * tpow;
    dre += bt * (cn - 1);
    dim += bt * sn;
  }
  return ThetaSums{dre, dim};
}

Real FamilyEvaluator::re_delta(const Real& t, const Real& theta) const {
  return theta_sums(t, theta).delta_re;
}

Complex FamilyEvaluator::char_fn(const Real& t, const Real& theta) const {
  ThetaSums d = theta_sums(t, theta);
  Real mag = exp(d.delta_re);
  return Complex{mag * cos(d.delta_im), mag * sin(d.delta_im)};
}

Complex FamilyEvaluator::normalized_char(const Real& t, const Real& theta) const {
  Moments m = moments(t);
  Real sigma = sqrt(m.variance);
  ThetaSums d = theta_sums(t, theta / sigma);
  Real phase = d.delta_im - theta * m.mean / sigma;
  Real mag = exp(d.delta_re);
  return Complex{mag * cos(phase), mag * sin(phase)};
}

void FamilyEvaluator::ensure_fcoeffs(long upto) const {
  if (fpublished_.load(std::memory_order_acquire) > upto) return;
  std::lock_guard<std::mutex> lock(fmutex_);
  long have = fpublished_.load(std::memory_order_relaxed);
  if (have > upto) return;
  long limit = coefficient_limit();
  if (upto > limit)
    throw TruncationInsufficient(
        "coefficient range of f exhausted: need a_" + std::to_string(upto) +
        " but only " + std::to_string(limit) + " coefficients of g are available");
  // cache exact b_k (with b_0 dropped) once; recurrence below is quadratic
  std::vector<Rational> b(static_cast<std::size_t>(upto) + 1);
  for (long k = 1; k <= upto; ++k) b[static_cast<std::size_t>(k)] = g_.coeff_at(k);
  std::vector<long> support;
  for (long k = 1; k <= upto; ++k)
    if (b[static_cast<std::size_t>(k)] != 0) support.push_back(k);
  fcoeff_.resize(static_cast<std::size_t>(upto) + 1);
  for (long n = have; n <= upto; ++n) {
    Rational acc = 0;
    for (long k : support) {
      if (k > n) break;
      acc += Rational(k) * b[static_cast<std::size_t>(k)] *
             fcoeff_[static_cast<std::size_t>(n - k)];
    }
    fcoeff_[static_cast<std::size_t>(n)] = acc / n;
    const Rational& a = fcoeff_[static_cast<std::size_t>(n)];
    flog_.push_back(a == 0 ? -real_infinity() : log_rational(a));
  }
  fpublished_.store(upto + 1, std::memory_order_release);
}

Rational FamilyEvaluator::coefficient(long n) const {
  if (n < 0) throw DomainError("negative coefficient index");
  if (g_.coeff(0) != 0)
    throw ValidationError(
        "exact coefficients of f = e^g need b_0 = 0; use log_coefficient");
  ensure_fcoeffs(n);
  return fcoeff_[static_cast<std::size_t>(n)];
}

Real FamilyEvaluator::log_coefficient(long n) const {
  if (n < 0) throw DomainError("negative coefficient index");
  ensure_fcoeffs(n);
  return flog_[static_cast<std::size_t>(n)] + b0_real_;
}

Real FamilyEvaluator::log_mass(const Real& t, long n) const {
  Moments m = moments(t);
  if (n < 0) return -real_infinity();
  return log_coefficient(n) + n * log(t) - m.log_f;
}

Real FamilyEvaluator::mass(const Real& t, long n) const {
  Real lm = log_mass(t, n);
  if (!is_finite(lm)) return Real(0);
  return exp(lm);
}

}  // namespace khf
