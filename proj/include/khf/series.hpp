#ifndef KHF_SERIES_HPP
#define KHF_SERIES_HPP

// Truncated power series with exact nonnegative rational coefficients, plus
// the builtin catalog of set-construction generating functions.
//
// A series holds b_0..b_N materialized exactly; catalog builtins also carry
// generators so callers (notably the evaluator) can extend the coefficient
// range lazily without rebuilding. exp/log run the standard recurrence
//     n a_n = sum_{k=1}^{n} k b_k a_{n-k},   a_0 = 1   (b_0 = 0)
// entirely on rationals, so oracle comparisons are bit-exact.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "khf/numeric.hpp"

namespace khf {

struct Provenance {
  std::string kind;  // "builtin" | "file" | "derived"
  std::string name;
  std::map<std::string, std::string> params;
  std::string to_string() const;
};

class CoefficientSeries {
 public:
  // Coefficients b_0..b_N. Throws ValidationError on negative coefficients,
  // constant series, or nonpositive radius.
  static CoefficientSeries from_coeffs(std::vector<Rational> coeffs, Real radius,
                                       Provenance prov);

  long truncation_order() const { return static_cast<long>(coeffs_.size()) - 1; }
  const Rational& coeff(long n) const;

  // Coefficient at any index; uses the generator beyond the materialized
  // range. Throws DomainError when the series cannot be extended.
  Rational coeff_at(long n) const;
  bool extendable() const { return static_cast<bool>(gen_); }

  // High-precision value of b_n at the current working precision. Builtins
  // with factorial-type coefficients provide a fast path that avoids
  // materializing huge exact rationals.
  Real coeff_real(long n) const;

  const Real& radius() const { return radius_; }
  bool entire() const { return !is_finite(radius_); }
  bool exact() const { return exact_; }
  bool is_polynomial() const { return polynomial_; }
  const Provenance& provenance() const { return prov_; }

  // Largest n <= N with b_n > 0 (0 if none; validation excludes that case).
  long max_nonzero_index() const;
  // Indices n >= 1 with b_n > 0 within the truncation.
  std::vector<long> positive_indices() const;

  // Same series with a larger materialized range (builtins only).
  CoefficientSeries extended(long new_order) const;

 private:
  friend CoefficientSeries builtin(const std::string&,
                                   const std::map<std::string, std::string>&, long);
  std::vector<Rational> coeffs_;
  Real radius_;
  bool exact_ = true;
  bool polynomial_ = false;
  Provenance prov_;
  std::function<Rational(long)> gen_;
  std::function<Real(long)> real_gen_;
};

// f = e^g up to the truncation order of g. Requires b_0 = 0 (otherwise a_0
// = e^{b_0} is transcendental; the evaluator handles general b_0 in log
// domain). Rejects negative input coefficients.
CoefficientSeries exp_series(const CoefficientSeries& g);

// Inverse of exp_series. Requires a_0 = 1 exactly for the same reason
// exp_series requires b_0 = 0. exp_series(log_series(f)) == f up to order N.
CoefficientSeries log_series(const CoefficientSeries& f);

// Builtin catalog. Parameters are passed as strings and parsed per builtin:
//   sets_of_sets               b_n = 1/n!                      R = inf
//   pointed_sets               b_n = n/n!                      R = inf
//   lists                      b_n = 1                         R = 1
//   lists_gamma    gamma>0     b_n = [z^n] z/(1-z)^gamma       R = 1
//   cycles                     b_n = 1/n                       R = 1
//   functions                  b_n = n^n/n!                    R = 1/e
//   rooted_trees               b_n = n^{n-1}/n!                R = 1/e
//   trees                      b_n = n^{n-2}/n!                R = 1/e
//   power_alpha    alpha       b_n = n^alpha                   R = 1
//   partitions                 b_n = sigma_1(n)/n              R = 1
//   distinct_parts             b_n = sigma_1^odd(n)/n          R = 1
//   plane_partitions           b_n = sigma_2(n)/n              R = 1
//   colored_partitions  c>=0   b_n = sigma_{c+1}(n)/n          R = 1
//   square_partitions          b_m = (1/m) sum_{j^2|m} j^2     R = 1
//   binary_partitions          parts 2,4,8,...                 R = 1
//   monomial       k>=1        g = z^k                         R = inf
//   polynomial     coeffs      g = given polynomial            R = inf
CoefficientSeries builtin(const std::string& name,
                          const std::map<std::string, std::string>& params, long order);
std::vector<std::string> builtin_names();

// Counts c_1..c_L of an unlabeled class (no object of size 0).
struct OgfSpec {
  std::vector<Rational> counts;
  void validate() const;
  Rational count(long j) const;  // 0 beyond L
};

// Multiset construction: b_m = (1/m) sum_{j|m} j c_j.
CoefficientSeries multiset_from_ogf(const OgfSpec& c, long order);

// Selection construction: b_m = (1/m) sum_{jk=m} j c_j (-1)^{k+1}. A
// negative coefficient is a normal outcome (the class leaves this
// artifact's scope), reported with the first offending index.
struct NegativeCoefficient {
  long index = 0;
  Rational value;
};
std::variant<CoefficientSeries, NegativeCoefficient> selection_from_ogf(
    const OgfSpec& c, long order);

}  // namespace khf

#endif
