#include "khf/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "khf/errors.hpp"
#include "khf/number_theory.hpp"

namespace khf {

namespace {

BigInt factorial(long n) {
  BigInt f;
  mpz_fac_ui(f.backend().data(), static_cast<unsigned long>(n));
  return f;
}

BigInt int_pow(long base, long exp) {
  BigInt r;
  mpz_ui_pow_ui(r.backend().data(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(exp));
  return r;
}

Rational tree_family_coeff(long n, long delta) {
  // n^{n-delta}/n!; n < delta only happens at n = 1 where n^k = 1 anyway
  if (n >= delta) return Rational(int_pow(n, n - delta), factorial(n));
  return Rational(BigInt(1), factorial(n) * int_pow(n, delta - n));
}

Rational require_param(const std::map<std::string, std::string>& params,
                       const std::string& key, const std::string& name) {
  auto it = params.find(key);
  if (it == params.end())
    throw ValidationError("builtin '" + name + "' requires parameter '" + key + "'");
  return parse_rational(it->second);
}

long require_int_param(const std::map<std::string, std::string>& params,
                       const std::string& key, const std::string& name) {
  Rational v = require_param(params, key, name);
  if (denominator(v) != 1)
    throw ValidationError("parameter '" + key + "' of '" + name + "' must be an integer");
  return numerator(v).convert_to<long>();
}

}  // namespace

std::string Provenance::to_string() const {
  std::string s = kind + ":" + name;
  if (!params.empty()) {
    s += "(";
    bool first = true;
    for (const auto& [k, v] : params) {
      if (!first) s += ",";
      s += k + "=" + v;
      first = false;
    }
    s += ")";
  }
  return s;
}

CoefficientSeries CoefficientSeries::from_coeffs(std::vector<Rational> coeffs,
                                                 Real radius, Provenance prov) {
  if (coeffs.size() < 2)
    throw ValidationError("series needs truncation order >= 1");
  bool nonconstant = false;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] < 0)
      throw ValidationError("negative coefficient b_" + std::to_string(i) + " = " +
                            format_rational(coeffs[i]));
    if (i >= 1 && coeffs[i] > 0) nonconstant = true;
  }
  if (!nonconstant)
    throw ValidationError("constant series: every b_n with n >= 1 vanishes");
  if (!(radius > 0))
    throw ValidationError("radius must be positive (or inf)");
  CoefficientSeries s;
  s.coeffs_ = std::move(coeffs);
  s.radius_ = std::move(radius);
  s.prov_ = std::move(prov);
  return s;
}

const Rational& CoefficientSeries::coeff(long n) const {
  if (n < 0 || n > truncation_order())
    throw DomainError("coefficient index " + std::to_string(n) +
                      " outside materialized range [0," +
                      std::to_string(truncation_order()) + "]");
  return coeffs_[static_cast<std::size_t>(n)];
}

Rational CoefficientSeries::coeff_at(long n) const {
  if (n < 0) throw DomainError("negative coefficient index");
  if (n <= truncation_order()) return coeffs_[static_cast<std::size_t>(n)];
  if (!gen_)
    throw DomainError("series " + prov_.to_string() +
                      " cannot be extended beyond order " +
                      std::to_string(truncation_order()));
  return gen_(n);
}

Real CoefficientSeries::coeff_real(long n) const {
  if (real_gen_) return real_gen_(n);
  return make_real(coeff_at(n));
}

long CoefficientSeries::max_nonzero_index() const {
  for (long n = truncation_order(); n >= 0; --n)
    if (coeffs_[static_cast<std::size_t>(n)] != 0) return n;
  return 0;
}

std::vector<long> CoefficientSeries::positive_indices() const {
  std::vector<long> idx;
  for (long n = 1; n <= truncation_order(); ++n)
    if (coeffs_[static_cast<std::size_t>(n)] > 0) idx.push_back(n);
  return idx;
}

CoefficientSeries CoefficientSeries::extended(long new_order) const {
  if (new_order <= truncation_order()) return *this;
  if (!gen_)
    throw DomainError("series " + prov_.to_string() + " is not extendable");
  CoefficientSeries out = *this;
  out.coeffs_.reserve(static_cast<std::size_t>(new_order) + 1);
  for (long n = truncation_order() + 1; n <= new_order; ++n)
    out.coeffs_.push_back(gen_(n));
  return out;
}

CoefficientSeries exp_series(const CoefficientSeries& g) {
  const long order = g.truncation_order();
  if (g.coeff(0) != 0)
    throw ValidationError(
        "exp_series requires b_0 = 0 (a_0 = e^{b_0} is not rational); "
        "use the evaluator's log-domain mode for b_0 > 0");
  for (long k = 0; k <= order; ++k)
    if (g.coeff(k) < 0) throw ValidationError("exp_series input has a negative coefficient");

  std::vector<Rational> a(static_cast<std::size_t>(order) + 1);
  a[0] = 1;
  // n a_n = sum_{k=1..n} k b_k a_{n-k}
  std::vector<long> support;
  for (long k = 1; k <= order; ++k)
    if (g.coeff(k) != 0) support.push_back(k);
  for (long n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (long k : support) {
      if (k > n) break;
      acc += Rational(k) * g.coeff(k) * a[static_cast<std::size_t>(n - k)];
    }
    a[static_cast<std::size_t>(n)] = acc / n;
  }
  Provenance prov{"derived", "exp(" + g.provenance().to_string() + ")", {}};
  return CoefficientSeries::from_coeffs(std::move(a), g.radius(), std::move(prov));
}

CoefficientSeries log_series(const CoefficientSeries& f) {
  const long order = f.truncation_order();
  if (f.coeff(0) == 0) throw ValidationError("log_series requires a_0 > 0");
  if (f.coeff(0) != 1)
    throw ValidationError(
        "log_series requires a_0 = 1 in the exact pipeline (b_0 = log a_0 is "
        "not rational); rescale or use the evaluator");
  std::vector<Rational> b(static_cast<std::size_t>(order) + 1);
  b[0] = 0;
  for (long n = 1; n <= order; ++n) {
    Rational acc = Rational(n) * f.coeff(n);
    for (long k = 1; k < n; ++k)
      acc -= Rational(k) * b[static_cast<std::size_t>(k)] * f.coeff(n - k);
    b[static_cast<std::size_t>(n)] = acc / n;
  }
  Provenance prov{"derived", "log(" + f.provenance().to_string() + ")", {}};
  return CoefficientSeries::from_coeffs(std::move(b), f.radius(), std::move(prov));
}

void OgfSpec::validate() const {
  bool positive = false;
  for (std::size_t j = 0; j < counts.size(); ++j) {
    if (counts[j] < 0)
      throw ValidationError("ogf count c_" + std::to_string(j + 1) + " is negative");
    if (counts[j] > 0) positive = true;
  }
  if (!positive) throw ValidationError("ogf counts are all zero");
}

Rational OgfSpec::count(long j) const {
  if (j < 1) throw DomainError("ogf counts start at j = 1");
  if (static_cast<std::size_t>(j) > counts.size()) return Rational(0);
  return counts[static_cast<std::size_t>(j) - 1];
}

namespace {

Rational multiset_coeff(const OgfSpec& c, long m) {
  Rational acc = 0;
  for (long j = 1; j * j <= m; ++j) {
    if (m % j != 0) continue;
    long q = m / j;
    acc += Rational(j) * c.count(j);
    if (q != j) acc += Rational(q) * c.count(q);
  }
  return acc / m;
}

Rational selection_coeff(const OgfSpec& c, long m) {
  Rational acc = 0;
  for (long j = 1; j * j <= m; ++j) {
    if (m % j != 0) continue;
    long q = m / j;
    // pair (j, k=q) and, when distinct, (q, k=j)
    acc += (q % 2 == 1 ? 1 : -1) * Rational(j) * c.count(j);
    if (q != j) acc += (j % 2 == 1 ? 1 : -1) * Rational(q) * c.count(q);
  }
  return acc / m;
}

}  // namespace

CoefficientSeries multiset_from_ogf(const OgfSpec& c, long order) {
  c.validate();
  std::vector<Rational> b(static_cast<std::size_t>(order) + 1);
  for (long m = 1; m <= order; ++m)
    b[static_cast<std::size_t>(m)] = multiset_coeff(c, m);
  Provenance prov{"derived", "multiset", {}};
  auto s = CoefficientSeries::from_coeffs(std::move(b), Real(1), std::move(prov));
  return s;
}

std::variant<CoefficientSeries, NegativeCoefficient> selection_from_ogf(
    const OgfSpec& c, long order) {
  c.validate();
  std::vector<Rational> b(static_cast<std::size_t>(order) + 1);
  for (long m = 1; m <= order; ++m) {
    Rational v = selection_coeff(c, m);
    if (v < 0) return NegativeCoefficient{m, v};
    b[static_cast<std::size_t>(m)] = v;
  }
  Provenance prov{"derived", "selection", {}};
  return CoefficientSeries::from_coeffs(std::move(b), Real(1), std::move(prov));
}

namespace {

struct BuiltinSpec {
  std::function<Rational(long)> coeff;            // exact b_n, n >= 1
  std::function<Real(long)> real_coeff;           // optional fast path
  Real radius;
  bool exact = true;
  bool polynomial = false;
};

BuiltinSpec make_builtin_spec(const std::string& name,
                              const std::map<std::string, std::string>& params) {
  BuiltinSpec spec;
  spec.radius = Real(1);

  if (name == "sets_of_sets") {
    spec.coeff = [](long n) { return Rational(BigInt(1), factorial(n)); };
    spec.real_coeff = [](long n) { return exp(-log_factorial(n)); };
    spec.radius = real_infinity();
  } else if (name == "pointed_sets") {
    spec.coeff = [](long n) { return Rational(BigInt(n), factorial(n)); };
    spec.real_coeff = [](long n) {
      return exp(log(Real(n)) - log_factorial(n));
    };
    spec.radius = real_infinity();
  } else if (name == "lists") {
    spec.coeff = [](long) { return Rational(1); };
  } else if (name == "lists_gamma") {
    Rational gamma = require_param(params, "gamma", name);
    if (gamma <= 0) throw ValidationError("lists_gamma requires gamma > 0");
    Real gamma_r = make_real(gamma);
    spec.coeff = [gamma](long n) {
      // [z^n] z/(1-z)^gamma = prod_{i=0}^{n-2} (gamma+i) / (n-1)!
      Rational num = 1;
      for (long i = 0; i <= n - 2; ++i) num *= gamma + i;
      return num / Rational(factorial(n - 1));
    };
    spec.real_coeff = [gamma_r](long n) {
      return exp(lgamma(Real(n) - 1 + gamma_r) - lgamma(gamma_r) - log_factorial(n - 1));
    };
  } else if (name == "cycles") {
    spec.coeff = [](long n) { return Rational(1, n); };
  } else if (name == "functions" || name == "rooted_trees" || name == "trees") {
    long delta = name == "functions" ? 0 : (name == "rooted_trees" ? 1 : 2);
    spec.coeff = [delta](long n) { return tree_family_coeff(n, delta); };
    spec.real_coeff = [delta](long n) {
      return exp((Real(n) - delta) * log(Real(n)) - log_factorial(n));
    };
    spec.radius = exp(Real(-1));
  } else if (name == "power_alpha") {
    Rational alpha = require_param(params, "alpha", name);
    if (denominator(alpha) == 1) {
      long a = numerator(alpha).convert_to<long>();
      spec.coeff = [a](long n) {
        return a >= 0 ? Rational(int_pow(n, a)) : Rational(BigInt(1), int_pow(n, -a));
      };
      spec.real_coeff = [a](long n) { return exp(Real(a) * log(Real(n))); };
    } else {
      // n^alpha is irrational; store the correctly rounded value at working
      // precision and mark the series inexact
      Real alpha_r = make_real(alpha);
      spec.coeff = [alpha_r](long n) {
        return real_to_rational_exact(exp(alpha_r * log(Real(n))));
      };
      spec.real_coeff = [alpha_r](long n) { return exp(alpha_r * log(Real(n))); };
      spec.exact = false;
    }
  } else if (name == "partitions") {
    spec.coeff = [](long n) { return Rational(sigma_power(n, 1), BigInt(n)); };
  } else if (name == "distinct_parts") {
    spec.coeff = [](long n) {
      return Rational(sigma_power_odd(n, 1), BigInt(n));
    };
  } else if (name == "plane_partitions") {
    spec.coeff = [](long n) { return Rational(sigma_power(n, 2), BigInt(n)); };
  } else if (name == "colored_partitions") {
    long c = require_int_param(params, "c", name);
    if (c < 0) throw ValidationError("colored_partitions requires c >= 0");
    spec.coeff = [c](long n) {
      return Rational(sigma_power(n, static_cast<int>(c) + 1), BigInt(n));
    };
  } else if (name == "square_partitions") {
    spec.coeff = [](long m) {
      BigInt s = 0;
      for (long j = 1; j * j <= m; ++j)
        if (m % (j * j) == 0) s += BigInt(j) * j;
      return Rational(s, BigInt(m));
    };
  } else if (name == "binary_partitions") {
    // parts 2, 4, 8, ...: b_m = (2^{chi(m)+1} - 2)/m, zero for odd m
    spec.coeff = [](long m) {
      int chi = two_adic_valuation(m);
      BigInt s = (BigInt(1) << (chi + 1)) - 2;
      return Rational(s, BigInt(m));
    };
  } else if (name == "monomial") {
    long k = require_int_param(params, "k", name);
    if (k < 1) throw ValidationError("monomial requires k >= 1");
    spec.coeff = [k](long n) { return Rational(n == k ? 1 : 0); };
    spec.radius = real_infinity();
    spec.polynomial = true;
  } else if (name == "polynomial") {
    auto it = params.find("coeffs");
    if (it == params.end())
      throw ValidationError("polynomial requires parameter 'coeffs' (b0,b1,...)");
    std::vector<Rational> cs;
    std::stringstream ss(it->second);
    std::string tok;
    while (std::getline(ss, tok, ',')) cs.push_back(parse_rational(tok));
    if (cs.empty()) throw ValidationError("polynomial coefficient list is empty");
    spec.coeff = [cs](long n) {
      return static_cast<std::size_t>(n) < cs.size() ? cs[static_cast<std::size_t>(n)]
                                                     : Rational(0);
    };
    spec.radius = real_infinity();
    spec.polynomial = true;
  } else {
    throw UnknownName("unknown builtin series '" + name + "'");
  }
  return spec;
}

}  // namespace

CoefficientSeries builtin(const std::string& name,
                          const std::map<std::string, std::string>& params,
                          long order) {
  if (order < 1) throw ValidationError("builtin truncation order must be >= 1");
  BuiltinSpec spec = make_builtin_spec(name, params);
  std::vector<Rational> coeffs(static_cast<std::size_t>(order) + 1);
  if (name == "polynomial") coeffs[0] = spec.coeff(0);
  for (long n = 1; n <= order; ++n)
    coeffs[static_cast<std::size_t>(n)] = spec.coeff(n);
  Provenance prov{"builtin", name, params};
  auto s = CoefficientSeries::from_coeffs(std::move(coeffs), spec.radius, std::move(prov));
  s.exact_ = spec.exact;
  s.polynomial_ = spec.polynomial;
  s.gen_ = spec.coeff;
  s.real_gen_ = spec.real_coeff;
  return s;
}

std::vector<std::string> builtin_names() {
  return {"sets_of_sets",    "pointed_sets",      "lists",
          "lists_gamma",     "cycles",            "functions",
          "rooted_trees",    "trees",             "power_alpha",
          "partitions",      "distinct_parts",    "plane_partitions",
          "colored_partitions", "square_partitions", "binary_partitions",
          "monomial",        "polynomial"};
}

}  // namespace khf
