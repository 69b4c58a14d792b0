#include "khf/number_theory.hpp"

#include <cmath>

#include "khf/errors.hpp"

namespace khf {

namespace {

BigInt int_pow(long base, int exp) {
  BigInt r = 1;
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

void check_m(long m) {
  if (m < 1) throw DomainError("divisor sums need m >= 1");
}

void check_c(int c) {
  if (c < 0) throw DomainError("divisor power c must be a nonnegative integer");
}

// Rough size estimate for a DP table of n+1 big integers of entry size
// O(sqrt(n)) digits (partition-type growth).
void check_budget(long n, const CountBudget& budget) {
  if (n < 0) throw DomainError("count index must be nonnegative");
  double digits = 4.0 * std::sqrt(static_cast<double>(n) + 1.0) + 32.0;
  double bytes = (static_cast<double>(n) + 1.0) * (digits / 2.0 + 48.0);
  if (bytes > static_cast<double>(budget.memory_bytes))
    throw BudgetExceeded("counting table for n=" + std::to_string(n) +
                         " exceeds the memory budget");
}

}  // namespace

int two_adic_valuation(long m) {
  check_m(m);
  int chi = 0;
  while (m % 2 == 0) {
    m /= 2;
    ++chi;
  }
  return chi;
}

BigInt sigma_power(long m, int c) {
  check_m(m);
  check_c(c);
  BigInt s = 0;
  for (long d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    s += int_pow(d, c);
    long q = m / d;
    if (q != d) s += int_pow(q, c);
  }
  return s;
}

BigInt sigma_power_odd(long m, int c) {
  check_m(m);
  check_c(c);
  BigInt s = 0;
  for (long d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    if (d % 2 == 1) s += int_pow(d, c);
    long q = m / d;
    if (q != d && q % 2 == 1) s += int_pow(q, c);
  }
  return s;
}

Rational omega_factor(long m, int c) {
  check_m(m);
  check_c(c);
  int chi = two_adic_valuation(m);
  if (c == 0) {
    // limit of the closed form as c -> 0
    return Rational(1 - chi);
  }
  BigInt p = int_pow(2, c);
  Rational first(p - 2, p - 1);
  Rational second(1, p - 1);
  BigInt scale = 1;
  for (int i = 0; i < chi; ++i) scale *= p;
  return first * Rational(scale) + second;
}

DivisorProfile divisor_profile(long m, int c) {
  DivisorProfile out;
  out.m = m;
  out.c = c;
  out.sigma = sigma_power(m, c);
  out.sigma_odd = sigma_power_odd(m, c);
  out.chi = two_adic_valuation(m);
  out.omega = omega_factor(m, c);
  return out;
}

BigInt alternating_divisor_sum(long m, int c) {
  check_m(m);
  check_c(c);
  BigInt s = 0;
  for (long j = 1; j * j <= m; ++j) {
    if (m % j != 0) continue;
    long k = m / j;
    // pair (j, k)
    s += (k % 2 == 1) ? int_pow(j, c) : -int_pow(j, c);
    if (k != j) {
      // pair (k, j)
      s += (j % 2 == 1) ? int_pow(k, c) : -int_pow(k, c);
    }
  }
  return s;
}

std::vector<BigInt> partition_table(long n, const CountBudget& budget) {
  check_budget(n, budget);
  std::vector<BigInt> dp(static_cast<std::size_t>(n) + 1);
  dp[0] = 1;
  for (long part = 1; part <= n; ++part)
    for (long v = part; v <= n; ++v) dp[v] += dp[v - part];
  return dp;
}

std::vector<BigInt> distinct_partition_table(long n, const CountBudget& budget) {
  check_budget(n, budget);
  std::vector<BigInt> dp(static_cast<std::size_t>(n) + 1);
  dp[0] = 1;
  // each part usable at most once: descend so a part is not reused
  for (long part = 1; part <= n; ++part)
    for (long v = n; v >= part; --v) dp[v] += dp[v - part];
  return dp;
}

std::vector<BigInt> plane_partition_table(long n, const CountBudget& budget) {
  check_budget(n, budget);
  // generating function prod_j 1/(1-z^j)^j: part j comes in j colors
  std::vector<BigInt> dp(static_cast<std::size_t>(n) + 1);
  dp[0] = 1;
  for (long part = 1; part <= n; ++part)
    for (long color = 0; color < part; ++color)
      for (long v = part; v <= n; ++v) dp[v] += dp[v - part];
  return dp;
}

std::vector<BigInt> bell_table(long n, const CountBudget& budget) {
  check_budget(n, budget);
  std::vector<BigInt> bell(static_cast<std::size_t>(n) + 1);
  bell[0] = 1;
  std::vector<BigInt> row{BigInt(1)};
  for (long i = 1; i <= n; ++i) {
    std::vector<BigInt> next(static_cast<std::size_t>(i) + 1);
    next[0] = row.back();
    for (long j = 1; j <= i; ++j) next[j] = next[j - 1] + row[j - 1];
    bell[i] = next[0];
    row = std::move(next);
  }
  return bell;
}

BigInt exact_count(const std::string& kind, long n, const CountBudget& budget) {
  if (kind == "partitions") return partition_table(n, budget).back();
  if (kind == "distinct_parts") return distinct_partition_table(n, budget).back();
  if (kind == "plane_partitions") return plane_partition_table(n, budget).back();
  if (kind == "bell") return bell_table(n, budget).back();
  throw UnknownName("exact_count: unknown kind '" + kind + "'");
}

}  // namespace khf
