#ifndef KHF_NUMBER_THEORY_HPP
#define KHF_NUMBER_THEORY_HPP

// Exact divisor-sum arithmetic and exact combinatorial counting oracles.
//
// sigma_c(m)      = sum of c-th powers of divisors of m
// sigma_c^odd(m)  = same, restricted to odd divisors
// chi(m)          = 2-adic valuation of m
// omega(m)        = (2^c-2)/(2^c-1) * 2^{chi(m) c} + 1/(2^c-1)   for c >= 1
//                   1 - chi(m)                                    for c = 0
//
// The alternating divisor sum sum_{jk=m} j^c (-1)^{k+1} equals both
// sigma_c^odd(m)*omega(m) and sigma_c(m) - 2 sigma_c(m/2); the three routes
// are computed independently and cross-checked in the tests.
//
// Counting oracles (partitions, partitions into distinct parts, plane
// partitions, Bell numbers) use bounded-part dynamic programming / the Bell
// triangle with arbitrary-precision integers; they serve as ground truth for
// the series pipeline and for the asymptotic estimates.

#include <cstddef>
#include <string>
#include <vector>

#include "khf/numeric.hpp"

namespace khf {

struct DivisorProfile {
  long m = 0;
  int c = 0;
  BigInt sigma;
  BigInt sigma_odd;
  int chi = 0;
  Rational omega;
};

DivisorProfile divisor_profile(long m, int c);

BigInt sigma_power(long m, int c);
BigInt sigma_power_odd(long m, int c);
int two_adic_valuation(long m);
Rational omega_factor(long m, int c);

// Direct enumeration over factor pairs (j,k) with jk = m.
BigInt alternating_divisor_sum(long m, int c);

// Memory guard for the DP oracles (tables of arbitrary-precision integers).
struct CountBudget {
  std::size_t memory_bytes = std::size_t(1) << 30;
};

// kind: partitions | distinct_parts | plane_partitions | bell
BigInt exact_count(const std::string& kind, long n, const CountBudget& budget = {});

// Full tables [0..n]; cheaper than repeated exact_count calls.
std::vector<BigInt> partition_table(long n, const CountBudget& budget = {});
std::vector<BigInt> distinct_partition_table(long n, const CountBudget& budget = {});
std::vector<BigInt> plane_partition_table(long n, const CountBudget& budget = {});
std::vector<BigInt> bell_table(long n, const CountBudget& budget = {});

}  // namespace khf

#endif
