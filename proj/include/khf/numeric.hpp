#ifndef KHF_NUMERIC_HPP
#define KHF_NUMERIC_HPP

// Arbitrary-precision number types used across the library.
//
// All coefficient pipelines run on exact rationals (GMP); evaluation of
// f(t), m(t), sigma^2(t) etc. runs on MPFR floats at a configurable working
// precision (default 256 bits). Magnitude-prone quantities are carried as
// logarithms; MPFR's wide exponent range absorbs the rest.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace khf {

using Real = boost::multiprecision::mpfr_float;
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Minimal complex value over Real; the library only ever needs
// modulus/argument style arithmetic on characteristic-function values.
struct Complex {
  Real re;
  Real im;
  Real abs() const;
};

namespace precision {

// Sets the working precision for the calling thread and records it as the
// process-wide default picked up by worker threads (see apply_thread).
void set_bits(unsigned bits);
unsigned bits();

// boost's mpfr default precision is thread-local, so OpenMP worker threads
// would otherwise start at the library default; every parallel region entry
// calls this.
void apply_thread();

}  // namespace precision

Real make_real(const Rational& q);
Real make_real(const BigInt& z);

// log of a positive rational, computed as log(num) - log(den) so that huge
// numerators/denominators never need to fit a float mantissa first.
Real log_rational(const Rational& q);
Real log_bigint(const BigInt& z);

// log(n!)
Real log_factorial(unsigned long n);

Real real_pi();
// zeta(2) = pi^2/6 at working precision
Real zeta2();

double to_double(const Real& x);

// Deterministic, locale-free decimal rendering (used by the CLI and report
// writers; byte-identical across runs and thread counts).
std::string format_real(const Real& x, unsigned significant_digits = 17);

bool is_finite(const Real& x);
Real real_infinity();

// Parses "p/q", integers, and decimal/scientific strings ("0.5", "2e-3")
// into an exact rational. Throws ValidationError on anything else.
Rational parse_rational(const std::string& text);

// Exact conversion of a finite MPFR value (a dyadic rational) to Rational.
Rational real_to_rational_exact(const Real& x);

// Renders a rational as "p" or "p/q".
std::string format_rational(const Rational& q);

}  // namespace khf

#endif
