#include "khf/numeric.hpp"

#include <atomic>
#include <cmath>
#include <sstream>

#include "khf/errors.hpp"

namespace khf {

Real Complex::abs() const { return hypot(re, im); }

namespace precision {

namespace {
std::atomic<unsigned> g_bits{256};

unsigned digits_for_bits(unsigned bits) {
  // decimal digits covering the requested mantissa, with guard digits
  return static_cast<unsigned>(bits * 0.30103) + 3;
}
}  // namespace

void set_bits(unsigned bits) {
  if (bits < 24) bits = 24;
  g_bits.store(bits, std::memory_order_relaxed);
  Real::default_precision(digits_for_bits(bits));
}

unsigned bits() { return g_bits.load(std::memory_order_relaxed); }

void apply_thread() {
  Real::default_precision(digits_for_bits(bits()));
}

}  // namespace precision

Real make_real(const Rational& q) { return Real(q); }
Real make_real(const BigInt& z) { return Real(z); }

Real log_rational(const Rational& q) {
  return log_bigint(numerator(q)) - log_bigint(denominator(q));
}

Real log_bigint(const BigInt& z) {
  return log(Real(z));
}

Real log_factorial(unsigned long n) {
  return lgamma(Real(n) + 1);
}

Real real_pi() {
  return boost::math::constants::pi<Real>();
}

Real zeta2() {
  Real pi = real_pi();
  return pi * pi / 6;
}

double to_double(const Real& x) { return x.convert_to<double>(); }

std::string format_real(const Real& x, unsigned significant_digits) {
  if (!is_finite(x)) {
    if (boost::multiprecision::isnan(x)) return "nan";
    return x < 0 ? "-inf" : "inf";
  }
  // boost renders through mpfr_get_str: no locale involvement
  return x.str(significant_digits, std::ios_base::scientific);
}

bool is_finite(const Real& x) {
  return boost::multiprecision::isfinite(x);
}

Real real_infinity() {
  return std::numeric_limits<Real>::infinity();
}

Rational parse_rational(const std::string& text) {
  std::string s = text;
  // trim
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.pop_back();
  if (s.empty()) throw ValidationError("empty rational literal");

  auto slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      BigInt num(s.substr(0, slash));
      BigInt den(s.substr(slash + 1));
      if (den == 0) throw ValidationError("zero denominator in '" + text + "'");
      return Rational(num, den);
    }
    if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
        s.find('E') == std::string::npos) {
      return Rational(BigInt(s));
    }
    // decimal / scientific: mantissa [. fraction] [e exponent]
    bool negative = false;
    std::size_t pos = 0;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    }
    std::string digits;
    long frac_digits = 0;
    long exponent = 0;
    bool seen_dot = false;
    for (; pos < s.size(); ++pos) {
      char ch = s[pos];
      if (ch >= '0' && ch <= '9') {
        digits += ch;
        if (seen_dot) ++frac_digits;
      } else if (ch == '.' && !seen_dot) {
        seen_dot = true;
      } else if (ch == 'e' || ch == 'E') {
        exponent = std::stol(s.substr(pos + 1));
        break;
      } else {
        throw ValidationError("cannot parse rational literal '" + text + "'");
      }
    }
    if (digits.empty())
      throw ValidationError("cannot parse rational literal '" + text + "'");
    BigInt mantissa(digits);
    if (negative) mantissa = -mantissa;
    long net = exponent - frac_digits;
    BigInt scale = 1;
    for (long i = 0; i < (net < 0 ? -net : net); ++i) scale *= 10;
    return net >= 0 ? Rational(mantissa * scale) : Rational(mantissa, scale);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw ValidationError("cannot parse rational literal '" + text + "'");
  }
}

Rational real_to_rational_exact(const Real& x) {
  if (!is_finite(x)) throw ValidationError("cannot convert non-finite value to rational");
  if (x == 0) return Rational(0);
  BigInt z;
  mpfr_exp_t e = mpfr_get_z_2exp(z.backend().data(), x.backend().data());
  Rational r(z);
  if (e >= 0) {
    BigInt p = 1;
    p <<= static_cast<unsigned long>(e);
    return r * Rational(p);
  }
  BigInt p = 1;
  p <<= static_cast<unsigned long>(-e);
  return r / Rational(p);
}

std::string format_rational(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace khf
