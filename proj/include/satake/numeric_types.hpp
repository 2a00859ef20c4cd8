#pragma once

// Scalar types shared by every module.
//
// Two exact rational types are used on purpose:
//   Frac     - machine-word rationals for weight coordinates (denominators are
//              tiny: 1, 2 or the rank of an SL quotient).
//   Rational - arbitrary precision rationals for Hecke/Satake coefficients and
//              exact evaluations at q, where numerators grow quickly.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

// boost::rational in Boost 1.74 recurses forever on rational<long> == int
// under C++20 rewritten comparisons; exact non-template overloads win.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(int b, const rational<std::int64_t>& a) { return a == b; }
}  // namespace boost

namespace satake {

using Frac = boost::rational<std::int64_t>;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when a documented precondition of an operation is violated.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a numerical self-check (imaginary residue, invariant) fails.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw NumericalError("int64 overflow in addition");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw NumericalError("int64 overflow in multiplication");
  return r;
}

inline Rational to_rational(const Frac& f) {
  return Rational(BigInt(f.numerator()), BigInt(f.denominator()));
}

inline double to_double(const Frac& f) {
  return static_cast<double>(f.numerator()) / static_cast<double>(f.denominator());
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline bool is_integral(const Frac& f) { return f.denominator() == 1; }

inline std::string to_string(const Frac& f) {
  if (f.denominator() == 1) return std::to_string(f.numerator());
  return std::to_string(f.numerator()) + "/" + std::to_string(f.denominator());
}

/// Parses "3", "-1/2" into a Frac.
inline Frac parse_frac(const std::string& s) {
  auto whole = [](const std::string& t) {
    std::size_t used = 0;
    const long long v = std::stoll(t, &used);
    if (used != t.size()) throw std::invalid_argument("trailing characters");
    return static_cast<std::int64_t>(v);
  };
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Frac(whole(s));
    return Frac(whole(s.substr(0, slash)), whole(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw PreconditionError("cannot parse rational '" + s + "'");
  }
}

/// Exact integer square root of a nonnegative rational, if it exists.
inline bool rational_sqrt(const Rational& r, Rational& out) {
  if (r < 0) return false;
  BigInt n = boost::multiprecision::numerator(r);
  BigInt d = boost::multiprecision::denominator(r);
  BigInt sn = boost::multiprecision::sqrt(n);
  BigInt sd = boost::multiprecision::sqrt(d);
  if (sn * sn != n || sd * sd != d) return false;
  out = Rational(sn, sd);
  return true;
}

/// True when q is p^k for a prime p and k >= 1.
inline bool is_prime_power(std::int64_t q) {
  if (q < 2) return false;
  std::int64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) return true;  // q itself prime
  while (q % p == 0) q /= p;
  return q == 1;
}

}  // namespace satake
