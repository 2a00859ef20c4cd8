#pragma once

// Coefficient rings: Laurent polynomials in q^{1/2} and polynomials in t.

#include "satake/numeric_types.hpp"

#include <cmath>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace satake {

/// Element of Q[q^{1/2}, q^{-1/2}].
///
/// Keys are twice the exponent, so q^{-3/2} is stored under -3.
class HalfPowerLaurent {
 public:
  using Terms = std::map<int, Rational>;

  HalfPowerLaurent() = default;
  HalfPowerLaurent(std::int64_t c) {  // NOLINT: implicit constant
    if (c != 0) t_[0] = Rational(c);
  }
  explicit HalfPowerLaurent(const Rational& c) {
    if (c != 0) t_[0] = c;
  }
  /// c * q^{twice_exp / 2}
  static HalfPowerLaurent monomial(int twice_exp, const Rational& c = Rational(1)) {
    HalfPowerLaurent r;
    if (c != 0) r.t_[twice_exp] = c;
    return r;
  }
  /// c * q^{e} for a half-integral Frac exponent.
  static HalfPowerLaurent monomial(const Frac& e, const Rational& c = Rational(1)) {
    Frac two_e = e * Frac(2);
    if (!is_integral(two_e)) throw PreconditionError("q-exponent is not a half-integer: " + satake::to_string(e));
    return monomial(static_cast<int>(two_e.numerator()), c);
  }
  /// q
  static HalfPowerLaurent q() { return monomial(2); }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }

  Rational coeff(int twice_exp) const {
    auto it = t_.find(twice_exp);
    return it == t_.end() ? Rational(0) : it->second;
  }
  Rational constant_term() const { return coeff(0); }

  /// Largest exponent times two; only valid for nonzero values.
  int max_twice_exp() const { return t_.rbegin()->first; }
  int min_twice_exp() const { return t_.begin()->first; }

  bool is_monomial() const { return t_.size() == 1; }
  bool has_odd_exponents() const {
    for (const auto& [k, c] : t_)
      if (k % 2 != 0) return true;
    return false;
  }

  HalfPowerLaurent& operator+=(const HalfPowerLaurent& o) {
    for (const auto& [k, c] : o.t_) add_term(k, c);
    return *this;
  }
  HalfPowerLaurent& operator-=(const HalfPowerLaurent& o) {
    for (const auto& [k, c] : o.t_) add_term(k, -c);
    return *this;
  }
  HalfPowerLaurent& operator*=(const Rational& s) {
    if (s == 0) {
      t_.clear();
      return *this;
    }
    for (auto& [k, c] : t_) c *= s;
    return *this;
  }
  friend HalfPowerLaurent operator+(HalfPowerLaurent a, const HalfPowerLaurent& b) { return a += b; }
  friend HalfPowerLaurent operator-(HalfPowerLaurent a, const HalfPowerLaurent& b) { return a -= b; }
  friend HalfPowerLaurent operator*(const HalfPowerLaurent& a, const HalfPowerLaurent& b) {
    HalfPowerLaurent r;
    for (const auto& [ka, ca] : a.t_)
      for (const auto& [kb, cb] : b.t_) r.add_term(ka + kb, ca * cb);
    return r;
  }
  HalfPowerLaurent& operator*=(const HalfPowerLaurent& o) { return *this = *this * o; }
  HalfPowerLaurent operator-() const {
    HalfPowerLaurent r(*this);
    for (auto& [k, c] : r.t_) c = -c;
    return r;
  }

  /// Exact division by a monomial; throws if the divisor is not a monomial.
  HalfPowerLaurent divided_by_monomial(const HalfPowerLaurent& m) const {
    if (!m.is_monomial()) throw PreconditionError("division by a non-monomial Laurent polynomial");
    const auto& [km, cm] = *m.t_.begin();
    HalfPowerLaurent r;
    for (const auto& [k, c] : t_) r.t_[k - km] = c / cm;
    return r;
  }

  /// Multiplies by q^{twice_exp/2}.
  HalfPowerLaurent shifted(int twice_exp) const {
    HalfPowerLaurent r;
    for (const auto& [k, c] : t_) r.t_[k + twice_exp] = c;
    return r;
  }

  friend bool operator==(const HalfPowerLaurent& a, const HalfPowerLaurent& b) { return a.t_ == b.t_; }

  /// Exact value at a positive rational q; nullopt if sqrt(q) is irrational
  /// and an odd exponent is present.
  std::optional<Rational> evaluate(const Rational& qv) const {
    if (qv <= 0) throw PreconditionError("evaluation point q must be positive");
    Rational root(0);
    bool have_root = rational_sqrt(qv, root);
    Rational sum(0);
    for (const auto& [k, c] : t_) {
      Rational base;
      int e;
      if (k % 2 == 0) {
        base = qv;
        e = k / 2;
      } else {
        if (!have_root) return std::nullopt;
        base = root;
        e = k;
      }
      sum += c * rational_pow(base, e);
    }
    return sum;
  }

  double evaluate_double(double qv) const {
    double s = 0.0;
    for (const auto& [k, c] : t_) s += to_double(c) * std::pow(qv, 0.5 * k);
    return s;
  }

  /// Human readable form, highest exponent first, e.g. "q^-3 - q^-2".
  std::string to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      Rational c = it->second;
      bool neg = c < 0;
      if (neg) c = -c;
      if (first)
        os << (neg ? "-" : "");
      else
        os << (neg ? " - " : " + ");
      first = false;
      const int k = it->first;
      const bool unit = (c == 1);
      if (!unit || k == 0) os << c;
      if (k != 0) {
        if (!unit) os << "*";
        os << "q";
        if (k != 2) {
          if (k % 2 == 0)
            os << "^" << k / 2;
          else
            os << "^(" << k << "/2)";
        }
      }
    }
    return os.str();
  }

  static Rational rational_pow(const Rational& b, int e) {
    Rational r(1);
    Rational base = e < 0 ? Rational(1) / b : b;
    for (int i = 0; i < std::abs(e); ++i) r *= base;
    return r;
  }

 private:
  void add_term(int k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = t_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }

  Terms t_;
};

/// Polynomial in t with int64 coefficients, index = degree.
struct IntPoly {
  std::vector<std::int64_t> c;

  bool is_zero() const {
    for (auto v : c)
      if (v != 0) return false;
    return true;
  }
  std::int64_t at(std::size_t k) const { return k < c.size() ? c[k] : 0; }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  IntPoly& operator+=(const IntPoly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), 0);
    for (std::size_t i = 0; i < o.c.size(); ++i) c[i] = checked_add(c[i], o.c[i]);
    trim();
    return *this;
  }
  /// Multiplies by t.
  IntPoly shifted() const {
    if (is_zero()) return {};
    IntPoly r;
    r.c.reserve(c.size() + 1);
    r.c.push_back(0);
    r.c.insert(r.c.end(), c.begin(), c.end());
    return r;
  }
  std::int64_t at_one() const {
    std::int64_t s = 0;
    for (auto v : c) s = checked_add(s, v);
    return s;
  }
  /// Lowest degree with a nonzero coefficient, -1 for zero.
  int lowest_degree() const {
    for (std::size_t k = 0; k < c.size(); ++k)
      if (c[k] != 0) return static_cast<int>(k);
    return -1;
  }
  /// Value at t = q^{-1} as a Laurent polynomial in q.
  HalfPowerLaurent at_inverse_q() const {
    HalfPowerLaurent r;
    for (std::size_t k = 0; k < c.size(); ++k)
      if (c[k] != 0) r += HalfPowerLaurent::monomial(-2 * static_cast<int>(k), Rational(c[k]));
    return r;
  }
  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    IntPoly x = a, y = b;
    x.trim();
    y.trim();
    return x.c == y.c;
  }
};

/// Univariate polynomial with exact rational coefficients (used by the
/// Hall-Littlewood oracle where t is symbolic).
struct RatPoly {
  std::vector<Rational> c;

  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { trim(); }
  static RatPoly constant(const Rational& v) { return RatPoly({v}); }
  static RatPoly t() { return RatPoly({Rational(0), Rational(1)}); }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  Rational at(std::size_t k) const { return k < c.size() ? c[k] : Rational(0); }

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    RatPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.at(i) + b.at(i);
    r.trim();
    return r;
  }
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    RatPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.at(i) - b.at(i);
    r.trim();
    return r;
  }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    RatPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
  }
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c == b.c; }

  /// Exact division; throws when the remainder is nonzero.
  RatPoly exact_div(const RatPoly& d) const {
    if (d.is_zero()) throw PreconditionError("polynomial division by zero");
    std::vector<Rational> rem = c;
    if (rem.size() < d.c.size()) {
      if (is_zero()) return {};
      throw NumericalError("inexact polynomial division");
    }
    std::vector<Rational> quo(rem.size() - d.c.size() + 1, Rational(0));
    for (int i = static_cast<int>(quo.size()) - 1; i >= 0; --i) {
      Rational f = rem[i + d.c.size() - 1] / d.c.back();
      quo[i] = f;
      for (std::size_t j = 0; j < d.c.size(); ++j) rem[i + j] -= f * d.c[j];
    }
    for (const auto& v : rem)
      if (v != 0) throw NumericalError("inexact polynomial division");
    return RatPoly(std::move(quo));
  }

  Rational evaluate(const Rational& x) const {
    Rational s(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * x + *it;
    return s;
  }

  /// Substitutes t = q^{-1}.
  HalfPowerLaurent at_inverse_q() const {
    HalfPowerLaurent r;
    for (std::size_t k = 0; k < c.size(); ++k)
      if (c[k] != 0) r += HalfPowerLaurent::monomial(-2 * static_cast<int>(k), c[k]);
    return r;
  }
};

}  // namespace satake
