#pragma once

// Lossless JSON encoding of exact objects. Rationals are [num, den] pairs,
// q-exponents are half-integers (num, den) with den in {1, 2}. Integers too
// large for int64 are written as decimal strings.

#include "satake/hecke_satake.hpp"

#include "json.hpp"

#include <cstdio>
#include <limits>
#include <string>

namespace satake::json_io {

using nlohmann::json;

inline json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline BigInt big_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw PreconditionError("expected an integer or decimal string");
}

inline json frac_to_json(const Frac& f) { return json::array({f.numerator(), f.denominator()}); }

inline Frac frac_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw PreconditionError("expected a [num, den] pair");
  const auto den = j[1].get<std::int64_t>();
  if (den == 0) throw PreconditionError("zero denominator");
  return Frac(j[0].get<std::int64_t>(), den);
}

inline json weight_to_json(const Weight& w) {
  json a = json::array();
  for (std::size_t i = 0; i < w.dim(); ++i) a.push_back(frac_to_json(w[i]));
  return a;
}

inline Weight weight_from_json(const json& j) {
  if (!j.is_array()) throw PreconditionError("weight must be an array");
  Weight w(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) w[i] = frac_from_json(j[i]);
  return w;
}

/// [[exp_num, exp_den, c_num, c_den], ...] in ascending exponent.
inline json laurent_to_json(const HalfPowerLaurent& p) {
  json a = json::array();
  for (const auto& [k, c] : p.terms()) {
    const bool even = k % 2 == 0;
    a.push_back(json::array({even ? k / 2 : k, even ? 1 : 2, big_to_json(numerator(c)), big_to_json(denominator(c))}));
  }
  return a;
}

inline HalfPowerLaurent laurent_from_json(const json& j) {
  if (!j.is_array()) throw PreconditionError("Laurent polynomial must be an array");
  HalfPowerLaurent p;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 4) throw PreconditionError("Laurent term must be [exp_num, exp_den, c_num, c_den]");
    const Frac e(t[0].get<std::int64_t>(), t[1].get<std::int64_t>());
    const BigInt den = big_from_json(t[3]);
    if (den == 0) throw PreconditionError("zero denominator");
    p += HalfPowerLaurent::monomial(e, Rational(big_from_json(t[2]), den));
  }
  return p;
}

inline json expansion_terms(const Expansion& e) {
  json terms = json::array();
  for (const auto& [lam, c] : e.terms) terms.push_back({{"lambda", weight_to_json(lam)}, {"coeff", laurent_to_json(c)}});
  return terms;
}

inline json hecke_to_json(const HeckeElement& h) { return {{"basis", "tau"}, {"terms", expansion_terms(h)}}; }

inline json spherical_to_json(const SphericalFunction& f) {
  return {{"basis", to_string(f.basis)}, {"terms", expansion_terms(f)}};
}

inline HeckeElement hecke_from_json(const json& j) {
  if (j.value("basis", "") != "tau") throw PreconditionError("expected basis \"tau\"");
  HeckeElement h;
  for (const auto& t : j.at("terms")) h.add(weight_from_json(t.at("lambda")), laurent_from_json(t.at("coeff")));
  return h;
}

inline json rational_to_json(const Rational& r) {
  return json::array({big_to_json(numerator(r)), big_to_json(denominator(r))});
}

/// %.17g, the textual float format for CSV output.
inline std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace satake::json_io
