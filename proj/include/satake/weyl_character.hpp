#pragma once

// Weight multiplicities by Freudenthal's recursion and Weyl's dimension formula.

#include "satake/root_datum.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace satake {

using WeightMultiset = std::map<Weight, std::int64_t>;

namespace detail {

inline WeightMultiset freudenthal_dominant(const RootDatum& d, const Weight& lam) {
  std::vector<Weight> dom = d.dominant_weights_below(lam);
  // Highest first, so every mu + k alpha is known before mu.
  std::sort(dom.begin(), dom.end(), [&](const Weight& a, const Weight& b) {
    Frac ha = dot(a, d.rho_coroot()), hb = dot(b, d.rho_coroot());
    return ha != hb ? ha > hb : b < a;
  });
  WeightMultiset mult;
  const Weight lr = lam + d.rho();
  const Frac norm_top = dot(lr, lr);
  for (const auto& mu : dom) {
    if (mu == lam) {
      mult[mu] = 1;
      continue;
    }
    Frac acc(0);
    for (const auto& a : d.positive_roots()) {
      for (std::int64_t k = 1;; ++k) {
        Weight nu = mu + k * a;
        auto it = mult.find(d.dominant_rep(nu));
        if (it == mult.end()) break;
        acc += Frac(it->second) * dot(nu, a);
      }
    }
    const Weight mr = mu + d.rho();
    Frac m = Frac(2) * acc / (norm_top - dot(mr, mr));
    if (!is_integral(m) || m < 0) throw NumericalError("Freudenthal recursion produced a non-integral multiplicity");
    if (m != 0) mult[mu] = m.numerator();
  }
  return mult;
}

}  // namespace detail

/// Multiplicities of dominant weights in the irreducible module of highest weight lam.
inline std::shared_ptr<const WeightMultiset> dominant_character(const RootDatum& d, const Weight& lam) {
  d.require_dominant(lam);
  static std::mutex mu;
  static std::map<std::pair<std::string, Weight>, std::shared_ptr<const WeightMultiset>> cache;
  auto key = std::make_pair(d.name(), lam);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto res = std::make_shared<const WeightMultiset>(detail::freudenthal_dominant(d, lam));
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, res);
  return res;
}

/// Full weight multiset of the irreducible module of highest weight lam.
inline WeightMultiset weyl_character(const RootDatum& d, const Weight& lam) {
  WeightMultiset out;
  for (const auto& [mu, m] : *dominant_character(d, lam))
    for (const auto& w : d.weyl_orbit(mu)) out[w] = m;
  return out;
}

inline std::int64_t weyl_dim(const RootDatum& d, const Weight& lam) {
  d.require_dominant(lam);
  Frac p(1);
  const Weight lr = lam + d.rho();
  for (const auto& a : d.positive_roots()) p *= dot(a, lr) / dot(a, d.rho());
  if (!is_integral(p)) throw NumericalError("Weyl dimension formula produced a non-integer");
  return p.numerator();
}

inline std::int64_t total_multiplicity(const WeightMultiset& m) {
  std::int64_t s = 0;
  for (const auto& [w, k] : m) s = checked_add(s, k);
  return s;
}

}  // namespace satake
