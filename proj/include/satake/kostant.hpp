#pragma once

// Kostant partition function and its t-analogue, counting decompositions of
// a lattice vector into positive coroots.

#include "satake/laurent.hpp"
#include "satake/root_datum.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace satake {

struct VecHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto x : v) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Generating function prod_beta 1/(1 - t e^beta) over a fixed list of
/// positive vectors given in simple coordinates. The first r vectors must be
/// the simple ones in order.
class KostantTable {
 public:
  explicit KostantTable(std::vector<std::vector<std::int64_t>> positives)
      : pos_(std::move(positives)), r_(pos_.empty() ? 0 : pos_.front().size()) {
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t k = 0; k < r_; ++k)
        if (pos_[i][k] != (i == k ? 1 : 0)) throw PreconditionError("Kostant table: simple vectors must come first");
  }

  std::size_t num_positive() const { return pos_.size(); }

  IntPoly q_count(const std::vector<std::int64_t>& kappa) const {
    for (auto x : kappa)
      if (x < 0) return {};
    return eval(pos_.size(), kappa);
  }

 private:
  IntPoly eval(std::size_t j, const std::vector<std::int64_t>& kappa) const {
    for (auto x : kappa)
      if (x < 0) return {};
    if (j <= r_) {
      // Only simple vectors left: a unique decomposition if kappa lives on them.
      std::int64_t len = 0;
      for (std::size_t i = 0; i < r_; ++i) {
        if (i >= j && kappa[i] != 0) return {};
        len += kappa[i];
      }
      IntPoly p;
      p.c.assign(static_cast<std::size_t>(len) + 1, 0);
      p.c.back() = 1;
      return p;
    }
    std::vector<std::int64_t> key(kappa);
    key.push_back(static_cast<std::int64_t>(j));
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    // P_j(k) = P_{j-1}(k) + t P_j(k - beta_j)
    IntPoly res = eval(j - 1, kappa);
    std::vector<std::int64_t> rest(kappa);
    const auto& beta = pos_[j - 1];
    for (std::size_t i = 0; i < r_; ++i) rest[i] -= beta[i];
    res += eval(j, rest).shifted();
    std::lock_guard<std::mutex> lock(mu_);
    memo_.emplace(std::move(key), res);
    return res;
  }

  std::vector<std::vector<std::int64_t>> pos_;
  std::size_t r_;
  mutable std::mutex mu_;
  mutable std::unordered_map<std::vector<std::int64_t>, IntPoly, VecHash> memo_;
};

namespace detail {

/// Shared table for the positive coroots of d, in simple-coroot coordinates.
inline std::shared_ptr<const KostantTable> coroot_table(const RootDatum& d) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const KostantTable>> cache;
  const std::string key = d.name();
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<std::vector<std::int64_t>> pos;
  std::vector<Weight> ordered = d.simple_coroots();
  for (const auto& c : d.positive_coroots())
    if (std::find(ordered.begin(), ordered.end(), c) == ordered.end()) ordered.push_back(c);
  linalg::Coordinates coords(d.simple_coroots());
  for (const auto& c : ordered) {
    auto x = coords.solve(c);
    std::vector<std::int64_t> v;
    for (const auto& f : *x) {
      if (!is_integral(f) || f < 0) throw NumericalError("positive coroot is not a nonnegative integer combination");
      v.push_back(f.numerator());
    }
    pos.push_back(std::move(v));
  }
  auto table = std::make_shared<const KostantTable>(std::move(pos));
  cache.emplace(key, table);
  return table;
}

inline std::vector<std::int64_t> coroot_lattice_coords(const RootDatum& d, const Weight& kappa) {
  linalg::Coordinates coords(d.simple_coroots());
  auto x = coords.solve(kappa);
  std::ostringstream os;
  if (!x) {
    os << "kappa " << kappa << " is outside the coroot span of " << d.name();
    throw PreconditionError(os.str());
  }
  std::vector<std::int64_t> v;
  for (const auto& f : *x) {
    if (!is_integral(f)) {
      os << "kappa " << kappa << " is not in the coroot lattice of " << d.name();
      throw PreconditionError(os.str());
    }
    v.push_back(f.numerator());
  }
  return v;
}

}  // namespace detail

/// Sum over decompositions kappa = sum c_beta beta^vee of t^{sum c_beta}.
inline IntPoly q_kostant(const RootDatum& d, const Weight& kappa) {
  return detail::coroot_table(d)->q_count(detail::coroot_lattice_coords(d, kappa));
}

/// Number of decompositions of kappa into positive coroots.
inline std::int64_t kostant_partition(const RootDatum& d, const Weight& kappa) {
  return q_kostant(d, kappa).at_one();
}

}  // namespace satake
