#pragma once

// Exact Laurent polynomials on the dual torus: finitely supported integer
// combinations of characters e^mu.

#include "satake/kostant.hpp"
#include "satake/root_datum.hpp"
#include "satake/weyl_character.hpp"

#include <unordered_map>
#include <vector>

namespace satake {

class TorusPoly {
 public:
  using Key = std::vector<std::int64_t>;
  using Map = std::unordered_map<Key, std::int64_t, VecHash>;

  TorusPoly() = default;
  explicit TorusPoly(const RootDatum& d) : den_(d.coordinate_denominator()), dim_(d.ambient_dim()) {}

  static TorusPoly one(const RootDatum& d) {
    TorusPoly p(d);
    p.add(Key(d.ambient_dim(), 0), 1);
    return p;
  }

  /// sum_mu mult(mu) e^{scale mu}
  static TorusPoly from_weights(const RootDatum& d, const WeightMultiset& w, std::int64_t scale = 1) {
    TorusPoly p(d);
    for (const auto& [mu, m] : w) {
      Key k = d.lattice_key(mu);
      for (auto& x : k) x = checked_mul(x, scale);
      p.add(k, m);
    }
    return p;
  }

  /// prod over all roots of (1 - e^alpha)
  static TorusPoly weyl_denominator_square(const RootDatum& d) {
    TorusPoly p = one(d);
    for (const auto& a : d.roots()) {
      TorusPoly f(d);
      f.add(Key(d.ambient_dim(), 0), 1);
      f.add(d.lattice_key(a), -1);
      p = p * f;
    }
    return p;
  }

  void add(const Key& k, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = t_.try_emplace(k, c);
    if (!inserted) {
      it->second = checked_add(it->second, c);
      if (it->second == 0) t_.erase(it);
    }
  }

  std::int64_t coeff(const Key& k) const {
    auto it = t_.find(k);
    return it == t_.end() ? 0 : it->second;
  }
  std::int64_t constant_term() const { return coeff(Key(dim_, 0)); }
  std::size_t size() const { return t_.size(); }
  const Map& terms() const { return t_; }

  friend TorusPoly operator*(const TorusPoly& a, const TorusPoly& b) {
    TorusPoly r;
    r.den_ = a.den_;
    r.dim_ = a.dim_;
    r.t_.reserve(a.t_.size() * 2 + b.t_.size());
    Key k(a.dim_);
    for (const auto& [ka, ca] : a.t_)
      for (const auto& [kb, cb] : b.t_) {
        for (std::size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
        r.add(k, checked_mul(ca, cb));
      }
    return r;
  }
  friend TorusPoly operator+(TorusPoly a, const TorusPoly& b) {
    for (const auto& [k, c] : b.t_) a.add(k, c);
    return a;
  }
  friend TorusPoly operator-(TorusPoly a, const TorusPoly& b) {
    for (const auto& [k, c] : b.t_) a.add(k, -c);
    return a;
  }

 private:
  std::int64_t den_ = 1;
  std::size_t dim_ = 0;
  Map t_;
};

}  // namespace satake
