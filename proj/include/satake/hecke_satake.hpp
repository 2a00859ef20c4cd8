#pragma once

// Satake transform between the spherical Hecke algebra (tau basis) and
// Weyl-invariant functions on the dual torus.
//
// The engine is parameterized by the root datum of the dual group. Hecke
// basis elements tau_lambda are indexed by dominant weights of that datum
// (cocharacters of the group itself).

#include "satake/kostant.hpp"
#include "satake/laurent.hpp"
#include "satake/root_datum.hpp"
#include "satake/weyl_character.hpp"

#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace satake {

/// Finitely supported map Weight -> Q[q^{+-1/2}].
struct Expansion {
  std::map<Weight, HalfPowerLaurent> terms;

  void add(const Weight& k, const HalfPowerLaurent& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  HalfPowerLaurent coeff(const Weight& k) const {
    auto it = terms.find(k);
    return it == terms.end() ? HalfPowerLaurent() : it->second;
  }
  bool is_zero() const { return terms.empty(); }
  std::size_t size() const { return terms.size(); }
  friend bool operator==(const Expansion& a, const Expansion& b) { return a.terms == b.terms; }
};

/// sum_lambda c_lambda tau_lambda
struct HeckeElement : Expansion {
  HeckeElement& operator+=(const HeckeElement& o) {
    for (const auto& [k, c] : o.terms) add(k, c);
    return *this;
  }
  HeckeElement scaled(const HalfPowerLaurent& s) const {
    HeckeElement r;
    for (const auto& [k, c] : terms) r.add(k, c * s);
    return r;
  }
};

enum class SphericalBasis { OrbitSum, Character };

inline const char* to_string(SphericalBasis b) { return b == SphericalBasis::OrbitSum ? "orbit_sum" : "character"; }

struct SphericalFunction : Expansion {
  SphericalBasis basis = SphericalBasis::Character;

  SphericalFunction() = default;
  explicit SphericalFunction(SphericalBasis b) : basis(b) {}
  friend bool operator==(const SphericalFunction& a, const SphericalFunction& b) {
    return a.basis == b.basis && a.terms == b.terms;
  }
};

/// Representation of the dual group, given by highest weights or a weight multiset.
struct RepSpec {
  enum class Kind { Trivial, Standard, Adjoint, HighestWeights, WeightList };
  Kind kind = Kind::Standard;
  std::vector<std::pair<Weight, std::int64_t>> highest;
  WeightMultiset explicit_weights;

  static RepSpec trivial() { return {Kind::Trivial, {}, {}}; }
  static RepSpec standard() { return {Kind::Standard, {}, {}}; }
  static RepSpec adjoint() { return {Kind::Adjoint, {}, {}}; }
  static RepSpec highest_weights(std::vector<std::pair<Weight, std::int64_t>> hw) {
    return {Kind::HighestWeights, std::move(hw), {}};
  }
  static RepSpec weight_list(WeightMultiset w) { return {Kind::WeightList, {}, std::move(w)}; }

  std::string label() const {
    switch (kind) {
      case Kind::Trivial: return "triv";
      case Kind::Standard: return "std";
      case Kind::Adjoint: return "adj";
      case Kind::HighestWeights: {
        std::ostringstream os;
        for (std::size_t i = 0; i < highest.size(); ++i)
          os << (i ? "+" : "") << highest[i].second << "*" << highest[i].first;
        return os.str();
      }
      case Kind::WeightList: return "weights";
    }
    return "?";
  }

  /// Highest weight components with multiplicity, for the non-explicit kinds.
  std::vector<std::pair<Weight, std::int64_t>> components(const RootDatum& d) const {
    const std::size_t n = d.ambient_dim();
    switch (kind) {
      case Kind::Trivial: return {{Weight(n), 1}};
      case Kind::Standard: return {{d.canonical(Weight::unit(n, 0)), 1}};
      case Kind::Adjoint:
        if (d.is_gl()) throw PreconditionError("adjoint representation of GL_n is reducible; use PGL/SL data");
        return {{d.highest_root(), 1}};
      case Kind::HighestWeights: {
        std::vector<std::pair<Weight, std::int64_t>> out;
        for (const auto& [w, m] : highest) {
          if (m <= 0) throw PreconditionError("highest-weight multiplicities must be positive");
          out.emplace_back(d.canonical(w), m);
        }
        if (out.empty()) throw PreconditionError("empty highest-weight list");
        return out;
      }
      case Kind::WeightList: break;
    }
    throw PreconditionError("explicit weight list has no highest-weight components");
  }

  WeightMultiset weights(const RootDatum& d) const {
    if (kind == Kind::WeightList) {
      WeightMultiset out;
      for (const auto& [w, m] : explicit_weights) {
        Weight c = d.canonical(w);
        d.require_weight(c);
        if (m <= 0) throw PreconditionError("weight multiplicities must be positive");
        out[c] += m;
      }
      for (const auto& [w, m] : out)
        for (const auto& v : d.weyl_orbit(w)) {
          auto it = out.find(v);
          if (it == out.end() || it->second != m)
            throw PreconditionError("weight multiset is not Weyl-invariant");
        }
      if (out.empty()) throw PreconditionError("empty weight list");
      return out;
    }
    WeightMultiset out;
    for (const auto& [lam, m] : components(d)) {
      d.require_dominant(lam, "highest weight");
      for (const auto& [w, k] : weyl_character(d, lam)) out[w] += k * m;
    }
    return out;
  }

  std::int64_t dim(const RootDatum& d) const { return total_multiplicity(weights(d)); }
};

/// Coefficients of sum_mu mult(nu*mu) in the orbit-sum basis.
inline SphericalFunction orbit_sums_of(const RootDatum& d, const WeightMultiset& w, std::int64_t nu = 1) {
  SphericalFunction f(SphericalBasis::OrbitSum);
  for (const auto& [mu, m] : w) {
    Weight k = Frac(nu) * mu;
    if (d.is_dominant(k)) f.add(k, HalfPowerLaurent(m));
  }
  return f;
}

class SatakeEngine {
 public:
  explicit SatakeEngine(RootDatum dual_group) : d_(std::move(dual_group)), coroot_side_(d_.dual()) {}

  const RootDatum& datum() const { return d_; }

  /// s_{lam,mu} = q^{-<rho^vee, mu>} sum_w sgn(w) P(w(lam+rho) - (mu+rho); q^{-1}),
  /// with P partitioning into positive roots of the dual datum.
  HalfPowerLaurent satake_coeff(const Weight& lam, const Weight& mu) const {
    d_.require_dominant(lam);
    d_.require_dominant(mu);
    if (!d_.in_root_lattice(lam - mu) || !d_.leq(mu, lam)) return {};
    auto key = std::make_pair(lam, mu);
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = coeff_cache_.find(key);
      if (it != coeff_cache_.end()) return it->second;
    }
    HalfPowerLaurent res = alternating_sum(lam, mu);
    std::lock_guard<std::mutex> lock(mu_);
    coeff_cache_.emplace(key, res);
    return res;
  }

  /// The defining sum without the dominance shortcut; used to test triangularity.
  HalfPowerLaurent alternating_sum(const Weight& lam, const Weight& mu) const {
    const Weight lr = lam + d_.rho();
    const Weight mr = mu + d_.rho();
    HalfPowerLaurent sum;
    for (const auto& w : d_.weyl_elements()) {
      IntPoly p = q_kostant(coroot_side_, w.apply(lr) - mr);
      if (p.is_zero()) continue;
      HalfPowerLaurent term = p.at_inverse_q();
      if (w.det() < 0) term = -term;
      sum += term;
    }
    return sum * HalfPowerLaurent::monomial(-dot(d_.rho_coroot(), mu));
  }

  const RootDatum& coroot_side() const { return coroot_side_; }

  /// S^{-1}(chi_lam) = sum_mu s_{lam,mu} tau_mu
  HeckeElement inverse_character(const Weight& lam) const {
    HeckeElement h;
    for (const auto& mu : d_.dominant_weights_below(lam)) h.add(mu, satake_coeff(lam, mu));
    return h;
  }

  HeckeElement inverse(const SphericalFunction& f) const {
    SphericalFunction chars = f.basis == SphericalBasis::Character ? f : orbit_to_character(f);
    HeckeElement h;
    for (const auto& [lam, c] : chars.terms) h += inverse_character(lam).scaled(c);
    return h;
  }

  /// Satake image of tau_mu in the character basis.
  SphericalFunction forward_tau(const Weight& mu) const {
    d_.require_dominant(mu);
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = forward_cache_.find(mu);
      if (it != forward_cache_.end()) return it->second;
    }
    // chi_mu = s_mu,mu S(tau_mu) + sum_{nu < mu} s_{mu,nu} S(tau_nu)
    SphericalFunction acc(SphericalBasis::Character);
    acc.add(mu, HalfPowerLaurent(1));
    for (const auto& nu : d_.dominant_weights_below(mu)) {
      if (nu == mu) continue;
      HalfPowerLaurent s = satake_coeff(mu, nu);
      if (s.is_zero()) continue;
      for (const auto& [k, c] : forward_tau(nu).terms) acc.add(k, -(s * c));
    }
    const HalfPowerLaurent diag = satake_coeff(mu, mu);
    SphericalFunction res(SphericalBasis::Character);
    for (const auto& [k, c] : acc.terms) res.add(k, c.divided_by_monomial(diag));
    std::lock_guard<std::mutex> lock(mu_);
    forward_cache_.emplace(mu, res);
    return res;
  }

  SphericalFunction forward(const HeckeElement& h) const {
    SphericalFunction res(SphericalBasis::Character);
    for (const auto& [mu, c] : h.terms)
      for (const auto& [k, v] : forward_tau(mu).terms) res.add(k, c * v);
    return res;
  }

  /// Expands characters into orbit sums.
  SphericalFunction character_to_orbit(const SphericalFunction& f) const {
    if (f.basis == SphericalBasis::OrbitSum) return f;
    SphericalFunction res(SphericalBasis::OrbitSum);
    for (const auto& [lam, c] : f.terms)
      for (const auto& [mu, m] : *dominant_character(d_, lam)) res.add(mu, c * HalfPowerLaurent(m));
    return res;
  }

  /// Elimination along dominance: peel off the highest remaining orbit sum.
  SphericalFunction orbit_to_character(const SphericalFunction& f) const {
    if (f.basis == SphericalBasis::Character) return f;
    SphericalFunction rest = f;
    SphericalFunction res(SphericalBasis::Character);
    while (!rest.is_zero()) {
      auto top = rest.terms.begin();
      Frac best = dot(top->first, d_.rho_coroot());
      for (auto it = rest.terms.begin(); it != rest.terms.end(); ++it) {
        Frac h = dot(it->first, d_.rho_coroot());
        if (h > best || (h == best && top->first < it->first)) {
          best = h;
          top = it;
        }
      }
      const Weight lam = top->first;
      const HalfPowerLaurent c = top->second;
      d_.require_dominant(lam);
      res.add(lam, c);
      for (const auto& [mu, m] : *dominant_character(d_, lam)) rest.add(mu, -(c * HalfPowerLaurent(m)));
      if (!rest.coeff(lam).is_zero()) throw NumericalError("character elimination failed to clear the leading term");
    }
    return res;
  }

  /// r^*(Y_1^nu + ... + Y_d^nu) in the orbit-sum basis.
  SphericalFunction power_sum_pullback(const RepSpec& r, std::int64_t nu) const {
    if (nu < 1) throw PreconditionError("nu must be >= 1");
    return orbit_sums_of(d_, r.weights(d_), nu);
  }

  /// phi^{(nu)} = S^{-1}(r^*(Y_1^nu + ... + Y_d^nu))
  HeckeElement phi_nu(const RepSpec& r, std::int64_t nu) const { return inverse(power_sum_pullback(r, nu)); }

 private:
  RootDatum d_;
  RootDatum coroot_side_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<Weight, Weight>, HalfPowerLaurent> coeff_cache_;
  mutable std::map<Weight, SphericalFunction> forward_cache_;
};

/// phi(1) is the coefficient of tau_0.
inline HalfPowerLaurent evaluate_at_identity(const HeckeElement& h) {
  if (h.terms.empty()) return {};
  return h.coeff(Weight(h.terms.begin()->first.dim()));
}

/// Irreducible decomposition (highest weight -> multiplicity) of a weight multiset.
inline std::map<Weight, std::int64_t> decompose(const RootDatum& d, const WeightMultiset& w) {
  SatakeEngine eng(d);
  std::map<Weight, std::int64_t> out;
  for (const auto& [lam, c] : eng.orbit_to_character(orbit_sums_of(d, w)).terms) {
    Rational v = c.constant_term();
    if (c.size() != 1 || denominator(v) != 1) throw NumericalError("non-integral irreducible multiplicity");
    out[lam] = static_cast<std::int64_t>(numerator(v));
  }
  return out;
}

struct RepDiagnostics {
  std::int64_t dim = 0;
  bool irreducible = false;
  bool contains_trivial = false;
  std::map<Weight, std::int64_t> components;
};

inline RepDiagnostics diagnose(const RootDatum& d, const RepSpec& r) {
  RepDiagnostics diag;
  WeightMultiset w = r.weights(d);
  diag.dim = total_multiplicity(w);
  diag.components = decompose(d, w);
  diag.irreducible = diag.components.size() == 1 && diag.components.begin()->second == 1;
  diag.contains_trivial = diag.components.count(Weight(d.ambient_dim())) > 0;
  return diag;
}

/// ||lam||_B = max_w max_i |a_i(w lam)| with a_i the coordinates in basis B.
inline Frac truncation_norm(const RootDatum& d, const std::vector<Weight>& basis, const Weight& lam) {
  const std::size_t n = d.ambient_dim();
  if (basis.size() != n) throw PreconditionError("degenerate basis: need exactly ambient_dim vectors");
  linalg::Matrix m(n, std::vector<Frac>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (basis[i].dim() != n) throw PreconditionError("degenerate basis: wrong vector length");
    for (std::size_t j = 0; j < n; ++j) m[j][i] = basis[i][j];
  }
  auto inv = linalg::inverse(m);
  if (!inv) throw PreconditionError("degenerate basis: vectors do not span the ambient space");
  Frac best(0);
  for (const auto& w : d.weyl_elements()) {
    Weight v = w.apply(lam);
    for (std::size_t i = 0; i < n; ++i) {
      Frac a(0);
      for (std::size_t j = 0; j < n; ++j) a += (*inv)[i][j] * v[j];
      if (a < 0) a = -a;
      if (a > best) best = a;
    }
  }
  return best;
}

inline std::vector<Weight> standard_basis(std::size_t n) {
  std::vector<Weight> b;
  for (std::size_t i = 0; i < n; ++i) b.push_back(Weight::unit(n, i));
  return b;
}

/// Largest epsilon-basis truncation norm over the support of h.
inline Frac support_norm(const RootDatum& d, const HeckeElement& h) {
  Frac best(0);
  auto basis = standard_basis(d.ambient_dim());
  for (const auto& [lam, c] : h.terms) best = std::max(best, truncation_norm(d, basis, lam));
  return best;
}

}  // namespace satake
