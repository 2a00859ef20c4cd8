#pragma once

// Unramified Plancherel density of a split group on the compact dual torus,
// trapezoid quadrature and moments.

#include "satake/hecke_satake.hpp"
#include "satake/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

namespace satake {

using cplx = std::complex<double>;

/// Uniform tensor grid on [0,1)^rank with M points per axis.
struct TorusGrid {
  std::size_t rank = 1;
  std::size_t points = 48;

  // 48 per axis leaves ~5e-7 aliasing error at q = 2 on rank 1 and 2, where
  // long roots have frequency 2; those ranks are cheap, so use 96.
  static std::size_t default_points(std::size_t rank) { return rank <= 2 ? 96 : rank == 3 ? 48 : 24; }

  // The Plancherel density is not a trigonometric polynomial; its aliasing
  // error behaves like 2 q^{5 - M/2} in the worst case (C_n, long roots of
  // frequency 2), so aim for ~1e-10 and cap the cost per rank. Rank 4 at
  // q = 2 is capped at 64 (about 1e-8).
  static std::size_t plancherel_points(std::size_t rank, double q) {
    if (!(q > 1.0)) return default_points(rank);  // rejected later by require_q
    auto need = static_cast<std::size_t>(std::ceil(12.0 + 50.0 / std::log(q)));
    need += need % 2;
    const std::size_t lo = default_points(rank);
    const std::size_t hi = rank <= 2 ? 128 : rank == 3 ? 96 : 64;
    return std::clamp(need, lo, std::max(lo, hi));
  }
  static TorusGrid for_rank(std::size_t rank, std::size_t m = 0) {
    return {rank, m == 0 ? default_points(rank) : m};
  }

  std::size_t size() const {
    std::size_t n = 1;
    for (std::size_t i = 0; i < rank; ++i) n *= points;
    return n;
  }
  double weight() const { return 1.0 / static_cast<double>(size()); }

  /// Integer grid coordinates of node index.
  std::vector<std::int64_t> node(std::size_t idx) const {
    std::vector<std::int64_t> n(rank);
    for (std::size_t i = 0; i < rank; ++i) {
      n[i] = static_cast<std::int64_t>(idx % points);
      idx /= points;
    }
    return n;
  }
};

namespace detail {

/// e(j/M) for j = 0..M-1.
inline std::vector<cplx> unit_roots(std::size_t m) {
  std::vector<cplx> t(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double a = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m);
    t[j] = cplx(std::cos(a), std::sin(a));
  }
  return t;
}

inline std::size_t phase_index(const std::vector<std::int64_t>& k, const std::vector<std::int64_t>& n, std::size_t m) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < k.size(); ++i) s += k[i] * n[i];
  const std::int64_t mm = static_cast<std::int64_t>(m);
  s %= mm;
  if (s < 0) s += mm;
  return static_cast<std::size_t>(s);
}

}  // namespace detail

/// Frequency vectors of the positive roots of the dual datum.
inline std::vector<std::vector<std::int64_t>> positive_root_frequencies(const RootDatum& d) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& a : d.positive_roots()) out.push_back(d.torus_frequency(a));
  return out;
}

inline void require_q(double q) {
  if (!(q > 1.0)) throw PreconditionError("q must be > 1");
}

/// prod over roots (1 - e(<a,x>)) / (1 - e(<a,x>)/q), paired into |.|^2 factors.
inline double macdonald_density_unnorm(const RootDatum& d, double q, const std::vector<double>& x) {
  require_q(q);
  if (x.size() != d.torus_rank()) throw PreconditionError("point has the wrong number of coordinates");
  double v = 1.0;
  for (const auto& k : positive_root_frequencies(d)) {
    double th = 0.0;
    for (std::size_t i = 0; i < k.size(); ++i) th += static_cast<double>(k[i]) * x[i];
    const cplx z = std::polar(1.0, 2.0 * std::numbers::pi * th);
    v *= std::norm(1.0 - z) / std::norm(1.0 - z / q);
  }
  return v;
}

/// Weighted frequency list sum mult * e(nu <k_mu, x>).
struct FrequencyList {
  std::vector<std::vector<std::int64_t>> k;
  std::vector<double> mult;
};

inline FrequencyList frequencies_of(const RootDatum& d, const WeightMultiset& w, std::int64_t nu) {
  FrequencyList f;
  for (const auto& [mu, m] : w) {
    auto k = d.torus_frequency(mu);
    for (auto& x : k) x *= nu;
    f.k.push_back(std::move(k));
    f.mult.push_back(static_cast<double>(m));
  }
  return f;
}

class PlancherelDensity {
 public:
  PlancherelDensity(RootDatum d, double q, std::size_t points = 0, unsigned threads = 0)
      : d_(std::move(d)), q_(q), grid_(TorusGrid::for_rank(d_.torus_rank(), points == 0 ? TorusGrid::plancherel_points(d_.torus_rank(), q) : points)), threads_(threads) {
    require_q(q);
    roots_ = positive_root_frequencies(d_);
    table_ = detail::unit_roots(grid_.points);
    const double mass = integrate_unnorm({}).front().real();
    if (!(mass > 0.0) || !std::isfinite(mass)) throw NumericalError("Plancherel mass is not positive");
    mass_ = mass;
    c_ = 1.0 / mass;
  }

  const RootDatum& datum() const { return d_; }
  double q() const { return q_; }
  const TorusGrid& grid() const { return grid_; }
  /// Normalization constant C with C * integral = 1.
  double normalization() const { return c_; }
  double unnormalized_mass() const { return mass_; }

  double unnorm_at_node(const std::vector<std::int64_t>& n) const {
    double v = 1.0;
    for (const auto& k : roots_) {
      const cplx z = table_[detail::phase_index(k, n, grid_.points)];
      v *= std::norm(1.0 - z) / std::norm(1.0 - z / q_);
    }
    return v;
  }

  double density(const std::vector<double>& x) const { return c_ * macdonald_density_unnorm(d_, q_, x); }

  /// Smallest unnormalized node value (positivity check).
  double min_node_value() const {
    double m = 1e300;
    for (std::size_t i = 0; i < grid_.size(); ++i) m = std::min(m, unnorm_at_node(grid_.node(i)));
    return m;
  }

  /// Normalized integrals of each frequency list against the density.
  std::vector<cplx> integrate(const std::vector<FrequencyList>& fs) const {
    auto raw = integrate_unnorm(fs);
    std::vector<cplx> out;
    for (std::size_t i = 1; i < raw.size(); ++i) out.push_back(raw[i] * c_);
    return out;
  }

  /// Real moment; throws if the imaginary residue exceeds tol.
  static double real_part_checked(cplx v, double tol = 1e-10) {
    if (std::abs(v.imag()) > tol) throw NumericalError("imaginary residue " + std::to_string(v.imag()) + " above tolerance");
    return v.real();
  }

 private:
  /// Entry 0 is the unnormalized mass, entry i+1 the integral of fs[i].
  std::vector<cplx> integrate_unnorm(const std::vector<FrequencyList>& fs) const {
    const std::size_t n = grid_.size();
    const std::size_t width = fs.size() + 1;
    auto body = [&](std::size_t idx) {
      Accum<cplx> a(width);
      const auto node = grid_.node(idx);
      const double w = unnorm_at_node(node);
      a.v[0] = w;
      for (std::size_t j = 0; j < fs.size(); ++j) {
        cplx s = 0.0;
        for (std::size_t t = 0; t < fs[j].k.size(); ++t)
          s += fs[j].mult[t] * table_[detail::phase_index(fs[j].k[t], node, grid_.points)];
        a.v[j + 1] = s * w;
      }
      return a;
    };
    Accum<cplx> tot = deterministic_sum<Accum<cplx>>(n, body, threads_ == 0 ? default_threads() : threads_, Accum<cplx>(width));
    for (auto& v : tot.v) v *= grid_.weight();
    return tot.v;
  }

  RootDatum d_;
  double q_;
  TorusGrid grid_;
  unsigned threads_;
  std::vector<std::vector<std::int64_t>> roots_;
  std::vector<cplx> table_;
  double mass_ = 0.0;
  double c_ = 0.0;
};

/// C = 1 / (trapezoid integral of the unnormalized density).
inline double normalize(const RootDatum& d, double q, std::size_t points = 0) {
  return PlancherelDensity(d, q, points).normalization();
}

/// beta^{(nu)} for nu = 1..nu_max by quadrature.
inline std::vector<double> plancherel_moments_numeric(const RootDatum& d, const RepSpec& r, std::int64_t nu_max, double q,
                                                      std::size_t points = 0, unsigned threads = 0) {
  if (nu_max < 1) throw PreconditionError("nu must be >= 1");
  PlancherelDensity dens(d, q, points, threads);
  const WeightMultiset w = r.weights(d);
  std::vector<FrequencyList> fs;
  for (std::int64_t nu = 1; nu <= nu_max; ++nu) fs.push_back(frequencies_of(d, w, nu));
  std::vector<double> out;
  for (const auto& v : dens.integrate(fs)) out.push_back(PlancherelDensity::real_part_checked(v));
  return out;
}

inline double plancherel_moment_numeric(const RootDatum& d, const RepSpec& r, std::int64_t nu, double q,
                                        std::size_t points = 0, unsigned threads = 0) {
  if (nu < 1) throw PreconditionError("nu must be >= 1");
  PlancherelDensity dens(d, q, points, threads);
  auto v = dens.integrate({frequencies_of(d, r.weights(d), nu)});
  return PlancherelDensity::real_part_checked(v.front());
}

/// phi^{(nu)}(1) as an exact Laurent polynomial in q.
inline HalfPowerLaurent plancherel_moment_symbolic(const SatakeEngine& eng, const RepSpec& r, std::int64_t nu) {
  return evaluate_at_identity(eng.phi_nu(r, nu));
}

/// phi^{(nu)}(1) evaluated exactly at a rational q.
inline Rational plancherel_moment_exact(const SatakeEngine& eng, const RepSpec& r, std::int64_t nu, const Rational& q) {
  if (q <= 1) throw PreconditionError("q must be > 1");
  auto v = plancherel_moment_symbolic(eng, r, nu).evaluate(q);
  if (!v) throw NumericalError("phi(1) has half-integral q-powers and sqrt(q) is irrational");
  return *v;
}

/// Rejection sampler for points of the torus distributed by the normalized density.
class PlancherelSampler {
 public:
  PlancherelSampler(const RootDatum& d, double q) : d_(d), q_(q) {
    require_q(q);
    bound_ = std::pow(2.0 * q / (q + 1.0), static_cast<double>(d.roots().size()));
  }

  template <class Rng>
  std::vector<double> sample(Rng& rng) const {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> x(d_.torus_rank());
    for (;;) {
      for (auto& c : x) c = u(rng);
      if (u(rng) * bound_ <= macdonald_density_unnorm(d_, q_, x)) return x;
    }
  }

  /// Satake parameters e(<k_mu, x>) over the weights of r with multiplicity.
  std::vector<cplx> parameters(const WeightMultiset& w, const std::vector<double>& x) const {
    std::vector<cplx> out;
    for (const auto& [mu, m] : w) {
      auto k = d_.torus_frequency(mu);
      double th = 0.0;
      for (std::size_t i = 0; i < k.size(); ++i) th += static_cast<double>(k[i]) * x[i];
      for (std::int64_t i = 0; i < m; ++i) out.push_back(std::polar(1.0, 2.0 * std::numbers::pi * th));
    }
    return out;
  }

  double bound() const { return bound_; }

 private:
  RootDatum d_;
  double q_;
  double bound_;
};

}  // namespace satake
