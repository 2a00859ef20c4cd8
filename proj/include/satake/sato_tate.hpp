#pragma once

// Sato-Tate measure (split case) through the Weyl integration formula:
// exact constant-term moments, quadrature checks and the q -> infinity
// comparison with Plancherel moments.

#include "satake/plancherel.hpp"
#include "satake/torus_poly.hpp"

#include <cmath>
#include <vector>

namespace satake {

/// (1/|W|) prod over roots (1 - e(<a,x>)).
inline double st_density(const RootDatum& d, const std::vector<double>& x) {
  double v = 1.0;
  for (const auto& k : positive_root_frequencies(d)) {
    double th = 0.0;
    for (std::size_t i = 0; i < k.size(); ++i) th += static_cast<double>(k[i]) * x[i];
    v *= std::norm(1.0 - std::polar(1.0, 2.0 * std::numbers::pi * th));
  }
  return v / static_cast<double>(d.weyl_order());
}

/// CT[f * (1/|W|) prod (1 - e^a)] for a Weyl-invariant f, via
/// sum_w sgn(w) f_{w rho - rho}.
template <class Coeff>
Rational st_constant_term(const RootDatum& d, Coeff coeff_at) {
  Rational s(0);
  for (const auto& w : d.weyl_elements()) {
    Weight beta = w.apply(d.rho()) - d.rho();
    std::int64_t c = coeff_at(beta);
    if (c != 0) s += Rational(w.det() * c);
  }
  return s;
}

inline Rational st_constant_term(const RootDatum& d, const TorusPoly& f) {
  return st_constant_term(d, [&](const Weight& b) { return f.coeff(d.lattice_key(b)); });
}

/// Same constant term by expanding prod (1 - e^a) in full; independent check.
inline Rational st_constant_term_expanded(const RootDatum& d, const TorusPoly& f) {
  TorusPoly prod = f * TorusPoly::weyl_denominator_square(d);
  return Rational(prod.constant_term()) / Rational(static_cast<std::int64_t>(d.weyl_order()));
}

/// Total mass CT[(1/|W|) prod (1 - e^a)] computed by full expansion.
inline Rational st_mass_exact(const RootDatum& d) {
  return st_constant_term_expanded(d, TorusPoly::one(d));
}

inline Rational st_moment_exact(const RootDatum& d, const RepSpec& r, std::int64_t nu) {
  if (nu < 1) throw PreconditionError("nu must be >= 1");
  return st_constant_term(d, TorusPoly::from_weights(d, r.weights(d), nu));
}

inline double st_moment_numeric(const RootDatum& d, const RepSpec& r, std::int64_t nu, std::size_t points = 0,
                                unsigned threads = 0) {
  if (nu < 1) throw PreconditionError("nu must be >= 1");
  const TorusGrid grid = TorusGrid::for_rank(d.torus_rank(), points);
  const auto table = detail::unit_roots(grid.points);
  const auto roots = positive_root_frequencies(d);
  const FrequencyList f = frequencies_of(d, r.weights(d), nu);
  const double inv_w = 1.0 / static_cast<double>(d.weyl_order());
  auto body = [&](std::size_t idx) {
    const auto node = grid.node(idx);
    double dens = inv_w;
    for (const auto& k : roots) dens *= std::norm(1.0 - table[detail::phase_index(k, node, grid.points)]);
    cplx s = 0.0;
    for (std::size_t t = 0; t < f.k.size(); ++t) s += f.mult[t] * table[detail::phase_index(f.k[t], node, grid.points)];
    return s * dens;
  };
  cplx tot = deterministic_sum<cplx>(grid.size(), body, threads == 0 ? default_threads() : threads);
  return PlancherelDensity::real_part_checked(tot * grid.weight(), 1e-9);
}

/// Character of r as a torus Laurent polynomial.
inline TorusPoly character_poly(const RootDatum& d, const RepSpec& r, std::int64_t scale = 1) {
  return TorusPoly::from_weights(d, r.weights(d), scale);
}

/// integral of (tr r)^k against the Sato-Tate measure.
inline Rational trace_power_moment_exact(const RootDatum& d, const RepSpec& r, int k) {
  if (k < 0 || k > 8) throw PreconditionError("trace power must satisfy 0 <= k <= 8");
  const TorusPoly chi = character_poly(d, r);
  TorusPoly p = TorusPoly::one(d);
  for (int i = 0; i < k; ++i) p = p * chi;
  return st_constant_term(d, p);
}

struct ConvergenceRow {
  double q = 0;
  double beta_pl = 0;
  double beta_st = 0;
  double diff = 0;
  double q_diff = 0;
};

struct ConvergenceReport {
  HalfPowerLaurent beta_pl_symbolic;
  Rational beta_st;
  std::vector<ConvergenceRow> rows;
  bool nonincreasing = true;
  double max_q_diff = 0;
};

inline ConvergenceReport convergence_report(const SatakeEngine& eng, const RepSpec& r, std::int64_t nu,
                                            const std::vector<double>& q_list) {
  for (std::size_t i = 0; i < q_list.size(); ++i) {
    require_q(q_list[i]);
    if (i > 0 && !(q_list[i] > q_list[i - 1])) throw PreconditionError("q list must be strictly ascending");
  }
  ConvergenceReport rep;
  rep.beta_pl_symbolic = plancherel_moment_symbolic(eng, r, nu);
  rep.beta_st = st_moment_exact(eng.datum(), r, nu);
  const double st = to_double(rep.beta_st);
  double prev = 1e300;
  for (double q : q_list) {
    ConvergenceRow row;
    row.q = q;
    row.beta_pl = rep.beta_pl_symbolic.evaluate_double(q);
    row.beta_st = st;
    row.diff = std::abs(row.beta_pl - st);
    row.q_diff = q * row.diff;
    if (row.diff > prev * (1.0 + 1e-12) + 1e-15) rep.nonincreasing = false;
    prev = row.diff;
    rep.max_q_diff = std::max(rep.max_q_diff, row.q_diff);
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace satake
