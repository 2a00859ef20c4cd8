#pragma once

// Invariant suite behind the `selftest` subcommand.

#include "satake/one_level.hpp"
#include "satake/rmt.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace satake::check {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// Root data of semisimple rank <= 4 used by the structural checks.
inline std::vector<RootDatum> small_data(int max_rank = 4) {
  std::vector<RootDatum> out;
  for (int r = 1; r <= max_rank; ++r) out.push_back(build_root_datum(CartanType::A, r));
  for (int r = 2; r <= max_rank; ++r) out.push_back(build_root_datum(CartanType::B, r));
  for (int r = 2; r <= max_rank; ++r) out.push_back(build_root_datum(CartanType::C, r));
  for (int r = 2; r <= max_rank; ++r) out.push_back(build_root_datum(CartanType::D, r));
  for (int n = 2; n <= max_rank; ++n) out.push_back(build_gl(n));
  return out;
}

/// Dominant integral weights of epsilon-norm <= bound.
inline std::vector<Weight> dominant_weights_in_ball(const RootDatum& d, std::int64_t bound) {
  const std::size_t n = d.ambient_dim();
  std::set<Weight> found;
  std::vector<std::int64_t> c(n, -bound);
  const auto basis = standard_basis(n);
  for (;;) {
    Weight v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = Frac(c[i]);
    v = d.canonical(v);
    if (d.is_integral(v) && d.is_dominant(v) && truncation_norm(d, basis, v) <= Frac(bound)) found.insert(v);
    std::size_t i = 0;
    while (i < n && c[i] == bound) c[i++] = -bound;
    if (i == n) break;
    ++c[i];
  }
  return {found.begin(), found.end()};
}

namespace detail {

inline bool is_single_character(const SphericalFunction& f, const Weight& lam) {
  return f.basis == SphericalBasis::Character && f.terms.size() == 1 && f.terms.begin()->first == lam &&
         f.terms.begin()->second == HalfPowerLaurent(1);
}

// Laurent polynomials on doubled coordinates, so half-integral rho fits.
using DoubledPoly = std::map<std::vector<std::int64_t>, std::int64_t>;

inline std::vector<std::int64_t> doubled(const Weight& v, std::int64_t den) {
  std::vector<std::int64_t> k;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    Frac x = v[i] * Frac(2 * den);
    if (x.denominator() != 1) throw NumericalError("weight does not fit the doubled lattice");
    k.push_back(x.numerator());
  }
  return k;
}

inline DoubledPoly alternant(const RootDatum& d, const Weight& v, std::int64_t den) {
  DoubledPoly p;
  for (const auto& w : d.weyl_elements()) {
    auto& c = p[doubled(d.canonical(w.apply(v)), den)];
    c += w.det();
    if (c == 0) p.erase(doubled(d.canonical(w.apply(v)), den));
  }
  return p;
}

inline DoubledPoly multiply(const DoubledPoly& a, const DoubledPoly& b) {
  DoubledPoly out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      std::vector<std::int64_t> k(ka.size());
      for (std::size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
      out[k] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace detail

inline CheckResult timed(const std::string& name, const std::function<CheckResult()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckResult r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.name = name;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

/// s_{lam,mu} = 0 off the dominance order, nonzero on the diagonal, and
/// forward(inverse(chi_lam)) = chi_lam.
inline CheckResult satake_triangularity_roundtrip(int max_rank = 4, std::int64_t bound = 3) {
  CheckResult r;
  std::size_t pairs = 0, roundtrips = 0;
  for (const auto& d : small_data(max_rank)) {
    SatakeEngine eng(d);
    const auto ws = dominant_weights_in_ball(d, bound);
    for (const auto& lam : ws) {
      for (const auto& mu : ws) {
        if (!d.in_root_lattice(lam - mu)) continue;
        ++pairs;
        const HalfPowerLaurent s = eng.alternating_sum(lam, mu);
        if (!d.leq(mu, lam) && !s.is_zero()) {
          std::ostringstream os;
          os << d.name() << ": nonzero s for " << lam << " vs " << mu;
          r.detail = os.str();
          return r;
        }
        if (lam == mu && s.is_zero()) {
          r.detail = d.name() + ": vanishing diagonal coefficient";
          return r;
        }
      }
      ++roundtrips;
      if (!detail::is_single_character(eng.forward(eng.inverse_character(lam)), lam)) {
        std::ostringstream os;
        os << d.name() << ": round trip fails at " << lam;
        r.detail = os.str();
        return r;
      }
    }
  }
  r.passed = true;
  r.detail = std::to_string(pairs) + " pairs, " + std::to_string(roundtrips) + " round trips";
  return r;
}

/// |s_{lam,mu}(q)| <= q^{-1} |W| max_w p(w(lam+rho) - (mu+rho)) for lam != mu.
inline CheckResult satake_coefficient_bound(int max_rank = 3, std::int64_t bound = 2) {
  CheckResult r;
  std::size_t checked = 0;
  for (const auto& d : small_data(max_rank)) {
    SatakeEngine eng(d);
    const auto ws = dominant_weights_in_ball(d, bound);
    for (const auto& lam : ws)
      for (const auto& mu : ws) {
        if (lam == mu || !d.in_root_lattice(lam - mu) || !d.leq(mu, lam)) continue;
        std::int64_t pmax = 0;
        for (const auto& w : d.weyl_elements())
          pmax = std::max(pmax, kostant_partition(eng.coroot_side(), w.apply(lam + d.rho()) - (mu + d.rho())));
        const HalfPowerLaurent s = eng.satake_coeff(lam, mu);
        for (int q : {2, 3, 5}) {
          ++checked;
          const Rational cap = Rational(static_cast<std::int64_t>(d.weyl_order()) * pmax) / Rational(q);
          // s may carry a half-integral power of q; its square never does
          auto sq = (s * s).evaluate(Rational(q));
          if (!sq) throw NumericalError("square of a Satake coefficient has half-integral exponents");
          if (*sq > cap * cap) {
            std::ostringstream os;
            os << d.name() << ": bound fails for " << lam << ", " << mu << " at q=" << q;
            r.detail = os.str();
            return r;
          }
        }
      }
  }
  r.passed = true;
  r.detail = std::to_string(checked) + " coefficient evaluations";
  return r;
}

/// Weyl group closed under products and inverses, permutes the roots, and has the classical order.
inline CheckResult weyl_closure() {
  CheckResult r;
  for (const auto& d : small_data(4)) {
    const auto& els = d.weyl_elements();
    std::set<SignedPermutation> set(els.begin(), els.end());
    if (set.size() != els.size() || els.size() != d.classical_weyl_order()) {
      r.detail = d.name() + ": Weyl order mismatch";
      return r;
    }
    for (const auto& a : els) {
      if (!set.count(a.inverse())) {
        r.detail = d.name() + ": not closed under inverses";
        return r;
      }
      for (const auto& b : els)
        if (!set.count(a.compose(b))) {
          r.detail = d.name() + ": not closed under products";
          return r;
        }
    }
    std::set<Weight> roots(d.roots().begin(), d.roots().end());
    for (const auto& w : els)
      for (const auto& a : d.roots())
        if (!roots.count(d.canonical(w.apply(a)))) {
          r.detail = d.name() + ": Weyl element does not permute roots";
          return r;
        }
  }
  r.passed = true;
  r.detail = "orders A1..A4, B2..B4, C2..C4, D2..D4, GL2..GL4";
  return r;
}

/// A_rho * chi_lam = A_{lam+rho}, with chi from Freudenthal.
inline CheckResult freudenthal_vs_division(std::int64_t max_label = 4) {
  CheckResult r;
  std::size_t checked = 0;
  for (const auto& d : small_data(2)) {
    const std::int64_t den = d.coordinate_denominator();
    const auto a_rho = detail::alternant(d, d.rho(), den);
    const std::size_t rank = static_cast<std::size_t>(d.rank());
    std::vector<std::int64_t> labels(rank, 0);
    for (;;) {
      Weight lam(d.ambient_dim());
      for (std::size_t i = 0; i < rank; ++i) lam = lam + Frac(labels[i]) * d.fundamental_weights()[i];
      lam = d.canonical(lam);
      if (d.is_integral(lam)) {
        detail::DoubledPoly chi;
        for (const auto& [mu, m] : weyl_character(d, lam)) chi[detail::doubled(mu, den)] += m;
        if (detail::multiply(a_rho, chi) != detail::alternant(d, lam + d.rho(), den)) {
          std::ostringstream os;
          os << d.name() << ": character of " << lam << " fails the alternant identity";
          r.detail = os.str();
          return r;
        }
        ++checked;
      }
      std::size_t i = 0;
      while (i < rank && labels[i] == max_label) labels[i++] = 0;
      if (i == rank) break;
      ++labels[i];
    }
  }
  r.passed = true;
  r.detail = std::to_string(checked) + " highest weights";
  return r;
}

/// Plancherel moments change by < 1e-9 when the grid is doubled.
inline CheckResult grid_doubling() {
  CheckResult r;
  double worst = 0;
  for (const auto& d : {build_root_datum(CartanType::A, 1), build_root_datum(CartanType::A, 2),
                        build_root_datum(CartanType::B, 2), build_root_datum(CartanType::C, 2),
                        build_root_datum(CartanType::B, 3)}) {
    for (double q : {2.0, 3.0, 5.0}) {
      const std::size_t m = TorusGrid::plancherel_points(d.torus_rank(), q);
      auto a = plancherel_moments_numeric(d, RepSpec::standard(), 3, q, m);
      auto b = plancherel_moments_numeric(d, RepSpec::standard(), 3, q, 2 * m);
      for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    }
  }
  std::ostringstream os;
  os << "max change " << worst;
  r.detail = os.str();
  r.passed = worst < 1e-9;
  return r;
}

/// Bit-identical results for 1 and several workers.
inline CheckResult thread_determinism() {
  CheckResult r;
  const RootDatum b2 = build_root_datum(CartanType::B, 2);
  auto p1 = plancherel_moments_numeric(b2, RepSpec::standard(), 3, 3.0, 0, 1);
  auto p4 = plancherel_moments_numeric(b2, RepSpec::standard(), 3, 3.0, 0, 4);
  const auto pair = TestFunctionPair::fejer(0.4);
  auto m1 = empirical_one_level(Ensemble::USp, 10, 200, pair, 11, 1);
  auto m4 = empirical_one_level(Ensemble::USp, 10, 200, pair, 11, 4);
  PipelineConfig cfg{b2};
  cfg.conductor = 1e9;
  cfg.threads = 1;
  const double d1 = model_one_level_density(cfg).d_model;
  cfg.threads = 4;
  const double d4 = model_one_level_density(cfg).d_model;
  r.passed = p1 == p4 && m1.estimate == m4.estimate && m1.stderr_ == m4.stderr_ && d1 == d4;
  r.detail = r.passed ? "plancherel, monte carlo and prime sums identical" : "results differ across thread counts";
  return r;
}

inline std::vector<CheckResult> run_all() {
  return {
      timed("satake_triangularity_roundtrip", [] { return satake_triangularity_roundtrip(); }),
      timed("satake_coefficient_bound", [] { return satake_coefficient_bound(); }),
      timed("weyl_closure", [] { return weyl_closure(); }),
      timed("freudenthal_vs_division", [] { return freudenthal_vs_division(); }),
      timed("grid_doubling", [] { return grid_doubling(); }),
      timed("thread_determinism", [] { return thread_determinism(); }),
  };
}

}  // namespace satake::check
