#pragma once

// Hall-Littlewood polynomials P_lambda(x; t) of GL_n by symmetrization,
// with t kept symbolic.

#include "satake/hecke_satake.hpp"
#include "satake/laurent.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

namespace satake {

/// Polynomial in x_1..x_n with coefficients in Q[t].
using HLPoly = std::map<std::vector<int>, RatPoly>;

namespace detail {

inline void hl_add(HLPoly& p, const std::vector<int>& e, const RatPoly& c) {
  if (c.is_zero()) return;
  auto it = p.find(e);
  if (it == p.end()) {
    p.emplace(e, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) p.erase(it);
}

inline HLPoly hl_mul(const HLPoly& a, const HLPoly& b) {
  HLPoly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      hl_add(r, e, ca * cb);
    }
  return r;
}

/// Exact quotient by (x_i - x_j); throws if not divisible.
inline HLPoly hl_div_binomial(const HLPoly& p, std::size_t i, std::size_t j) {
  // Synthetic division: repeatedly cancel the term with the top x_i power.
  HLPoly q;
  HLPoly rem = p;
  while (!rem.empty()) {
    auto top = rem.begin();
    for (auto it = rem.begin(); it != rem.end(); ++it)
      if (it->first[i] > top->first[i]) top = it;
    if (top->first[i] == 0) throw NumericalError("Hall-Littlewood numerator not divisible by the Vandermonde");
    std::vector<int> e = top->first;
    RatPoly c = top->second;
    e[i] -= 1;  // quotient term c x^e
    hl_add(q, e, c);
    // rem -= c x^e (x_i - x_j)
    std::vector<int> ei = e;
    ei[i] += 1;
    std::vector<int> ej = e;
    ej[j] += 1;
    hl_add(rem, ei, RatPoly() - c);
    hl_add(rem, ej, c);
  }
  return q;
}

inline RatPoly v_m(int m) {
  // prod_{k=1}^m (1 - t^k) / (1 - t)
  RatPoly r = RatPoly::constant(Rational(1));
  for (int k = 1; k <= m; ++k) {
    std::vector<Rational> c(static_cast<std::size_t>(k), Rational(1));  // 1 + t + ... + t^{k-1}
    r = r * RatPoly(c);
  }
  return r;
}

}  // namespace detail

/// P_lambda(x_1..x_n; t) for a partition lambda padded with zeros to length n.
inline HLPoly hall_littlewood_P(int n, std::vector<int> lam) {
  if (n < 1 || n > 4) throw PreconditionError("Hall-Littlewood oracle supports 1 <= n <= 4");
  if (static_cast<int>(lam.size()) > n) throw PreconditionError("partition has more parts than variables");
  lam.resize(static_cast<std::size_t>(n), 0);
  if (!std::is_sorted(lam.rbegin(), lam.rend()) || lam.back() < 0)
    throw PreconditionError("lambda must be a partition (weakly decreasing, nonnegative)");
  if (std::accumulate(lam.begin(), lam.end(), 0) > 4) throw PreconditionError("Hall-Littlewood oracle supports |lambda| <= 4");

  const std::size_t N = static_cast<std::size_t>(n);
  HLPoly base;
  base.emplace(std::vector<int>(lam.begin(), lam.end()), RatPoly::constant(Rational(1)));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) {
      HLPoly f;
      std::vector<int> ei(N, 0), ej(N, 0);
      ei[i] = 1;
      ej[j] = 1;
      f.emplace(ei, RatPoly::constant(Rational(1)));
      f.emplace(ej, RatPoly({Rational(0), Rational(-1)}));
      base = detail::hl_mul(base, f);
    }

  std::vector<int> perm(N);
  std::iota(perm.begin(), perm.end(), 0);
  HLPoly num;
  do {
    int sgn = 1;
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = a + 1; b < N; ++b)
        if (perm[a] > perm[b]) sgn = -sgn;
    for (const auto& [e, c] : base) {
      std::vector<int> we(N);
      for (std::size_t k = 0; k < N; ++k) we[static_cast<std::size_t>(perm[k])] = e[k];
      detail::hl_add(num, we, sgn > 0 ? c : RatPoly() - c);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) num = detail::hl_div_binomial(num, i, j);

  std::map<int, int> mult;
  for (int part : lam) ++mult[part];
  RatPoly v = RatPoly::constant(Rational(1));
  for (const auto& [part, m] : mult) v = v * detail::v_m(m);
  HLPoly out;
  for (const auto& [e, c] : num) detail::hl_add(out, e, c.exact_div(v));
  return out;
}

/// Coefficients of the monomial orbit sums m_mu (mu weakly decreasing).
inline std::map<std::vector<int>, RatPoly> orbit_coefficients(const HLPoly& p) {
  std::map<std::vector<int>, RatPoly> out;
  for (const auto& [e, c] : p)
    if (std::is_sorted(e.rbegin(), e.rend())) out.emplace(e, c);
  return out;
}

/// q^{<rho, lam>} P_lam(y; q^{-1}) as a spherical function in the orbit-sum basis of GL_n.
inline SphericalFunction hall_littlewood_satake_image(const RootDatum& gl, const std::vector<int>& lam) {
  if (!gl.is_gl()) throw PreconditionError("Hall-Littlewood comparison needs a GL_n datum");
  const int n = static_cast<int>(gl.ambient_dim());
  std::vector<int> padded = lam;
  padded.resize(static_cast<std::size_t>(n), 0);
  Weight lw(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) lw[static_cast<std::size_t>(i)] = padded[static_cast<std::size_t>(i)];
  const HalfPowerLaurent scale = HalfPowerLaurent::monomial(dot(gl.rho(), lw));
  SphericalFunction f(SphericalBasis::OrbitSum);
  for (const auto& [e, c] : orbit_coefficients(hall_littlewood_P(n, lam))) {
    Weight w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i)];
    f.add(w, c.at_inverse_q() * scale);
  }
  return f;
}

}  // namespace satake
