#pragma once

// Prime side of the explicit formula and the Plancherel main-term model of
// the 1-level density of a family.

#include "satake/parallel.hpp"
#include "satake/plancherel.hpp"
#include "satake/symmetry.hpp"
#include "satake/test_function.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <vector>

namespace satake {

constexpr std::int64_t kMaxSieve = 100000000;

/// Primes <= limit by the sieve of Eratosthenes.
inline std::vector<std::int64_t> sieve_primes(std::int64_t limit) {
  if (limit < 2 || limit > kMaxSieve) throw PreconditionError("sieve limit out of range: need 2 <= limit <= 1e8");
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  std::vector<std::int64_t> out;
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    out.push_back(i);
    for (std::int64_t j = i * i; j <= limit; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return out;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

namespace detail {
inline double prime_term(double log_p, std::int64_t nu, double log_c, const TestFunctionPair& pair, double re_beta) {
  const double y = static_cast<double>(nu) * log_p / log_c;
  const double h = pair.phi_hat(y);
  if (h == 0.0 || re_beta == 0.0) return 0.0;
  return -(log_p / log_c) * std::exp(-0.5 * static_cast<double>(nu) * log_p) * 2.0 * re_beta * h;
}
}  // namespace detail

/// -(log p / log C) p^{-nu/2} 2 Re(beta) Phi-hat(nu log p / log C)
inline double local_prime_term(std::int64_t p, std::int64_t nu, double conductor, const TestFunctionPair& pair,
                               std::complex<double> beta) {
  if (!is_prime(p)) throw PreconditionError("p must be prime");
  if (nu < 1) throw PreconditionError("nu must be >= 1");
  if (!(conductor >= 100.0)) throw PreconditionError("conductor must be >= 100");
  return detail::prime_term(std::log(static_cast<double>(p)), nu, std::log(conductor), pair, beta.real());
}

struct PipelineConfig {
  RootDatum dual;
  RepSpec rep = RepSpec::standard();
  double conductor = 1e10;
  TestFunctionPair pair = TestFunctionPair::fejer(0.4);
  std::int64_t nu_max = 2;
  double theta = 0.499;
  unsigned threads = 0;

  std::int64_t prime_limit() const {
    const double lim = std::ceil(std::pow(conductor, pair.delta));
    return static_cast<std::int64_t>(std::min<double>(lim, static_cast<double>(kMaxSieve)));
  }

  void validate() const {
    if (!(conductor >= 100.0)) throw PreconditionError("conductor must be >= 100");
    if (nu_max < 1) throw PreconditionError("nu_max must be >= 1");
    if (!(theta >= 0.0 && theta < 0.5)) throw PreconditionError("Ramanujan exponent theta must lie in [0, 1/2)");
    if (prime_limit() < 2) throw PreconditionError("prime limit below 2; raise the conductor or delta");
  }
};

/// Per-class moment tables for Cebotarev weighting; moments[nu-1] = phi^{(nu)}(1).
struct ClassMoments {
  std::int64_t size = 1;
  std::vector<HalfPowerLaurent> moments;
};

struct OneLevelResult {
  double d_model = 0;
  std::optional<double> predicted;
  std::optional<double> error;
  std::vector<double> nu_contribution;  // index nu-1
  double tail_bound = 0;
  std::size_t primes_used = 0;
  std::int64_t prime_limit = 0;
  std::size_t nonzero_beyond_cutoff = 0;
  int s = 0;
  bool reducible = false;
};

/// Phi-hat(0) - s(r) Phi(0) / 2 for nontrivial irreducible r.
inline double predicted_limit(const PipelineConfig& cfg) {
  RepDiagnostics diag = diagnose(cfg.dual, cfg.rep);
  if (!diag.irreducible || diag.contains_trivial)
    throw PreconditionError("limit prediction needs an irreducible representation without trivial summand");
  const auto fs = frobenius_schur(cfg.dual, cfg.rep);
  return cfg.pair.phi_hat0() - 0.5 * static_cast<double>(fs.s) * cfg.pair.phi0();
}

inline std::vector<HalfPowerLaurent> moment_table(const PipelineConfig& cfg) {
  SatakeEngine eng(cfg.dual);
  std::vector<HalfPowerLaurent> m;
  for (std::int64_t nu = 1; nu <= cfg.nu_max; ++nu) m.push_back(plancherel_moment_symbolic(eng, cfg.rep, nu));
  return m;
}

namespace detail {

template <class Beta>
OneLevelResult assemble(const PipelineConfig& cfg, Beta beta_at) {
  cfg.validate();
  OneLevelResult res;
  res.prime_limit = cfg.prime_limit();
  const auto primes = sieve_primes(res.prime_limit);
  res.primes_used = primes.size();
  const double log_c = std::log(cfg.conductor);
  const unsigned threads = cfg.threads == 0 ? default_threads() : cfg.threads;
  for (std::int64_t nu = 1; nu <= cfg.nu_max; ++nu) {
    auto body = [&](std::size_t i) {
      const std::int64_t p = primes[i];
      return prime_term(std::log(static_cast<double>(p)), nu, log_c, cfg.pair, beta_at(p, nu));
    };
    res.nu_contribution.push_back(deterministic_sum<double>(primes.size(), body, threads));
    for (std::int64_t p : primes) {
      const double lp = std::log(static_cast<double>(p));
      if (static_cast<double>(nu) * lp > cfg.pair.support() * log_c && prime_term(lp, nu, log_c, cfg.pair, 1.0) != 0.0)
        ++res.nonzero_beyond_cutoff;
    }
  }
  res.d_model = cfg.pair.phi_hat0();
  for (double c : res.nu_contribution) res.d_model += c;

  // nu > nu_max remainder with |beta| <= d and |Phi-hat| <= 1
  const double d = static_cast<double>(cfg.rep.dim(cfg.dual));
  const double e = 0.5 * static_cast<double>(cfg.nu_max + 1);
  double t = 0;
  for (std::int64_t p : primes) {
    const double lp = std::log(static_cast<double>(p));
    if (static_cast<double>(cfg.nu_max + 1) * lp > cfg.pair.support() * log_c) break;
    t += lp * std::exp(-e * lp) / (1.0 - std::exp(-0.5 * lp));
  }
  res.tail_bound = 2.0 * d * t / log_c;

  RepDiagnostics diag = diagnose(cfg.dual, cfg.rep);
  res.reducible = !diag.irreducible;
  res.s = static_cast<int>(frobenius_schur(cfg.dual, cfg.rep).s);
  if (diag.irreducible && !diag.contains_trivial) {
    res.predicted = predicted_limit(cfg);
    res.error = std::abs(res.d_model - *res.predicted);
  }
  return res;
}

}  // namespace detail

/// Phi-hat(0) + sum_p sum_{nu <= nu_max} local terms with Plancherel moments.
inline OneLevelResult model_one_level_density(const PipelineConfig& cfg) {
  const auto m = moment_table(cfg);
  return detail::assemble(cfg, [&](std::int64_t p, std::int64_t nu) {
    return m[static_cast<std::size_t>(nu - 1)].evaluate_double(static_cast<double>(p));
  });
}

/// Model with moments averaged over Galois classes by class size.
inline OneLevelResult model_one_level_density_weighted(const PipelineConfig& cfg, const std::vector<ClassMoments>& classes) {
  if (classes.empty()) throw PreconditionError("class list is empty");
  double total = 0;
  for (const auto& c : classes) {
    if (c.size <= 0) throw PreconditionError("class sizes must be positive");
    if (static_cast<std::int64_t>(c.moments.size()) < cfg.nu_max) throw PreconditionError("class moment table shorter than nu_max");
    total += static_cast<double>(c.size);
  }
  return detail::assemble(cfg, [&](std::int64_t p, std::int64_t nu) {
    double s = 0;
    for (const auto& c : classes)
      s += static_cast<double>(c.size) * c.moments[static_cast<std::size_t>(nu - 1)].evaluate_double(static_cast<double>(p));
    return s / total;
  });
}

struct StudyRow {
  double conductor = 0;
  OneLevelResult result;
};

struct ConvergenceStudy {
  std::vector<StudyRow> rows;
  bool strictly_decreasing = false;
  bool final_below_initial = false;
  double final_over_initial = 0;
};

inline ConvergenceStudy convergence_study(PipelineConfig cfg, const std::vector<double>& conductors) {
  if (conductors.size() < 3) throw PreconditionError("conductor list needs at least 3 entries");
  for (std::size_t i = 1; i < conductors.size(); ++i)
    if (!(conductors[i] > conductors[i - 1])) throw PreconditionError("conductor list must be strictly ascending");
  ConvergenceStudy st;
  for (double c : conductors) {
    cfg.conductor = c;
    st.rows.push_back({c, model_one_level_density(cfg)});
  }
  if (st.rows.front().result.error) {
    st.strictly_decreasing = true;
    for (std::size_t i = 1; i < st.rows.size(); ++i)
      if (!(*st.rows[i].result.error < *st.rows[i - 1].result.error)) st.strictly_decreasing = false;
    const double e0 = *st.rows.front().result.error, e1 = *st.rows.back().result.error;
    st.final_below_initial = e1 < e0;
    st.final_over_initial = e0 > 0 ? e1 / e0 : 0;
  }
  return st;
}

struct LocalSatakeData {
  std::int64_t p = 2;
  std::vector<std::complex<double>> alphas;
};

struct PrimeSideResult {
  double value = 0;
  double conductor_term = 0;
  double prime_sum = 0;
  std::int64_t max_nu = 0;
  double truncation_bound = 0;
};

/// Conductor term Phi-hat(0) log q / log C plus the local power-sum terms.
inline PrimeSideResult explicit_formula_prime_side(const std::vector<LocalSatakeData>& data, std::int64_t q_conductor,
                                                   const TestFunctionPair& pair, double c_scale, double theta = 0.499) {
  if (q_conductor < 1) throw PreconditionError("conductor must be a positive integer");
  if (!(c_scale >= 100.0)) throw PreconditionError("scale C must be >= 100");
  if (!(theta >= 0.0 && theta < 0.5)) throw PreconditionError("theta must lie in [0, 1/2)");
  PrimeSideResult r;
  const double log_c = std::log(c_scale);
  r.conductor_term = pair.phi_hat0() * std::log(static_cast<double>(q_conductor)) / log_c;
  for (const auto& loc : data) {
    if (!is_prime(loc.p)) throw PreconditionError("local data must be indexed by primes");
    const double lp = std::log(static_cast<double>(loc.p));
    const double bound = std::pow(static_cast<double>(loc.p), theta) * (1.0 + 1e-12);
    for (const auto& a : loc.alphas)
      if (std::abs(a) > bound) throw PreconditionError("Satake parameter violates the Ramanujan bound p^theta");
    const double d = static_cast<double>(loc.alphas.size());
    for (std::int64_t nu = 1;; ++nu) {
      if (static_cast<double>(nu) * lp >= pair.support() * log_c) break;
      if (static_cast<double>(nu) * (0.5 - theta) * lp > 40.0) {
        // remaining terms are below d e^{-40} each, geometrically decaying
        r.truncation_bound += 2.0 * d * (lp / log_c) * std::exp(-40.0) / (1.0 - std::exp(-(0.5 - theta) * lp));
        break;
      }
      std::complex<double> beta = 0;
      for (const auto& a : loc.alphas) beta += std::pow(a, static_cast<double>(nu));
      r.prime_sum += detail::prime_term(lp, nu, log_c, pair, beta.real());
      r.max_nu = std::max(r.max_nu, nu);
    }
  }
  r.value = r.conductor_term + r.prime_sum;
  return r;
}

/// psi(z) for Re z > 0: recurrence up to Re z >= 10, then the asymptotic series.
inline std::complex<double> digamma(std::complex<double> z) {
  if (!(z.real() > 0.0)) throw PreconditionError("digamma needs Re z > 0");
  std::complex<double> acc = 0;
  while (z.real() < 10.0) {
    acc -= 1.0 / z;
    z += 1.0;
  }
  const std::complex<double> iz2 = 1.0 / (z * z);
  // Bernoulli terms B_{2k} / (2k z^{2k})
  static const double c[] = {1.0 / 12, -1.0 / 120, 1.0 / 252, -1.0 / 240, 1.0 / 132, -691.0 / 32760, 1.0 / 12};
  std::complex<double> series = 0, pw = iz2;
  for (double ck : c) {
    series += ck * pw;
    pw *= iz2;
  }
  return acc + std::log(z) - 0.5 / z - series;
}

struct ArchimedeanTerm {
  std::complex<double> quadrature;
  std::complex<double> leading;
  double difference = 0;
  double norm_bound = 0;  // ||Psi||_1 + ||x Psi||_1
};

/// integral psi(1/2 - mu + ix) Psi(x) dx with Psi(x) = Phi-hat(2 pi x / log C),
/// against its leading term Psi-hat(0) log(1/2 - mu).
inline ArchimedeanTerm archimedean_term(std::complex<double> mu, const TestFunctionPair& pair, double conductor) {
  if (!(0.5 - mu.real() > 0.0)) throw PreconditionError("archimedean term needs Re(1/2 - mu) > 0");
  if (!(conductor > 1.0)) throw PreconditionError("conductor must exceed 1");
  using boost::math::quadrature::gauss_kronrod;
  const double log_c = std::log(conductor);
  const double L = pair.support() * log_c / (2.0 * std::numbers::pi);
  auto psi_fn = [&](double x) { return pair.phi_hat(2.0 * std::numbers::pi * x / log_c); };
  auto re = [&](double x) { return (digamma(0.5 - mu + std::complex<double>(0, x)) * psi_fn(x)).real(); };
  auto im = [&](double x) { return (digamma(0.5 - mu + std::complex<double>(0, x)) * psi_fn(x)).imag(); };
  ArchimedeanTerm t;
  double qr = 0, qi = 0;
  for (double a : {-L, 0.0}) {
    qr += gauss_kronrod<double, 31>::integrate(re, a, a + L, 12, 1e-12);
    qi += gauss_kronrod<double, 31>::integrate(im, a, a + L, 12, 1e-12);
  }
  t.quadrature = {qr, qi};
  const double psi_hat0 = L;  // integral of the triangle of half-width L
  t.leading = psi_hat0 * std::log(0.5 - mu);
  t.difference = std::abs(t.quadrature - t.leading);
  t.norm_bound = L + L * L / 3.0;
  return t;
}

/// Sum of archimedean_term over synthetic factors mu_1..mu_d, each with Re mu <= theta.
inline ArchimedeanTerm archimedean_term(const std::vector<std::complex<double>>& mus, const TestFunctionPair& pair,
                                        double conductor, double theta = 0.499) {
  if (mus.empty()) throw PreconditionError("mu list is empty");
  ArchimedeanTerm tot;
  for (const auto& mu : mus) {
    if (mu.real() > theta) throw PreconditionError("archimedean parameter violates Re mu <= theta");
    const ArchimedeanTerm t = archimedean_term(mu, pair, conductor);
    tot.quadrature += t.quadrature;
    tot.leading += t.leading;
    tot.norm_bound += t.norm_bound;
  }
  tot.difference = std::abs(tot.quadrature - tot.leading);
  return tot;
}

}  // namespace satake
