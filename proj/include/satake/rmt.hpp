#pragma once

// Haar sampling on U(N), SO(2N), USp(2N); normalized eigenangles; Monte
// Carlo and limiting 1-level densities.

#include "satake/parallel.hpp"
#include "satake/symmetry.hpp"
#include "satake/test_function.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

namespace satake {

struct EigenangleSample {
  Ensemble ensemble = Ensemble::U;
  int n = 0;
  std::vector<double> angles;  // sorted, in [0, N]
};

constexpr int kMaxMatrixN = 128;

inline void require_matrix_size(int n) {
  if (n < 1 || n > kMaxMatrixN) throw PreconditionError("matrix size N out of range: need 1 <= N <= 128");
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed of sample i in a run seeded with `seed`.
inline std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t i) { return splitmix64(splitmix64(seed) ^ i); }

namespace detail {

template <class Rng>
Eigen::MatrixXcd complex_gaussian(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXcd z(rows, cols);
  const double s = 1.0 / std::sqrt(2.0);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) {
      const double re = g(rng);
      const double im = g(rng);
      z(i, j) = std::complex<double>(re * s, im * s);
    }
  return z;
}

}  // namespace detail

/// Haar-distributed matrix: N x N for U, 2N x 2N for SOeven and USp.
template <class Rng>
Eigen::MatrixXcd sample_haar_matrix(Ensemble e, int n, Rng& rng) {
  require_matrix_size(n);
  switch (e) {
    case Ensemble::U: {
      Eigen::MatrixXcd z = detail::complex_gaussian(n, n, rng);
      Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
      Eigen::MatrixXcd q = qr.householderQ();
      Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
      for (int j = 0; j < n; ++j) {
        const std::complex<double> d = r(j, j);
        const double a = std::abs(d);
        q.col(j) *= a > 0 ? d / a : 1.0;
      }
      return q;
    }
    case Ensemble::SOeven: {
      const int m = 2 * n;
      std::normal_distribution<double> g(0.0, 1.0);
      Eigen::MatrixXd z(m, m);
      for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i) z(i, j) = g(rng);
      Eigen::HouseholderQR<Eigen::MatrixXd> qr(z);
      Eigen::MatrixXd q = qr.householderQ();
      for (int j = 0; j < m; ++j)
        if (qr.matrixQR()(j, j) < 0) q.col(j) *= -1.0;
      if (q.determinant() < 0) q.col(m - 1) *= -1.0;
      return q.cast<std::complex<double>>();
    }
    case Ensemble::USp: {
      // Quaternionic Gram-Schmidt: each unit vector u comes with its partner
      // -J conj(u), J = [[0, I], [-I, 0]], so that A^T J A = J.
      const int m = 2 * n;
      Eigen::MatrixXcd a(m, m);
      auto partner = [n, m](const Eigen::VectorXcd& u) {
        Eigen::VectorXcd v(m);
        for (int i = 0; i < n; ++i) {
          v(i) = -std::conj(u(n + i));
          v(n + i) = std::conj(u(i));
        }
        return v;
      };
      for (int j = 0; j < n; ++j) {
        Eigen::VectorXcd c = detail::complex_gaussian(m, 1, rng).col(0);
        for (int pass = 0; pass < 2; ++pass)
          for (int k = 0; k < j; ++k) {
            c -= a.col(k) * a.col(k).dot(c);
            c -= a.col(n + k) * a.col(n + k).dot(c);
          }
        c /= c.norm();
        a.col(j) = c;
        a.col(n + j) = partner(c);
      }
      return a;
    }
  }
  throw PreconditionError("unknown ensemble");
}

/// max |A^* A - I|
inline double unitarity_residual(const Eigen::MatrixXcd& a) {
  Eigen::MatrixXcd r = a.adjoint() * a - Eigen::MatrixXcd::Identity(a.rows(), a.cols());
  return r.cwiseAbs().maxCoeff();
}

/// Raw eigenvalue phases in (-pi, pi].
inline std::vector<double> eigenphases(const Eigen::MatrixXcd& a) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(a, false);
  if (es.info() != Eigen::Success) throw NumericalError("eigenvalue solver did not converge");
  std::vector<double> th;
  for (int i = 0; i < es.eigenvalues().size(); ++i) th.push_back(std::arg(es.eigenvalues()(i)));
  return th;
}

/// Normalized angles: N theta / 2 pi on [0, N) for U; N |theta| / pi on
/// [0, N] for SOeven and USp, one representative per conjugate pair.
inline std::vector<double> normalize_angles(Ensemble e, int n, std::vector<double> th) {
  std::vector<double> out;
  if (e == Ensemble::U) {
    for (double t : th) {
      double a = t < 0 ? t + 2.0 * std::numbers::pi : t;
      out.push_back(std::clamp(n * a / (2.0 * std::numbers::pi), 0.0, static_cast<double>(n)));
    }
  } else {
    for (auto& t : th) t = std::abs(t);
    std::sort(th.begin(), th.end());
    for (std::size_t i = 0; i < th.size(); i += 2)
      out.push_back(std::clamp(n * th[i] / std::numbers::pi, 0.0, static_cast<double>(n)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// |theta| of a unitary matrix from the Hermitian part: A + A^* has
/// eigenvalues 2 cos theta. Several times cheaper than the general solver;
/// the angle loses precision (~1e-8) only where cos theta is near +-1.
inline std::vector<double> absolute_eigenphases(const Eigen::MatrixXcd& a) {
  const Eigen::MatrixXcd h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalError("eigenvalue solver did not converge");
  std::vector<double> th;
  for (int i = 0; i < es.eigenvalues().size(); ++i) th.push_back(std::acos(std::clamp(es.eigenvalues()(i), -1.0, 1.0)));
  return th;
}

inline EigenangleSample sample_haar(Ensemble e, int n, std::uint64_t seed) {
  require_matrix_size(n);
  std::mt19937_64 rng(seed);
  EigenangleSample s;
  s.ensemble = e;
  s.n = n;
  const Eigen::MatrixXcd a = sample_haar_matrix(e, n, rng);
  // SOeven and USp only need |theta|, eigenvalues come in conjugate pairs
  s.angles = normalize_angles(e, n, e == Ensemble::U ? eigenphases(a) : absolute_eigenphases(a));
  return s;
}

/// Linear statistic whose mean tends to the integral of Phi W over the line.
inline double one_level_statistic(const EigenangleSample& s, const TestFunctionPair& pair) {
  double acc = 0.0;
  for (double t : s.angles) {
    if (s.ensemble == Ensemble::U) {
      const double c = t > 0.5 * s.n ? t - s.n : t;
      acc += pair.phi(c);
    } else {
      acc += pair.phi(t) + pair.phi(-t);
    }
  }
  return acc;
}

struct MonteCarloEstimate {
  double estimate = 0;
  double stderr_ = 0;
};

/// Monte Carlo mean of the statistic over Haar samples with derived seeds.
template <class Stat>
MonteCarloEstimate empirical_mean(Ensemble e, int n, std::size_t samples, std::uint64_t seed, Stat stat,
                                  unsigned threads = 0) {
  require_matrix_size(n);
  std::vector<double> vals(samples);
  constexpr std::size_t block = 16;
  const std::size_t nblocks = (samples + block - 1) / block;
  parallel_blocks(nblocks, threads == 0 ? default_threads() : threads, [&](std::size_t b) {
    for (std::size_t i = b * block; i < std::min(samples, (b + 1) * block); ++i)
      vals[i] = stat(sample_haar(e, n, sample_seed(seed, i)));
  });
  MonteCarloEstimate m;
  if (samples == 0) return m;
  double s = 0;
  for (double v : vals) s += v;
  m.estimate = s / static_cast<double>(samples);
  if (samples > 1) {
    double ss = 0;
    for (double v : vals) ss += (v - m.estimate) * (v - m.estimate);
    m.stderr_ = std::sqrt(ss / static_cast<double>(samples - 1) / static_cast<double>(samples));
  }
  return m;
}

inline MonteCarloEstimate empirical_one_level(Ensemble e, int n, std::size_t samples, const TestFunctionPair& pair,
                                              std::uint64_t seed, unsigned threads = 0) {
  if (samples < 100) throw PreconditionError("need at least 100 samples");
  return empirical_mean(e, n, samples, seed, [&](const EigenangleSample& s) { return one_level_statistic(s, pair); },
                        threads);
}

inline double sinc_2pi(double x) {
  const double u = 2.0 * std::numbers::pi * x;
  if (std::abs(u) < 1e-8) return 1.0 - u * u / 6.0;
  return std::sin(u) / u;
}

/// W(G)(x), extended evenly.
inline double limit_density(Ensemble e, double x) {
  switch (e) {
    case Ensemble::U: return 1.0;
    case Ensemble::SOeven: return 1.0 + sinc_2pi(x);
    case Ensemble::USp: return 1.0 - sinc_2pi(x);
  }
  return 0.0;
}

/// Closed form of the integral of Phi W(G), valid for Phi-hat supported in (-1, 1).
inline double limit_pairing(Ensemble e, const TestFunctionPair& pair) {
  if (!(pair.support() < 1.0)) throw PreconditionError("limit pairing needs Phi-hat supported inside (-1,1)");
  switch (e) {
    case Ensemble::U: return pair.phi_hat0();
    case Ensemble::SOeven: return pair.phi_hat0() + 0.5 * pair.phi0();
    case Ensemble::USp: return pair.phi_hat0() - 0.5 * pair.phi0();
  }
  return 0.0;
}

namespace detail {

/// pi/2 - Si(z) for large z by the auxiliary asymptotic series.
inline double si_complement_large(double z) {
  double f = 0, g = 0, tf = 1.0 / z, tg = 1.0 / (z * z);
  for (int k = 0; k < 12; ++k) {
    f += tf;
    g += tg;
    tf *= -static_cast<double>((2 * k + 1) * (2 * k + 2)) / (z * z);
    tg *= -static_cast<double>((2 * k + 2) * (2 * k + 3)) / (z * z);
  }
  return f * std::cos(z) + g * std::sin(z);
}

}  // namespace detail

/// Numeric check of the Fejer pairing: adaptive Gauss-Kronrod on unit cells
/// of the Phi zero lattice, plus the exact tail of Phi beyond the window.
inline double limit_pairing_numeric(Ensemble e, const TestFunctionPair& pair, int cells = 2000) {
  using boost::math::quadrature::gauss_kronrod;
  const double h = 1.0 / pair.delta;
  double s = 0;
  auto f = [&](double x) { return pair.phi(x) * limit_density(e, x); };
  for (int m = 0; m < cells; ++m) s += gauss_kronrod<double, 31>::integrate(f, m * h, (m + 1) * h, 8, 1e-13);
  const double x_end = cells * h;
  const double a = std::numbers::pi * pair.delta;
  // integral_X^inf sin^2(ax)/x^2 dx = sin^2(aX)/X + a (pi/2 - Si(2aX))
  const double sx = std::sin(a * x_end);
  const double tail = (sx * sx / x_end + a * detail::si_complement_large(2.0 * a * x_end)) / (std::numbers::pi * std::numbers::pi * pair.delta);
  // The oscillating sinc part of W decays like x^-3 beyond the window and is dropped.
  return 2.0 * (s + tail);
}

struct HistogramBin {
  double center = 0;
  double empirical = 0;
  double limit = 0;
};

inline std::vector<HistogramBin> eigenangle_histogram(Ensemble e, int n, std::size_t samples, int bins, double x_max,
                                                      std::uint64_t seed, unsigned threads = 0) {
  if (bins < 1) throw PreconditionError("need at least one bin");
  if (!(x_max > 0)) throw PreconditionError("histogram range must be positive");
  require_matrix_size(n);
  std::vector<EigenangleSample> all(samples);
  parallel_blocks(samples, threads == 0 ? default_threads() : threads,
                  [&](std::size_t i) { all[i] = sample_haar(e, n, sample_seed(seed, i)); });
  std::vector<double> counts(static_cast<std::size_t>(bins), 0.0);
  const double w = x_max / bins;
  for (const auto& s : all)
    for (double t : s.angles) {
      if (t >= x_max) continue;
      counts[static_cast<std::size_t>(std::min(bins - 1, static_cast<int>(t / w)))] += 1.0;
    }
  std::vector<HistogramBin> out;
  for (int b = 0; b < bins; ++b) {
    HistogramBin hb;
    hb.center = (b + 0.5) * w;
    hb.empirical = counts[static_cast<std::size_t>(b)] / (static_cast<double>(samples) * w);
    hb.limit = limit_density(e, hb.center);
    out.push_back(hb);
  }
  return out;
}

}  // namespace satake
