// Walk through Sp4: the test functions phi^(1), phi^(2), their Plancherel
// moments at a few primes, the indicator, and the one-level model.

#include "satake/satake.hpp"

#include <cstdio>

using namespace satake;

int main() {
  const RootDatum dual = dual_of_group("Sp,4");
  SatakeEngine eng(dual);
  const RepSpec std_rep = RepSpec::standard();
  std::printf("dual datum %s, |W| = %zu\n", dual.name().c_str(), dual.weyl_order());

  for (int nu = 1; nu <= 2; ++nu) {
    const HeckeElement h = eng.phi_nu(std_rep, nu);
    std::printf("phi^(%d):\n", nu);
    for (const auto& [lam, c] : h.terms) {
      std::ostringstream os;
      os << lam;
      std::printf("  tau%s  %s\n", os.str().c_str(), c.to_string().c_str());
    }
    const HalfPowerLaurent at1 = evaluate_at_identity(h);
    std::printf("  phi^(%d)(1) = %s\n", nu, at1.to_string().c_str());
    for (int p : {2, 3, 5, 7})
      std::printf("    p=%d exact %.12f  quadrature %.12f\n", p, at1.evaluate_double(p),
                  plancherel_moment_numeric(dual, std_rep, nu, p));
  }

  const auto v = symmetry_verdict(dual, std_rep);
  std::printf("Frobenius-Schur indicator %d -> %s, ensemble %s\n", v.s, to_string(v.type), to_string(v.rmt_ensemble));

  PipelineConfig cfg{dual};
  for (double c : {1e4, 1e6, 1e9, 1e12}) {
    cfg.conductor = c;
    const auto r = model_one_level_density(cfg);
    std::printf("C=%.0e  D_model %.6f  limit %.6f  error %.6f\n", c, r.d_model, *r.predicted, *r.error);
  }
}
