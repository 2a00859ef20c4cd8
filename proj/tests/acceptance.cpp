// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "satake/check/selftest.hpp"
#include "satake/satake.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

using namespace satake;

namespace {

struct Outcome {
  std::vector<std::string> failed;
  std::ostringstream detail;
  bool ok() const { return failed.empty(); }
  void require(bool cond, const std::string& what) {
    if (!cond) failed.push_back(what);
  }
};

int failures = 0;

// limit_s <= 0: no time limit
void criterion(int n, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0) o.require(secs < limit_s, "time " + std::to_string(secs) + "s over limit " + std::to_string(limit_s) + "s");
  if (!o.ok()) ++failures;
  std::string msg;
  for (const auto& f : o.failed) msg += (msg.empty() ? "" : "; ") + f;
  const std::string info = o.detail.str();
  if (!info.empty()) msg += (msg.empty() ? "" : " | ") + info;
  std::printf("%s criterion %d: %s [%.2fs] %s\n", o.ok() ? "PASS" : "FAIL", n, title, secs, msg.c_str());
  std::fflush(stdout);
}

RootDatum dt(CartanType t, int r) { return build_root_datum(t, r); }

std::string str(const HalfPowerLaurent& h) { return h.is_zero() ? "0" : h.to_string(); }

void gl_identities(Outcome& o) {
  for (int d = 2; d <= 5; ++d) {
    const RootDatum gl = build_gl(d);
    SatakeEngine eng(gl);
    const auto n = static_cast<std::size_t>(d);
    HeckeElement e1;
    e1.add(Weight::unit(n, 0), HalfPowerLaurent::monomial(1 - d));
    HeckeElement e2;
    e2.add(Frac(2) * Weight::unit(n, 0), HalfPowerLaurent::monomial(2 - 2 * d));
    e2.add(Weight::unit(n, 0) + Weight::unit(n, 1),
           (HalfPowerLaurent(1) - HalfPowerLaurent::q()) * HalfPowerLaurent::monomial(2 - 2 * d));
    o.require(eng.phi_nu(RepSpec::standard(), 1).terms == e1.terms, "GL" + std::to_string(d) + " power sum 1");
    o.require(eng.phi_nu(RepSpec::standard(), 2).terms == e2.terms, "GL" + std::to_string(d) + " power sum 2");
  }
  o.detail << "GL2..GL5 both power sums";
}

void claimed_values(Outcome& o) {
  // claimed: phi1(1) = 0, phi2(1) = +1 for Sp and SO even, -1 for SO odd
  std::vector<std::string> cases;
  for (int n = 1; n <= 3; ++n) cases.push_back("Sp," + std::to_string(2 * n));
  for (int n = 2; n <= 4; ++n) cases.push_back("SO," + std::to_string(2 * n));
  for (int n = 1; n <= 3; ++n) cases.push_back("SO," + std::to_string(2 * n + 1));
  std::ostringstream got;
  std::size_t bad = 0, total = 0;
  for (const auto& c : cases) {
    const RootDatum d = dual_of_group(c);
    SatakeEngine eng(d);
    const int second = c.rfind("Sp", 0) == 0 || d.cartan_type() == CartanType::D ? 1 : -1;
    for (int nu = 1; nu <= 2; ++nu) {
      const HalfPowerLaurent want(nu == 1 ? 0 : second);
      const HalfPowerLaurent have = plancherel_moment_symbolic(eng, RepSpec::standard(), nu);
      ++total;
      if (!(have == want)) {
        ++bad;
        got << c << " phi" << nu << "(1)=" << str(have) << " (expected " << str(want) << "); ";
      }
    }
  }
  o.require(bad == 0, std::to_string(bad) + "/" + std::to_string(total) + " values differ: " + got.str());
  if (o.ok()) o.detail << total << " values";
}

void hall_littlewood(Outcome& o) {
  std::size_t count = 0;
  for (int n = 2; n <= 4; ++n) {
    const RootDatum gl = build_gl(n);
    SatakeEngine eng(gl);
    std::function<void(std::vector<int>, int, int)> rec = [&](std::vector<int> lam, int left, int cap) {
      if (!lam.empty() && static_cast<int>(lam.size()) <= n) {
        Weight w(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < lam.size(); ++i) w[i] = Frac(lam[i]);
        const auto lhs = eng.character_to_orbit(eng.forward_tau(w));
        const auto rhs = hall_littlewood_satake_image(gl, lam);
        ++count;
        std::ostringstream os;
        os << "GL" << n << " " << w;
        o.require(lhs.terms == rhs.terms, os.str());
      }
      if (static_cast<int>(lam.size()) == n) return;
      for (int part = std::min(left, cap); part >= 1; --part) {
        auto next = lam;
        next.push_back(part);
        rec(next, left - part, part);
      }
    };
    rec({}, 4, 4);
    // lambda = 0 as well
    o.require(check::detail::is_single_character(eng.forward_tau(Weight(static_cast<std::size_t>(n))), Weight(static_cast<std::size_t>(n))),
              "GL" + std::to_string(n) + " lambda=0");
  }
  if (o.ok()) o.detail << count << " partitions";
}

void plancherel_cross(Outcome& o) {
  double worst = 0;
  for (const auto& d : {dt(CartanType::A, 1), dt(CartanType::A, 2), dt(CartanType::B, 2), dt(CartanType::C, 2), dt(CartanType::B, 3)}) {
    SatakeEngine eng(d);
    for (int q : {2, 3, 4, 5, 25, 121}) {
      const auto num = plancherel_moments_numeric(d, RepSpec::standard(), 3, q);
      for (int nu = 1; nu <= 3; ++nu) {
        const auto sym = plancherel_moment_symbolic(eng, RepSpec::standard(), nu);
        const auto exact = sym.evaluate(Rational(q));
        const double ex = exact ? to_double(*exact) : sym.evaluate_double(q);
        const double err = std::abs(num[static_cast<std::size_t>(nu - 1)] - ex);
        worst = std::max(worst, err);
        if (err > 1e-8) o.require(false, d.name() + " q=" + std::to_string(q) + " nu=" + std::to_string(nu) + " err=" + std::to_string(err));
      }
    }
  }
  if (o.ok()) o.detail << "max abs err " << worst;
}

void triangle(Outcome& o) {
  struct Case { const char* label; RootDatum d; RepSpec r; std::int64_t s; };
  std::vector<Case> cases = {
      {"SO3 std", dual_of_group("SO,3"), RepSpec::standard(), -1}, {"SO5 std", dual_of_group("SO,5"), RepSpec::standard(), -1},
      {"SO7 std", dual_of_group("SO,7"), RepSpec::standard(), -1}, {"Sp2 std", dual_of_group("Sp,2"), RepSpec::standard(), 1},
      {"Sp4 std", dual_of_group("Sp,4"), RepSpec::standard(), 1},  {"SO4 std", dual_of_group("SO,4"), RepSpec::standard(), 1},
      {"SO6 std", dual_of_group("SO,6"), RepSpec::standard(), 1},  {"SL2 adj", dual_of_group("PGL,2"), RepSpec::adjoint(), 1},
      {"SL3 std", dual_of_group("PGL,3"), RepSpec::standard(), 0},
  };
  std::ostringstream vals;
  for (const auto& c : cases) {
    SatakeEngine eng(c.d);
    const auto fs = frobenius_schur(c.d, c.r).s;
    const auto st = st_moment_exact(c.d, c.r, 2);
    const auto e = second_moment_expansion(eng, c.r);  // throws on a positive q-power
    const bool ok = st == Rational(fs) && e.constant_term == Rational(fs) && fs == c.s;
    o.require(ok, std::string(c.label) + " s=" + std::to_string(fs));
    vals << c.label << ":" << fs << " ";
  }
  if (o.ok()) o.detail << vals.str();
}

void sato_tate(Outcome& o) {
  std::size_t n = 0;
  for (int r = 1; r <= 6; ++r) o.require(st_mass_exact(dt(CartanType::A, r)) == Rational(1), "mass A" + std::to_string(r)), ++n;
  for (int r = 1; r <= 4; ++r) {
    o.require(st_mass_exact(dt(CartanType::B, r)) == Rational(1), "mass B" + std::to_string(r));
    o.require(st_mass_exact(dt(CartanType::C, r)) == Rational(1), "mass C" + std::to_string(r));
    n += 2;
  }
  for (int r = 2; r <= 4; ++r) o.require(st_mass_exact(dt(CartanType::D, r)) == Rational(1), "mass D" + std::to_string(r)), ++n;
  for (int d = 2; d <= 5; ++d) o.require(st_mass_exact(build_gl(d)) == Rational(1), "mass GL" + std::to_string(d)), ++n;
  const RootDatum a1 = dt(CartanType::A, 1);
  const std::int64_t want[] = {1, 2, 5};
  for (int i = 0; i < 3; ++i) {
    const auto m = trace_power_moment_exact(a1, RepSpec::standard(), 2 * (i + 1));
    o.require(m == Rational(want[i]), "trace moment k=" + std::to_string(2 * (i + 1)));
  }
  if (o.ok()) o.detail << n << " data with mass 1, trace moments 1 2 5";
}

void pairing(Outcome& o) {
  for (double delta : {0.3, 0.5, 0.9}) {
    const auto pair = TestFunctionPair::fejer(delta);
    for (auto e : {Ensemble::U, Ensemble::SOeven, Ensemble::USp}) {
      const double err = std::abs(limit_pairing_numeric(e, pair) - limit_pairing(e, pair));
      if (err > 1e-6) o.require(false, std::string(to_string(e)) + " delta=" + std::to_string(delta) + " numeric err " + std::to_string(err));
    }
  }
  const auto pair = TestFunctionPair::fejer(0.5);
  for (auto e : {Ensemble::U, Ensemble::SOeven, Ensemble::USp}) {
    const auto m = empirical_one_level(e, 40, 4000, pair, 20240601);
    const double lim = limit_pairing(e, pair);
    const double dist = std::abs(m.estimate - lim);
    o.require(dist <= 3 * m.stderr_ + 0.05, std::string(to_string(e)) + " MC " + std::to_string(m.estimate));
    o.detail << to_string(e) << " " << m.estimate << "+-" << m.stderr_ << " vs " << lim << "; ";
  }
}

void one_level(Outcome& o) {
  const std::vector<double> ladder = {1e4, 1e6, 1e9, 1e12};
  struct Case { const char* label; RootDatum d; };
  for (const auto& c : {Case{"Sp4", dual_of_group("Sp,4")}, Case{"SO5", dual_of_group("SO,5")}}) {
    PipelineConfig cfg{c.d};
    cfg.pair = TestFunctionPair::fejer(0.4);
    cfg.conductor = ladder.front();
    PipelineConfig top_cfg = cfg;
    top_cfg.conductor = ladder.back();
    o.require(top_cfg.prime_limit() <= 100000, std::string(c.label) + " sieve above 1e5");
    const auto st = convergence_study(cfg, ladder);
    std::ostringstream errs;
    for (const auto& row : st.rows) errs << *row.result.error << " ";
    o.require(st.strictly_decreasing, std::string(c.label) + " errors not strictly decreasing: " + errs.str());
    o.require(st.final_over_initial <= 0.5,
              std::string(c.label) + " final/initial " + std::to_string(st.final_over_initial) + " above 0.5");
    const auto& top = st.rows.back().result.nu_contribution;
    const double ratio = std::abs(top[0]) / std::abs(top[1]);
    o.require(ratio < 0.1, std::string(c.label) + " |nu1|/|nu2| " + std::to_string(ratio) + " at top");
    o.detail << c.label << " errors " << errs.str() << "ratio " << st.final_over_initial << " nu1/nu2 " << ratio << "; ";
  }
}

void property_suites(Outcome& o) {
  for (const auto& r : check::run_all()) {
    o.require(r.passed, r.name + ": " + r.detail);
    o.detail << r.name << " " << r.seconds << "s; ";
  }
}

}  // namespace

int main() {
  criterion(1, "GL Satake identities", 1, gl_identities);
  criterion(2, "classical test-function values at the identity", 5, claimed_values);
  criterion(3, "Hall-Littlewood oracle", 10, hall_littlewood);
  criterion(4, "Plancherel numeric vs exact", 120, plancherel_cross);
  criterion(5, "indicator / Sato-Tate / q-limit triangle", 30, triangle);
  criterion(6, "Sato-Tate mass and trace moments", 0, sato_tate);
  criterion(7, "limit pairings and Monte Carlo", 180, pairing);
  criterion(8, "one-level main-term convergence", 120, one_level);
  criterion(9, "self-test property suites", 300, property_suites);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
