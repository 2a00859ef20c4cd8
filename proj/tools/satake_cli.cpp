// Command-line front end. JSON on stdout by default, CSV with --csv for
// tabular commands, and a one-line run manifest on stderr.

#include "satake/check/selftest.hpp"
#include "satake/json_io.hpp"
#include "satake/satake.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace satake;
using json_io::fmt;
using json_io::json;

namespace {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string csv() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << "\n";
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
      os << "\n";
    }
    return os.str();
  }
};

Ensemble parse_ensemble(const std::string& s) {
  if (s == "u" || s == "U") return Ensemble::U;
  if (s == "so" || s == "SO" || s == "soeven" || s == "SOeven") return Ensemble::SOeven;
  if (s == "usp" || s == "USp") return Ensemble::USp;
  throw PreconditionError("unknown ensemble '" + s + "' (use u, so or usp)");
}

json one_level_json(const OneLevelResult& r) {
  json j = {{"d_model", r.d_model},
            {"predicted", r.predicted ? json(*r.predicted) : json(nullptr)},
            {"error", r.error ? json(*r.error) : json(nullptr)},
            {"nu1_contribution", r.nu_contribution.size() > 0 ? r.nu_contribution[0] : 0.0},
            {"nu2_contribution", r.nu_contribution.size() > 1 ? r.nu_contribution[1] : 0.0},
            {"nu_contributions", r.nu_contribution},
            {"tail_bound", r.tail_bound},
            {"primes_used", r.primes_used},
            {"prime_limit", r.prime_limit},
            {"s", r.s},
            {"reducible", r.reducible}};
  return j;
}

std::string opt_value(const CLI::Option* o) {
  const auto& res = o->results();
  if (res.empty()) return o->get_default_str();
  std::string v;
  for (std::size_t i = 0; i < res.size(); ++i) v += (i ? "," : "") + res[i];
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  const auto t0 = std::chrono::steady_clock::now();
  CLI::App app{"Satake transforms, Plancherel and Sato-Tate moments, symmetry types and one-level densities"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(kVersion));

  unsigned threads = 0;
  bool csv = false;
  std::string out_path;
  app.add_option("--threads", threads, "worker threads (default: SATAKE_THREADS or hardware)");
  app.add_flag("--csv", csv, "CSV output for tabular commands");
  app.add_option("--out", out_path, "write output to a file instead of stdout");

  // shared option storage
  std::string dual, group, rep = "std", lambda, mu, mode = "inverse", basis = "character", qs = "2,3,5,25,121";
  std::string ens = "u", conductors = "1e4,1e6,1e9,1e12";
  std::int64_t nu = 1, nu_max = 2, seed = 1;
  std::size_t grid = 0, samples = 4000;
  int n = 40, bins = 40;
  double conductor = 1e10, delta = 0.4, theta = 0.499, x_max = 3.0;

  auto datum_opts = [&](CLI::App* s) {
    s->add_option("--dual", dual, "dual root datum, e.g. B,2 or GL,3");
    s->add_option("--group", group, "split group, e.g. Sp,4 or SO,5");
  };
  auto rep_opt = [&](CLI::App* s) { s->add_option("--rep", rep, "std | adj | triv | hw:... | weights:...")->capture_default_str(); };

  auto* sat = app.add_subcommand("satake", "Satake transform of characters or tau basis elements");
  datum_opts(sat);
  sat->add_option("--lambda", lambda, "dominant weight")->required();
  sat->add_option("--mu", mu, "second weight (mode coeff)");
  sat->add_option("--mode", mode, "inverse | forward | coeff")->capture_default_str();
  sat->add_option("--basis", basis, "character | orbit_sum (mode forward)")->capture_default_str();

  auto* phi = app.add_subcommand("phi", "test function phi^(nu) = S^{-1}(r^* p_nu)");
  datum_opts(phi);
  rep_opt(phi);
  phi->add_option("--nu", nu, "power")->capture_default_str();

  auto* pm = app.add_subcommand("plancherel-moments", "exact and quadrature Plancherel moments");
  datum_opts(pm);
  rep_opt(pm);
  pm->add_option("--nu-max", nu_max, "largest power")->capture_default_str();
  pm->add_option("--q", qs, "comma-separated q values")->capture_default_str();
  pm->add_option("--grid", grid, "points per torus axis (0 = default)")->capture_default_str();

  auto* stm = app.add_subcommand("sato-tate-moments", "exact and quadrature Sato-Tate moments");
  datum_opts(stm);
  rep_opt(stm);
  stm->add_option("--nu-max", nu_max, "largest power")->capture_default_str();
  stm->add_option("--grid", grid, "points per torus axis (0 = default)")->capture_default_str();

  auto* stc = app.add_subcommand("st-convergence", "Plancherel to Sato-Tate convergence in q");
  datum_opts(stc);
  rep_opt(stc);
  stc->add_option("--nu", nu, "power")->capture_default_str();
  stc->add_option("--q", qs, "ascending q values")->capture_default_str();

  auto* fs = app.add_subcommand("fs-indicator", "Frobenius-Schur indicator and symmetry type");
  datum_opts(fs);
  rep_opt(fs);

  auto* rd = app.add_subcommand("rmt-density", "Monte Carlo one-level density against the limit");
  rd->add_option("--ensemble", ens, "u | so | usp")->capture_default_str();
  rd->add_option("--n", n, "matrix size N")->capture_default_str();
  rd->add_option("--samples", samples, "number of samples")->capture_default_str();
  rd->add_option("--delta", delta, "Fejer support")->capture_default_str();
  rd->add_option("--seed", seed, "seed")->capture_default_str();

  auto* rh = app.add_subcommand("rmt-histogram", "eigenangle histogram against the limit density");
  rh->add_option("--ensemble", ens, "u | so | usp")->capture_default_str();
  rh->add_option("--n", n, "matrix size N")->capture_default_str();
  rh->add_option("--samples", samples, "number of samples")->capture_default_str();
  rh->add_option("--bins", bins, "number of bins")->capture_default_str();
  rh->add_option("--x-max", x_max, "upper end of the range")->capture_default_str();
  rh->add_option("--seed", seed, "seed")->capture_default_str();

  auto one_level_opts = [&](CLI::App* s) {
    datum_opts(s);
    rep_opt(s);
    s->add_option("--delta", delta, "Fejer support")->capture_default_str();
    s->add_option("--numax", nu_max, "largest prime power exponent")->capture_default_str();
    s->add_option("--theta", theta, "Ramanujan exponent bound")->capture_default_str();
  };
  auto* ol = app.add_subcommand("one-level", "Plancherel main-term model of the one-level density");
  one_level_opts(ol);
  ol->add_option("--conductor", conductor, "analytic conductor C")->capture_default_str();

  auto* ols = app.add_subcommand("one-level-study", "one-level model along a conductor ladder");
  one_level_opts(ols);
  ols->add_option("--conductors", conductors, "ascending conductor list")->capture_default_str();

  auto* st = app.add_subcommand("selftest", "run the invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (threads == 0) threads = default_threads();
  set_default_threads(threads);

  CLI::App* sub = app.get_subcommands().front();
  std::string output;
  int code = 0;
  try {
    if (sub == sat) {
      const RootDatum d = resolve_datum(dual, group);
      SatakeEngine eng(d);
      const Weight lam = parse_weight_for(d, lambda);
      json j = {{"dual", d.name()}, {"group", group_of_dual(d)}, {"lambda", json_io::weight_to_json(lam)}};
      if (mode == "inverse") {
        d.require_dominant(lam, "lambda");
        j["inverse_character"] = json_io::hecke_to_json(eng.inverse_character(lam));
      } else if (mode == "forward") {
        SphericalFunction f = eng.forward_tau(lam);
        if (basis == "orbit_sum") f = eng.character_to_orbit(f);
        else if (basis != "character") throw PreconditionError("basis must be character or orbit_sum");
        j["forward_tau"] = json_io::spherical_to_json(f);
      } else if (mode == "coeff") {
        if (mu.empty()) throw PreconditionError("mode coeff needs --mu");
        const Weight m = parse_weight_for(d, mu);
        j["mu"] = json_io::weight_to_json(m);
        j["s"] = json_io::laurent_to_json(eng.satake_coeff(lam, m));
      } else {
        throw PreconditionError("mode must be inverse, forward or coeff");
      }
      output = j.dump() + "\n";
    } else if (sub == phi) {
      const RootDatum d = resolve_datum(dual, group);
      SatakeEngine eng(d);
      const RepSpec r = parse_rep(d, rep);
      const HeckeElement h = eng.phi_nu(r, nu);
      json j = {{"dual", d.name()},
                {"group", group_of_dual(d)},
                {"rep", r.label()},
                {"nu", nu},
                {"phi", json_io::hecke_to_json(h)},
                {"phi_at_identity", json_io::laurent_to_json(evaluate_at_identity(h))},
                {"phi_at_identity_text", evaluate_at_identity(h).to_string()}};
      output = j.dump() + "\n";
    } else if (sub == pm) {
      const RootDatum d = resolve_datum(dual, group);
      SatakeEngine eng(d);
      const RepSpec r = parse_rep(d, rep);
      Table t{{"q", "nu", "beta_exact", "beta_numeric", "abs_err"}, {}};
      json rows = json::array();
      for (const Rational& q : parse_rationals(qs)) {
        const double qd = to_double(q);
        auto num = plancherel_moments_numeric(d, r, nu_max, qd, grid, threads);
        for (std::int64_t k = 1; k <= nu_max; ++k) {
          const HalfPowerLaurent sym = plancherel_moment_symbolic(eng, r, k);
          auto ex = sym.evaluate(q);
          const double exd = ex ? to_double(*ex) : sym.evaluate_double(qd);
          const double err = std::abs(exd - num[static_cast<std::size_t>(k - 1)]);
          t.rows.push_back({fmt(qd), std::to_string(k), fmt(exd), fmt(num[static_cast<std::size_t>(k - 1)]), fmt(err)});
          rows.push_back({{"q", qd},
                          {"nu", k},
                          {"grid", grid == 0 ? TorusGrid::plancherel_points(d.torus_rank(), qd) : grid},
                          {"beta_exact", exd},
                          {"beta_exact_rational", ex ? json_io::rational_to_json(*ex) : json(nullptr)},
                          {"beta_numeric", num[static_cast<std::size_t>(k - 1)]},
                          {"abs_err", err}});
        }
      }
      output = csv ? t.csv()
                   : json({{"dual", d.name()}, {"rep", r.label()}, {"grid", grid},
                           {"rows", rows}}).dump() + "\n";
    } else if (sub == stm) {
      const RootDatum d = resolve_datum(dual, group);
      const RepSpec r = parse_rep(d, rep);
      Table t{{"nu", "beta_st_exact", "beta_st_numeric", "abs_err"}, {}};
      json rows = json::array();
      for (std::int64_t k = 1; k <= nu_max; ++k) {
        const Rational ex = st_moment_exact(d, r, k);
        const double num = st_moment_numeric(d, r, k, grid, threads);
        const double err = std::abs(to_double(ex) - num);
        t.rows.push_back({std::to_string(k), fmt(to_double(ex)), fmt(num), fmt(err)});
        rows.push_back({{"nu", k}, {"beta_st_exact", json_io::rational_to_json(ex)}, {"beta_st_numeric", num}, {"abs_err", err}});
      }
      output = csv ? t.csv()
                   : json({{"dual", d.name()}, {"rep", r.label()}, {"mass", json_io::rational_to_json(st_mass_exact(d))},
                           {"rows", rows}}).dump() + "\n";
    } else if (sub == stc) {
      const RootDatum d = resolve_datum(dual, group);
      SatakeEngine eng(d);
      const RepSpec r = parse_rep(d, rep);
      const auto rep_out = convergence_report(eng, r, nu, parse_reals(qs));
      Table t{{"q", "beta_pl", "beta_st", "abs_diff", "q_abs_diff"}, {}};
      json rows = json::array();
      for (const auto& row : rep_out.rows) {
        t.rows.push_back({fmt(row.q), fmt(row.beta_pl), fmt(row.beta_st), fmt(row.diff), fmt(row.q_diff)});
        rows.push_back({{"q", row.q}, {"beta_pl", row.beta_pl}, {"beta_st", row.beta_st}, {"abs_diff", row.diff}, {"q_abs_diff", row.q_diff}});
      }
      output = csv ? t.csv()
                   : json({{"dual", d.name()},
                           {"rep", r.label()},
                           {"nu", nu},
                           {"beta_pl_symbolic", json_io::laurent_to_json(rep_out.beta_pl_symbolic)},
                           {"beta_st", json_io::rational_to_json(rep_out.beta_st)},
                           {"nonincreasing", rep_out.nonincreasing},
                           {"max_q_abs_diff", rep_out.max_q_diff},
                           {"rows", rows}}).dump() + "\n";
    } else if (sub == fs) {
      const RootDatum d = resolve_datum(dual, group);
      const RepSpec r = parse_rep(d, rep);
      const SymmetryVerdict v = symmetry_verdict(d, r);
      json j = {{"s", v.s}, {"sym", v.sym_mult}, {"wedge", v.wedge_mult}, {"reducible", v.reducible}};
      if (!v.reducible && v.s >= -1 && v.s <= 1) {
        j["type"] = to_string(v.type);
        j["ensemble"] = to_string(v.rmt_ensemble);
      } else {
        j["type"] = nullptr;
        j["ensemble"] = nullptr;
        std::cerr << "warning: representation is reducible; s is the virtual indicator\n";
      }
      output = j.dump() + "\n";
    } else if (sub == rd) {
      const Ensemble e = parse_ensemble(ens);
      const auto pair = TestFunctionPair::fejer(delta);
      const auto m = empirical_one_level(e, n, samples, pair, static_cast<std::uint64_t>(seed), threads);
      const double lim = limit_pairing(e, pair);
      json j = {{"ensemble", to_string(e)}, {"n", n},          {"samples", samples},
                {"delta", delta},           {"seed", seed},    {"estimate", m.estimate},
                {"stderr", m.stderr_},      {"limit", lim},    {"sigma_distance", m.stderr_ > 0 ? std::abs(m.estimate - lim) / m.stderr_ : 0.0}};
      output = j.dump() + "\n";
    } else if (sub == rh) {
      const Ensemble e = parse_ensemble(ens);
      const auto hist = eigenangle_histogram(e, n, samples, bins, x_max, static_cast<std::uint64_t>(seed), threads);
      Table t{{"bin_center", "empirical_density", "limit_density"}, {}};
      json rows = json::array();
      for (const auto& b : hist) {
        t.rows.push_back({fmt(b.center), fmt(b.empirical), fmt(b.limit)});
        rows.push_back({{"bin_center", b.center}, {"empirical_density", b.empirical}, {"limit_density", b.limit}});
      }
      output = csv ? t.csv() : json({{"ensemble", to_string(e)}, {"n", n}, {"samples", samples}, {"rows", rows}}).dump() + "\n";
    } else if (sub == ol || sub == ols) {
      const RootDatum d = resolve_datum(dual, group);
      PipelineConfig cfg{d};
      cfg.rep = parse_rep(d, rep);
      cfg.pair = TestFunctionPair::fejer(delta);
      cfg.nu_max = nu_max;
      cfg.theta = theta;
      cfg.threads = threads;
      if (!diagnose(d, cfg.rep).irreducible)
        std::cerr << "warning: representation is reducible; no limit prediction\n";
      if (sub == ol) {
        cfg.conductor = conductor;
        json j = one_level_json(model_one_level_density(cfg));
        j["dual"] = d.name();
        j["group"] = group_of_dual(d);
        j["conductor"] = conductor;
        j["delta"] = delta;
        output = j.dump() + "\n";
      } else {
        const auto study = convergence_study(cfg, parse_reals(conductors));
        Table t{{"conductor", "d_model", "predicted", "error", "nu1_contribution", "nu2_contribution", "tail_bound", "primes_used"}, {}};
        json rows = json::array();
        for (const auto& row : study.rows) {
          const auto& r = row.result;
          t.rows.push_back({fmt(row.conductor), fmt(r.d_model), r.predicted ? fmt(*r.predicted) : "", r.error ? fmt(*r.error) : "",
                            fmt(r.nu_contribution.at(0)), r.nu_contribution.size() > 1 ? fmt(r.nu_contribution[1]) : "0",
                            fmt(r.tail_bound), std::to_string(r.primes_used)});
          json jr = one_level_json(r);
          jr["conductor"] = row.conductor;
          rows.push_back(jr);
        }
        output = csv ? t.csv()
                     : json({{"dual", d.name()},
                             {"group", group_of_dual(d)},
                             {"delta", delta},
                             {"strictly_decreasing", study.strictly_decreasing},
                             {"final_below_initial", study.final_below_initial},
                             {"final_over_initial", study.final_over_initial},
                             {"rows", rows}}).dump() + "\n";
      }
    } else if (sub == st) {
      json checks = json::array();
      bool ok = true;
      for (const auto& c : check::run_all()) {
        ok = ok && c.passed;
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"seconds", c.seconds}});
      }
      output = json({{"passed", ok}, {"checks", checks}}).dump() + "\n";
      if (!ok) code = 1;
    }
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (out_path.empty()) {
    std::cout << output;
  } else {
    std::ofstream f(out_path);
    if (!f) {
      std::cerr << "error: cannot open " << out_path << "\n";
      return 2;
    }
    f << output;
  }

  json flags = json::object();
  for (const auto* o : sub->get_options())
    if (!o->get_name().empty() && o->get_name() != "--help") flags[o->get_name()] = opt_value(o);
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  json manifest = {{"subcommand", sub->get_name()},
                   {"flags", flags},
                   {"threads", threads},
                   {"csv", csv},
                   {"version", kVersion},
                   {"wall_time_s", wall}};
  if (sub == rd || sub == rh) manifest["seed"] = seed;
  if (sub == pm || sub == stm) manifest["grid"] = grid;
  std::cerr << json({{"manifest", manifest}}).dump() << "\n";
  return code;
}
