#pragma once

// Frobenius-Schur indicators and symmetry types.

#include "satake/sato_tate.hpp"

#include <string>
#include <utility>
#include <vector>

namespace satake {

enum class SymmetryType { Unitary, Symplectic, Orthogonal };
enum class Ensemble { U, SOeven, USp };

inline const char* to_string(SymmetryType t) {
  switch (t) {
    case SymmetryType::Unitary: return "Unitary";
    case SymmetryType::Symplectic: return "Symplectic";
    case SymmetryType::Orthogonal: return "Orthogonal";
  }
  return "?";
}

inline const char* to_string(Ensemble e) {
  switch (e) {
    case Ensemble::U: return "U";
    case Ensemble::SOeven: return "SOeven";
    case Ensemble::USp: return "USp";
  }
  return "?";
}

/// Dyson index of the eigenvalue repulsion.
inline int dyson_beta(Ensemble e) {
  switch (e) {
    case Ensemble::U: return 2;
    case Ensemble::SOeven: return 1;
    case Ensemble::USp: return 4;
  }
  return 0;
}

struct SymmetryVerdict {
  int s = 0;
  std::int64_t sym_mult = 0;
  std::int64_t wedge_mult = 0;
  SymmetryType type = SymmetryType::Unitary;
  Ensemble rmt_ensemble = Ensemble::U;
  bool reducible = false;
};

inline SymmetryVerdict classify(int s) {
  SymmetryVerdict v;
  v.s = s;
  switch (s) {
    case 0: v.type = SymmetryType::Unitary; v.rmt_ensemble = Ensemble::U; break;
    case 1: v.type = SymmetryType::Symplectic; v.rmt_ensemble = Ensemble::USp; break;
    case -1: v.type = SymmetryType::Orthogonal; v.rmt_ensemble = Ensemble::SOeven; break;
    default: throw PreconditionError("Frobenius-Schur indicator must be in {-1,0,1}, got " + std::to_string(s));
  }
  return v;
}

namespace detail {
inline std::int64_t as_integer(const Rational& r, const char* what) {
  if (denominator(r) != 1) throw NumericalError(std::string(what) + " is not an integer");
  return static_cast<std::int64_t>(numerator(r));
}
}  // namespace detail

struct FSResult {
  std::int64_t s = 0;
  bool reducible = false;
};

/// s(r) = CT[chi_r(t^2) * ST density]; the virtual value for reducible r.
inline FSResult frobenius_schur(const RootDatum& d, const RepSpec& r) {
  FSResult res;
  res.s = detail::as_integer(st_moment_exact(d, r, 2), "Frobenius-Schur indicator");
  res.reducible = !diagnose(d, r).irreducible;
  return res;
}

/// Multiplicities of the trivial representation in Sym^2 r and wedge^2 r.
inline std::pair<std::int64_t, std::int64_t> sym2_wedge2_mults(const RootDatum& d, const RepSpec& r) {
  const TorusPoly chi = character_poly(d, r);
  const Rational sq = st_constant_term(d, chi * chi);
  const Rational tw = st_constant_term(d, character_poly(d, r, 2));
  return {detail::as_integer((sq + tw) / 2, "Sym^2 multiplicity"), detail::as_integer((sq - tw) / 2, "wedge^2 multiplicity")};
}

/// Full verdict; classification requires an irreducible representation.
inline SymmetryVerdict symmetry_verdict(const RootDatum& d, const RepSpec& r) {
  FSResult fs = frobenius_schur(d, r);
  auto [sym, wedge] = sym2_wedge2_mults(d, r);
  if (fs.s != sym - wedge) throw NumericalError("indicator disagrees with Sym^2 - wedge^2");
  SymmetryVerdict v;
  if (fs.s >= -1 && fs.s <= 1)
    v = classify(static_cast<int>(fs.s));
  else
    v.s = static_cast<int>(fs.s);
  v.sym_mult = sym;
  v.wedge_mult = wedge;
  v.reducible = fs.reducible;
  return v;
}

struct GaloisClass {
  std::int64_t size = 1;
  std::int64_t s_theta = 0;
};

/// sum |theta| s(r,theta) / sum |theta|
inline Rational cebotarev_average(const std::vector<GaloisClass>& classes) {
  if (classes.empty()) throw PreconditionError("class list is empty");
  Rational num(0), den(0);
  for (const auto& c : classes) {
    if (c.size <= 0) throw PreconditionError("class sizes must be positive");
    num += Rational(c.size) * Rational(c.s_theta);
    den += Rational(c.size);
  }
  return num / den;
}

struct SecondMomentExpansion {
  HalfPowerLaurent expansion;
  Rational constant_term;
};

/// phi^{(2)}(1) as a Laurent polynomial; no positive q-powers may occur.
inline SecondMomentExpansion second_moment_expansion(const SatakeEngine& eng, const RepSpec& r) {
  SecondMomentExpansion e;
  e.expansion = plancherel_moment_symbolic(eng, r, 2);
  if (!e.expansion.is_zero() && e.expansion.max_twice_exp() > 0)
    throw NumericalError("second moment has a positive q-power: " + e.expansion.to_string());
  e.constant_term = e.expansion.constant_term();
  return e;
}

/// True iff phi^{(1)}(1) has only exponents <= -1.
inline bool first_moment_check(const SatakeEngine& eng, const RepSpec& r) {
  if (diagnose(eng.datum(), r).contains_trivial)
    throw PreconditionError("representation contains the trivial representation; its first moment cannot vanish");
  HalfPowerLaurent m = plancherel_moment_symbolic(eng, r, 1);
  return m.is_zero() || m.max_twice_exp() <= -2;
}

}  // namespace satake
