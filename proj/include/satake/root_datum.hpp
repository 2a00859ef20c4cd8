#pragma once

// Classical root data in epsilon-coordinates, with Weyl groups generated to
// closure from the simple reflections.

#include "satake/linalg.hpp"
#include "satake/numeric_types.hpp"
#include "satake/weight.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace satake {

enum class CartanType { A, B, C, D };

/// Type A comes in two flavors: the full lattice Z^n (GL_n) and the
/// sum-zero quotient (SL_n weights, PGL_n coweights).
enum class Lattice { Full, SumZero };

inline char to_char(CartanType t) {
  switch (t) {
    case CartanType::A: return 'A';
    case CartanType::B: return 'B';
    case CartanType::C: return 'C';
    case CartanType::D: return 'D';
  }
  return '?';
}

inline CartanType parse_cartan(char c) {
  switch (c) {
    case 'A': case 'a': return CartanType::A;
    case 'B': case 'b': return CartanType::B;
    case 'C': case 'c': return CartanType::C;
    case 'D': case 'd': return CartanType::D;
    default: throw PreconditionError(std::string("unknown Cartan type '") + c + "'");
  }
}

/// Signed permutation acting by (w v)_i = sign[i] * v[perm[i]].
struct SignedPermutation {
  std::vector<int> perm;
  std::vector<int> sign;

  static SignedPermutation identity(std::size_t n) {
    SignedPermutation s;
    s.perm.resize(n);
    s.sign.assign(n, 1);
    for (std::size_t i = 0; i < n; ++i) s.perm[i] = static_cast<int>(i);
    return s;
  }

  std::size_t dim() const { return perm.size(); }

  Weight apply(const Weight& v) const {
    Weight r(v.dim());
    for (std::size_t i = 0; i < perm.size(); ++i) r[i] = Frac(sign[i]) * v[perm[i]];
    return r;
  }

  /// (*this) o b
  SignedPermutation compose(const SignedPermutation& b) const {
    SignedPermutation c;
    const std::size_t n = perm.size();
    c.perm.resize(n);
    c.sign.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      c.perm[i] = b.perm[perm[i]];
      c.sign[i] = sign[i] * b.sign[perm[i]];
    }
    return c;
  }

  SignedPermutation inverse() const {
    SignedPermutation b;
    const std::size_t n = perm.size();
    b.perm.resize(n);
    b.sign.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      b.perm[perm[i]] = static_cast<int>(i);
      b.sign[perm[i]] = sign[i];
    }
    return b;
  }

  int det() const {
    int s = 1;
    for (auto v : sign) s *= v;
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t i = 0; i < perm.size(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = perm[j]) {
        seen[j] = true;
        ++len;
      }
      if (len % 2 == 0) s = -s;
    }
    return s;
  }

  friend bool operator==(const SignedPermutation& a, const SignedPermutation& b) {
    return a.perm == b.perm && a.sign == b.sign;
  }
  friend bool operator<(const SignedPermutation& a, const SignedPermutation& b) {
    return a.perm != b.perm ? a.perm < b.perm : a.sign < b.sign;
  }
};

class RootDatum;
RootDatum build_root_datum(CartanType type, int rank);

class RootDatum {
 public:
  RootDatum(CartanType type, int rank, Lattice lattice) : type_(type), rank_(rank), lattice_(lattice) {
    check_range();
    ambient_ = (type == CartanType::A) ? static_cast<std::size_t>(rank + 1) : static_cast<std::size_t>(rank);
    build_roots();
    finish();
  }

  CartanType cartan_type() const { return type_; }
  int rank() const { return rank_; }
  std::size_t ambient_dim() const { return ambient_; }
  Lattice lattice() const { return lattice_; }
  bool is_gl() const { return type_ == CartanType::A && lattice_ == Lattice::Full; }

  const std::vector<Weight>& simple_roots() const { return simple_; }
  const std::vector<Weight>& simple_coroots() const { return simple_co_; }
  const std::vector<Weight>& positive_roots() const { return positive_; }
  const std::vector<Weight>& positive_coroots() const { return positive_co_; }
  /// All roots, positive ones first.
  const std::vector<Weight>& roots() const { return all_roots_; }
  const Weight& rho() const { return rho_; }
  /// Half-sum of positive coroots.
  const Weight& rho_coroot() const { return rho_co_; }
  const std::vector<SignedPermutation>& weyl_elements() const { return weyl_; }
  std::size_t weyl_order() const { return weyl_.size(); }
  const std::vector<Weight>& fundamental_weights() const { return fundamental_; }

  /// "A2", "B3", "GL3".
  std::string name() const {
    if (is_gl()) return "GL" + std::to_string(ambient_);
    return std::string(1, to_char(type_)) + std::to_string(rank_);
  }

  /// Classical order of the Weyl group.
  std::size_t classical_weyl_order() const {
    std::size_t f = 1;
    const std::size_t n = static_cast<std::size_t>(rank_);
    switch (type_) {
      case CartanType::A:
        for (std::size_t i = 2; i <= n + 1; ++i) f *= i;
        return f;
      case CartanType::B:
      case CartanType::C:
        for (std::size_t i = 2; i <= n; ++i) f *= i;
        return f << n;
      case CartanType::D:
        for (std::size_t i = 2; i <= n; ++i) f *= i;
        return f << (n - 1);
    }
    return 0;
  }

  /// Langlands dual at the level of root systems: roots and coroots swap.
  RootDatum dual() const {
    CartanType t = type_;
    if (t == CartanType::B)
      t = CartanType::C;
    else if (t == CartanType::C)
      t = CartanType::B;
    return RootDatum(t, rank_, lattice_);
  }

  /// Projects to the sum-zero hyperplane for the SL flavor; identity otherwise.
  Weight canonical(const Weight& v) const {
    if (v.dim() != ambient_)
      throw PreconditionError("weight has " + std::to_string(v.dim()) + " coordinates, expected " +
                              std::to_string(ambient_));
    if (lattice_ != Lattice::SumZero) return v;
    Frac mean(0);
    for (std::size_t i = 0; i < ambient_; ++i) mean += v[i];
    mean /= Frac(static_cast<std::int64_t>(ambient_));
    Weight r(v);
    for (std::size_t i = 0; i < ambient_; ++i) r[i] -= mean;
    return r;
  }

  /// True when v lies in the character lattice of the torus.
  bool is_integral(const Weight& v) const {
    if (v.dim() != ambient_) return false;
    if (lattice_ == Lattice::SumZero) {
      Frac s(0);
      for (std::size_t i = 0; i < ambient_; ++i) s += v[i];
      if (s != 0) return false;
      for (std::size_t i = 0; i + 1 < ambient_; ++i)
        if (!satake::is_integral(v[i] - v[ambient_ - 1])) return false;
      return true;
    }
    for (std::size_t i = 0; i < ambient_; ++i)
      if (!satake::is_integral(v[i])) return false;
    return true;
  }

  void require_weight(const Weight& v, const char* what = "weight") const {
    if (!is_integral(v)) {
      std::ostringstream os;
      os << what << " " << v << " is not in the character lattice of " << name();
      throw PreconditionError(os.str());
    }
  }

  /// <v, alpha_i^vee>
  Frac pairing_simple(const Weight& v, std::size_t i) const { return dot(v, simple_co_[i]); }

  bool is_dominant(const Weight& v) const {
    for (std::size_t i = 0; i < simple_.size(); ++i)
      if (pairing_simple(v, i) < 0) return false;
    return true;
  }

  void require_dominant(const Weight& v, const char* what = "weight") const {
    require_weight(v, what);
    if (!is_dominant(v)) {
      std::ostringstream os;
      os << what << " " << v << " is not dominant for " << name();
      throw PreconditionError(os.str());
    }
  }

  Weight reflect(const Weight& v, std::size_t i) const {
    return v - pairing_simple(v, i) * simple_[i];
  }

  /// Unique dominant element of the Weyl orbit of v.
  Weight dominant_rep(Weight v) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < simple_.size(); ++i) {
        if (pairing_simple(v, i) < 0) {
          v = reflect(v, i);
          changed = true;
        }
      }
    }
    return v;
  }

  /// Weyl orbit, sorted.
  std::vector<Weight> weyl_orbit(const Weight& v) const {
    std::set<Weight> seen{v};
    std::deque<Weight> queue{v};
    while (!queue.empty()) {
      Weight cur = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < simple_.size(); ++i) {
        Weight r = reflect(cur, i);
        if (seen.insert(r).second) queue.push_back(r);
      }
    }
    return {seen.begin(), seen.end()};
  }

  std::optional<std::vector<Frac>> simple_root_coords(const Weight& v) const { return root_coords_.solve(v); }
  std::optional<std::vector<Frac>> simple_coroot_coords(const Weight& v) const { return coroot_coords_.solve(v); }

  /// Simple-root coordinates when they are all integers.
  std::optional<std::vector<std::int64_t>> integral_root_coords(const Weight& v) const {
    auto c = simple_root_coords(v);
    if (!c) return std::nullopt;
    std::vector<std::int64_t> out(c->size());
    for (std::size_t i = 0; i < c->size(); ++i) {
      if (!satake::is_integral((*c)[i])) return std::nullopt;
      out[i] = (*c)[i].numerator();
    }
    return out;
  }

  bool in_root_lattice(const Weight& v) const { return integral_root_coords(v).has_value(); }

  /// Dominance order: lam - mu is a nonnegative combination of simple coroots.
  bool leq(const Weight& mu, const Weight& lam) const {
    auto c = simple_coroot_coords(lam - mu);
    if (!c) return false;
    for (const auto& x : *c)
      if (x < 0) return false;
    return true;
  }

  /// Dominant mu <= lam with lam - mu in the root lattice, including lam.
  std::vector<Weight> dominant_weights_below(const Weight& lam) const {
    require_dominant(lam);
    const Weight w0lam = -dominant_rep(-lam);
    auto span = integral_root_coords(lam - w0lam);
    if (!span) throw NumericalError("lambda - w0(lambda) is not in the root lattice");
    std::vector<Weight> out;
    std::vector<std::int64_t> c(simple_.size(), 0);
    const std::size_t r = simple_.size();
    while (true) {
      Weight mu = lam;
      for (std::size_t i = 0; i < r; ++i) mu -= Frac(c[i]) * simple_[i];
      if (is_dominant(mu)) out.push_back(mu);
      std::size_t k = 0;
      while (k < r) {
        if (++c[k] <= (*span)[k]) break;
        c[k] = 0;
        ++k;
      }
      if (k == r) break;
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Number of independent torus frequencies (rank of the character lattice).
  std::size_t torus_rank() const { return lattice_ == Lattice::SumZero ? ambient_ - 1 : ambient_; }

  /// Integer frequency vector k with e^{v}(x) = e(<k, x>) on [0,1)^torus_rank.
  std::vector<std::int64_t> torus_frequency(const Weight& v) const {
    require_weight(v);
    std::vector<std::int64_t> k(torus_rank());
    if (lattice_ == Lattice::SumZero) {
      for (std::size_t i = 0; i + 1 < ambient_; ++i) k[i] = (v[i] - v[ambient_ - 1]).numerator();
    } else {
      for (std::size_t i = 0; i < ambient_; ++i) k[i] = v[i].numerator();
    }
    return k;
  }

  /// Common denominator of character-lattice coordinates.
  std::int64_t coordinate_denominator() const {
    return lattice_ == Lattice::SumZero ? static_cast<std::int64_t>(ambient_) : 1;
  }

  /// Scaled integer key for exact Laurent arithmetic on the torus.
  std::vector<std::int64_t> lattice_key(const Weight& v) const {
    const std::int64_t den = coordinate_denominator();
    std::vector<std::int64_t> k(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) {
      Frac s = v[i] * Frac(den);
      if (!satake::is_integral(s)) throw PreconditionError("weight outside the character lattice");
      k[i] = s.numerator();
    }
    return k;
  }

  Weight from_lattice_key(const std::vector<std::int64_t>& k) const {
    const std::int64_t den = coordinate_denominator();
    Weight w(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) w[i] = Frac(k[i], den);
    return w;
  }

  /// Highest root (dominant element of the root orbit of largest height).
  Weight highest_root() const {
    Weight best = positive_.front();
    Frac best_h(-1);
    for (const auto& a : positive_) {
      if (!is_dominant(a)) continue;
      Frac h = dot(a, rho_co_);
      if (h > best_h) {
        best_h = h;
        best = a;
      }
    }
    return best;
  }

 private:
  void check_range() const {
    if (rank_ < 1) throw PreconditionError("rank out of supported range: rank must be >= 1");
    if (type_ == CartanType::D && rank_ < 2)
      throw PreconditionError("rank out of supported range: type D needs rank >= 2");
    const int max_rank = type_ == CartanType::A ? 6 : 4;
    if (rank_ > max_rank)
      throw PreconditionError("rank out of supported range: " + std::string(1, to_char(type_)) +
                              std::to_string(rank_) + " (max rank " + std::to_string(max_rank) + ")");
    if (lattice_ == Lattice::SumZero && type_ != CartanType::A)
      throw PreconditionError("sum-zero flavor exists for type A only");
  }

  Weight e(std::size_t i, std::int64_t s = 1) const { return Weight::unit(ambient_, i, Frac(s)); }

  void build_roots() {
    const std::size_t n = static_cast<std::size_t>(rank_);
    if (type_ == CartanType::A) {
      for (std::size_t i = 0; i < n; ++i) simple_.push_back(e(i) - e(i + 1));
      for (std::size_t i = 0; i < ambient_; ++i)
        for (std::size_t j = i + 1; j < ambient_; ++j) positive_.push_back(e(i) - e(j));
      return;
    }
    for (std::size_t i = 0; i + 1 < n; ++i) simple_.push_back(e(i) - e(i + 1));
    switch (type_) {
      case CartanType::B: simple_.push_back(e(n - 1)); break;
      case CartanType::C: simple_.push_back(e(n - 1, 2)); break;
      case CartanType::D: simple_.push_back(e(n - 2) + e(n - 1)); break;
      default: break;
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        positive_.push_back(e(i) - e(j));
        positive_.push_back(e(i) + e(j));
      }
    for (std::size_t i = 0; i < n; ++i) {
      if (type_ == CartanType::B) positive_.push_back(e(i));
      if (type_ == CartanType::C) positive_.push_back(e(i, 2));
    }
  }

  static Weight coroot_of(const Weight& a) { return (Frac(2) / dot(a, a)) * a; }

  SignedPermutation reflection_matrix(const Weight& a) const {
    const Weight co = coroot_of(a);
    SignedPermutation s;
    s.perm.assign(ambient_, -1);
    s.sign.assign(ambient_, 0);
    for (std::size_t k = 0; k < ambient_; ++k) {
      Weight col = e(k) - dot(e(k), co) * a;  // image of e_k
      for (std::size_t i = 0; i < ambient_; ++i) {
        if (col[i] == 0) continue;
        if (col[i] != 1 && col[i] != -1) throw NumericalError("reflection is not a signed permutation");
        s.perm[i] = static_cast<int>(k);
        s.sign[i] = static_cast<int>(col[i].numerator());
      }
    }
    for (std::size_t i = 0; i < ambient_; ++i)
      if (s.perm[i] < 0) throw NumericalError("reflection is not a signed permutation");
    return s;
  }

  void finish() {
    for (const auto& a : simple_) simple_co_.push_back(coroot_of(a));
    for (const auto& a : positive_) positive_co_.push_back(coroot_of(a));
    all_roots_ = positive_;
    for (const auto& a : positive_) all_roots_.push_back(-a);

    rho_ = Weight(ambient_);
    rho_co_ = Weight(ambient_);
    for (const auto& a : positive_) rho_ += a;
    for (const auto& a : positive_co_) rho_co_ += a;
    rho_ *= Frac(1, 2);
    rho_co_ *= Frac(1, 2);

    root_coords_ = linalg::Coordinates(simple_);
    coroot_coords_ = linalg::Coordinates(simple_co_);

    for (const auto& a : positive_) {
      auto c = simple_root_coords(a);
      if (!c) throw NumericalError("positive root outside the span of simple roots");
      for (const auto& x : *c)
        if (!satake::is_integral(x) || x < 0) throw NumericalError("positive root is not a nonnegative integer combination");
    }
    for (std::size_t i = 0; i < simple_.size(); ++i)
      if (dot(rho_, simple_co_[i]) != 1) throw NumericalError("<rho, alpha^vee> != 1 for a simple coroot");

    generate_weyl_group();
    build_fundamental_weights();
  }

  void generate_weyl_group() {
    std::vector<SignedPermutation> gens;
    for (const auto& a : simple_) gens.push_back(reflection_matrix(a));
    std::set<SignedPermutation> seen;
    std::deque<SignedPermutation> queue;
    auto id = SignedPermutation::identity(ambient_);
    seen.insert(id);
    queue.push_back(id);
    weyl_.push_back(id);
    while (!queue.empty()) {
      SignedPermutation g = queue.front();
      queue.pop_front();
      for (const auto& s : gens) {
        SignedPermutation h = s.compose(g);
        if (seen.insert(h).second) {
          weyl_.push_back(h);
          queue.push_back(h);
        }
      }
    }
    if (weyl_.size() != classical_weyl_order())
      throw NumericalError("Weyl group closure has order " + std::to_string(weyl_.size()) + ", expected " +
                           std::to_string(classical_weyl_order()));
  }

  void build_fundamental_weights() {
    const std::size_t r = simple_.size();
    if (lattice_ == Lattice::Full && type_ == CartanType::A) {
      for (std::size_t i = 0; i < r; ++i) {
        Weight w(ambient_);
        for (std::size_t j = 0; j <= i; ++j) w[j] = 1;
        fundamental_.push_back(w);
      }
      return;
    }
    linalg::Matrix m(r, std::vector<Frac>(r));
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t j = 0; j < r; ++j) m[k][j] = dot(simple_[k], simple_co_[j]);
    auto inv = linalg::inverse(m);
    if (!inv) throw NumericalError("singular Cartan matrix");
    for (std::size_t i = 0; i < r; ++i) {
      Weight w(ambient_);
      for (std::size_t k = 0; k < r; ++k) w += (*inv)[i][k] * simple_[k];
      fundamental_.push_back(w);
    }
  }

  CartanType type_;
  int rank_;
  Lattice lattice_;
  std::size_t ambient_ = 0;
  std::vector<Weight> simple_, simple_co_, positive_, positive_co_, all_roots_, fundamental_;
  Weight rho_, rho_co_;
  std::vector<SignedPermutation> weyl_;
  linalg::Coordinates root_coords_, coroot_coords_;
};

/// Type A of rank r is the sum-zero (SL_{r+1}) flavor.
inline RootDatum build_root_datum(CartanType type, int rank) {
  return RootDatum(type, rank, type == CartanType::A ? Lattice::SumZero : Lattice::Full);
}

/// GL_n realized on the full lattice Z^n.
inline RootDatum build_gl(int n) {
  if (n < 2 || n > 7) throw PreconditionError("rank out of supported range: GL_n needs 2 <= n <= 7");
  return RootDatum(CartanType::A, n - 1, Lattice::Full);
}

}  // namespace satake
