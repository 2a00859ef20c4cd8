#pragma once

// Text forms used on the command line: weights "1,0,-1" or "1/2,1/2",
// representations "std", "adj", "triv", "hw:2,0;1,1*2", "weights:1,0;-1,0",
// and number lists "2,3,5" or "1e4,1e6".

#include "satake/groups.hpp"
#include "satake/hecke_satake.hpp"

#include <string>
#include <vector>

namespace satake {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

inline Weight parse_weight(const std::string& s) {
  if (s.empty()) throw PreconditionError("empty weight");
  auto parts = split(s, ',');
  Weight w(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) w[i] = parse_frac(parts[i]);
  return w;
}

inline Weight parse_weight_for(const RootDatum& d, const std::string& s) {
  Weight w = parse_weight(s);
  if (w.dim() != d.ambient_dim())
    throw PreconditionError("weight '" + s + "' needs " + std::to_string(d.ambient_dim()) + " coordinates for " + d.name());
  return d.canonical(w);
}

/// "w*m" -> (w, m); m defaults to 1.
inline std::pair<std::string, std::int64_t> split_multiplicity(const std::string& s) {
  auto star = s.find('*');
  if (star == std::string::npos) return {s, 1};
  std::int64_t m = 0;
  try {
    std::size_t used = 0;
    m = std::stoll(s.substr(star + 1), &used);
    if (used != s.size() - star - 1) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw PreconditionError("bad multiplicity in '" + s + "'");
  }
  if (m <= 0) throw PreconditionError("multiplicities must be positive");
  return {s.substr(0, star), m};
}

inline RepSpec parse_rep(const RootDatum& d, const std::string& s) {
  if (s == "std" || s == "standard") return RepSpec::standard();
  if (s == "adj" || s == "adjoint") return RepSpec::adjoint();
  if (s == "triv" || s == "trivial") return RepSpec::trivial();
  auto colon = s.find(':');
  if (colon == std::string::npos) throw PreconditionError("unknown representation '" + s + "'");
  const std::string head = s.substr(0, colon);
  const auto items = split(s.substr(colon + 1), ';');
  if (head == "hw") {
    std::vector<std::pair<Weight, std::int64_t>> hw;
    for (const auto& it : items) {
      auto [w, m] = split_multiplicity(it);
      hw.emplace_back(parse_weight_for(d, w), m);
    }
    return RepSpec::highest_weights(std::move(hw));
  }
  if (head == "weights") {
    WeightMultiset ws;
    for (const auto& it : items) {
      auto [w, m] = split_multiplicity(it);
      ws[parse_weight_for(d, w)] += m;
    }
    return RepSpec::weight_list(std::move(ws));
  }
  throw PreconditionError("unknown representation kind '" + head + "'");
}

inline std::vector<double> parse_reals(const std::string& s) {
  std::vector<double> out;
  for (const auto& p : split(s, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(p, &used));
      if (used != p.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw PreconditionError("cannot parse number '" + p + "'");
    }
  }
  return out;
}

inline std::vector<Rational> parse_rationals(const std::string& s) {
  std::vector<Rational> out;
  for (const auto& p : split(s, ',')) out.push_back(to_rational(parse_frac(p)));
  return out;
}

/// Either a dual datum ("B,2") or a group ("Sp,4"); exactly one must be given.
inline RootDatum resolve_datum(const std::string& dual, const std::string& group) {
  if (dual.empty() == group.empty()) throw PreconditionError("give exactly one of --dual or --group");
  return dual.empty() ? dual_of_group(group) : parse_dual(dual);
}

}  // namespace satake
