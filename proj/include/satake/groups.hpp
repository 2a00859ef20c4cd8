#pragma once

// Parsing of dual-datum and group descriptors such as "B,2", "GL,3", "Sp,4".

#include "satake/root_datum.hpp"

#include <cctype>
#include <string>

namespace satake {

namespace detail {

inline std::pair<std::string, int> split_descriptor(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw PreconditionError("expected '<type>,<n>', got '" + s + "'");
  std::string head = s.substr(0, comma);
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(s.substr(comma + 1), &used);
    if (used != s.size() - comma - 1) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw PreconditionError("cannot parse integer in '" + s + "'");
  }
  for (auto& c : head) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return {head, n};
}

}  // namespace detail

/// "A,r" (SL_{r+1}), "B,n", "C,n", "D,n", or "GL,n".
inline RootDatum parse_dual(const std::string& s) {
  auto [head, n] = detail::split_descriptor(s);
  if (head == "GL") return build_gl(n);
  if (head.size() != 1) throw PreconditionError("unknown dual datum '" + s + "'");
  return build_root_datum(parse_cartan(head[0]), n);
}

/// Dual datum of a named split group: GL,n  PGL,n  Sp,2n  SO,m.
inline RootDatum dual_of_group(const std::string& s) {
  auto [head, n] = detail::split_descriptor(s);
  if (head == "GL") return build_gl(n);
  if (head == "PGL") {
    if (n < 2) throw PreconditionError("rank out of supported range: PGL_n needs n >= 2");
    return build_root_datum(CartanType::A, n - 1);
  }
  if (head == "SP") {
    if (n < 2 || n % 2 != 0) throw PreconditionError("Sp_m needs even m >= 2");
    return build_root_datum(CartanType::B, n / 2);
  }
  if (head == "SO") {
    if (n < 3) throw PreconditionError("SO_m needs m >= 3");
    if (n % 2 == 1) return build_root_datum(CartanType::C, (n - 1) / 2);
    return build_root_datum(CartanType::D, n / 2);
  }
  throw PreconditionError("unknown group '" + s + "'");
}

/// Name of the split group whose dual is d, e.g. B2 -> "Sp4".
inline std::string group_of_dual(const RootDatum& d) {
  const int n = d.rank();
  switch (d.cartan_type()) {
    case CartanType::A: return d.is_gl() ? "GL" + std::to_string(n + 1) : "PGL" + std::to_string(n + 1);
    case CartanType::B: return "Sp" + std::to_string(2 * n);
    case CartanType::C: return "SO" + std::to_string(2 * n + 1);
    case CartanType::D: return "SO" + std::to_string(2 * n);
  }
  return "?";
}

}  // namespace satake
