#pragma once

#include "satake/numeric_types.hpp"

#include <compare>
#include <initializer_list>
#include <ostream>
#include <vector>

namespace satake {

/// Exact vector in epsilon-coordinates of the ambient space.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t dim) : c_(dim, Frac(0)) {}
  explicit Weight(std::vector<Frac> coords) : c_(std::move(coords)) {}
  Weight(std::initializer_list<std::int64_t> ints) {
    c_.reserve(ints.size());
    for (auto v : ints) c_.emplace_back(v);
  }
  static Weight unit(std::size_t dim, std::size_t i, Frac scale = Frac(1)) {
    Weight w(dim);
    w.c_[i] = scale;
    return w;
  }

  std::size_t dim() const { return c_.size(); }
  const Frac& operator[](std::size_t i) const { return c_[i]; }
  Frac& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Frac>& coords() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }

  Weight& operator+=(const Weight& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Weight& operator*=(const Frac& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Frac& s, Weight a) { return a *= s; }
  friend Weight operator*(std::int64_t s, Weight a) { return a *= Frac(s); }
  Weight operator-() const {
    Weight r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend bool operator==(const Weight& a, const Weight& b) { return a.c_ == b.c_; }
  friend bool operator<(const Weight& a, const Weight& b) { return a.c_ < b.c_; }

  friend std::ostream& operator<<(std::ostream& os, const Weight& w) {
    os << '(';
    for (std::size_t i = 0; i < w.c_.size(); ++i) os << (i ? "," : "") << to_string(w.c_[i]);
    return os << ')';
  }

 private:
  std::vector<Frac> c_;
};

/// Euclidean pairing in epsilon-coordinates.
inline Frac dot(const Weight& a, const Weight& b) {
  Frac s(0);
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace satake
