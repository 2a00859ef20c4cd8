#pragma once

// Small exact linear algebra over Frac used for coordinate changes.

#include "satake/numeric_types.hpp"
#include "satake/weight.hpp"

#include <optional>
#include <vector>

namespace satake::linalg {

using Matrix = std::vector<std::vector<Frac>>;

/// Gauss-Jordan inverse; nullopt when singular.
inline std::optional<Matrix> inverse(Matrix a) {
  const std::size_t n = a.size();
  Matrix inv(n, std::vector<Frac>(n, Frac(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Frac p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Frac f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

/// Coordinates of vectors in a (possibly non-spanning) independent family.
///
/// Solves v = sum_i c_i b_i through the Gram matrix and verifies the
/// reconstruction, so vectors outside the span are reported as nullopt.
class Coordinates {
 public:
  Coordinates() = default;
  explicit Coordinates(std::vector<Weight> basis) : basis_(std::move(basis)) {
    const std::size_t r = basis_.size();
    Matrix gram(r, std::vector<Frac>(r));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) gram[i][j] = dot(basis_[i], basis_[j]);
    auto inv = inverse(gram);
    if (!inv) throw PreconditionError("degenerate basis: vectors are linearly dependent");
    gram_inv_ = std::move(*inv);
  }

  std::size_t size() const { return basis_.size(); }
  const std::vector<Weight>& basis() const { return basis_; }

  std::optional<std::vector<Frac>> solve(const Weight& v) const {
    const std::size_t r = basis_.size();
    std::vector<Frac> proj(r);
    for (std::size_t i = 0; i < r; ++i) proj[i] = dot(basis_[i], v);
    std::vector<Frac> c(r, Frac(0));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) c[i] += gram_inv_[i][j] * proj[j];
    Weight back(v.dim());
    for (std::size_t i = 0; i < r; ++i) back += c[i] * basis_[i];
    if (!(back == v)) return std::nullopt;
    return c;
  }

 private:
  std::vector<Weight> basis_;
  Matrix gram_inv_;
};

}  // namespace satake::linalg
