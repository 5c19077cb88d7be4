#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Core>

namespace fspt {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// Bit vector with word-packed storage.
class Gf2Vec {
 public:
  Gf2Vec() = default;
  explicit Gf2Vec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v) {
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v)
      w_[i >> 6] |= m;
    else
      w_[i >> 6] &= ~m;
  }
  void operator^=(const Gf2Vec& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
  }
  bool is_zero() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }
  bool parity_and(const Gf2Vec& o) const {  // <x, y> over GF(2)
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < w_.size(); ++k) acc ^= (w_[k] & o.w_[k]);
    return __builtin_parityll(acc);
  }
  friend bool operator==(const Gf2Vec&, const Gf2Vec&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

/// Row-major packed GF(2) matrix.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_((cols + 63) / 64), w_(rows * stride_, 0) {}

  static Gf2Matrix from_int(const IntMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const {
    return (w_[r * stride_ + (c >> 6)] >> (c & 63)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    const std::uint64_t m = std::uint64_t{1} << (c & 63);
    if (v)
      w_[r * stride_ + (c >> 6)] |= m;
    else
      w_[r * stride_ + (c >> 6)] &= ~m;
  }
  void xor_row(std::size_t dst, std::size_t src) {
    for (std::size_t k = 0; k < stride_; ++k) w_[dst * stride_ + k] ^= w_[src * stride_ + k];
  }
  Gf2Vec row(std::size_t r) const {
    Gf2Vec v(cols_);
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) v.set(c, true);
    return v;
  }
  Gf2Vec multiply(const Gf2Vec& x) const;  // A x

 private:
  std::size_t rows_ = 0, cols_ = 0, stride_ = 0;
  std::vector<std::uint64_t> w_;
};

/// Echelonized linear system A x = b over GF(2), reusable across right sides.
class Gf2System {
 public:
  explicit Gf2System(Gf2Matrix a);

  std::size_t rank() const { return pivot_cols_.size(); }
  const Gf2Matrix& matrix() const { return a_; }
  const std::vector<Gf2Vec>& kernel_basis() const { return kernel_; }

  /// Particular solution of A x = b, or nullopt when b is outside the image.
  std::optional<Gf2Vec> solve(const Gf2Vec& b) const;
  /// Membership of b in the column space.
  bool in_image(const Gf2Vec& b) const { return solve(b).has_value(); }

 private:
  Gf2Matrix a_;     // original
  Gf2Matrix r_;     // row-reduced echelon form
  Gf2Matrix e_;     // elimination transform, r_ = e_ * a_
  std::vector<std::size_t> pivot_cols_;  // pivot column of each echelon row
  std::vector<Gf2Vec> kernel_;
};

}  // namespace fspt
