#include "fspt/gf2.hpp"

namespace fspt {

Gf2Matrix Gf2Matrix::from_int(const IntMatrix& m) {
  Gf2Matrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (m(r, c) & 1) out.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c), true);
  return out;
}

Gf2Vec Gf2Matrix::multiply(const Gf2Vec& x) const {
  Gf2Vec y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) y.set(r, row(r).parity_and(x));
  return y;
}

Gf2System::Gf2System(Gf2Matrix a) : a_(std::move(a)), r_(a_) {
  const std::size_t rows = a_.rows(), cols = a_.cols();
  e_ = Gf2Matrix(rows, rows);
  for (std::size_t i = 0; i < rows; ++i) e_.set(i, i, true);

  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r)
      if (r_.get(r, c)) {
        pivot = r;
        break;
      }
    if (pivot == rows) continue;
    if (pivot != rank) {
      // swap rows by xor-trick is wasteful; do a plain swap through xor rows
      r_.xor_row(rank, pivot);
      r_.xor_row(pivot, rank);
      r_.xor_row(rank, pivot);
      e_.xor_row(rank, pivot);
      e_.xor_row(pivot, rank);
      e_.xor_row(rank, pivot);
    }
    for (std::size_t r = 0; r < rows; ++r)
      if (r != rank && r_.get(r, c)) {
        r_.xor_row(r, rank);
        e_.xor_row(r, rank);
      }
    pivot_cols_.push_back(c);
    ++rank;
  }

  // kernel basis: one vector per free column
  std::vector<int> pivot_row_of_col(cols, -1);
  for (std::size_t i = 0; i < pivot_cols_.size(); ++i)
    pivot_row_of_col[pivot_cols_[i]] = static_cast<int>(i);
  for (std::size_t c = 0; c < cols; ++c) {
    if (pivot_row_of_col[c] >= 0) continue;
    Gf2Vec k(cols);
    k.set(c, true);
    for (std::size_t i = 0; i < pivot_cols_.size(); ++i)
      if (r_.get(i, c)) k.set(pivot_cols_[i], true);
    kernel_.push_back(std::move(k));
  }
}

std::optional<Gf2Vec> Gf2System::solve(const Gf2Vec& b) const {
  const std::size_t rows = a_.rows(), cols = a_.cols();
  // y = E b, then rows beyond rank must vanish and pivot rows read off x.
  Gf2Vec x(cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const bool yr = e_.row(r).parity_and(b);
    if (r < pivot_cols_.size()) {
      if (yr) x.set(pivot_cols_[r], true);
    } else if (yr) {
      return std::nullopt;
    }
  }
  return x;
}

}  // namespace fspt
