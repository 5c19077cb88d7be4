#pragma once

#include <array>
#include <cstddef>
#include <span>

namespace fspt {

/// Row-major indexing of tuples (g_1,...,g_d) over element indices 0..n-1.
class TupleIndexer {
 public:
  TupleIndexer(int order, int degree) : n_(order), degree_(degree) {
    count_ = 1;
    for (int i = 0; i < degree; ++i) count_ *= static_cast<std::size_t>(n_);
  }

  int order() const { return n_; }
  int degree() const { return degree_; }
  std::size_t count() const { return count_; }

  std::size_t index(std::span<const int> tuple) const {
    std::size_t idx = 0;
    for (int i = 0; i < degree_; ++i) idx = idx * n_ + static_cast<std::size_t>(tuple[i]);
    return idx;
  }

  std::array<int, 4> unpack(std::size_t idx) const {
    std::array<int, 4> t{0, 0, 0, 0};
    for (int i = degree_ - 1; i >= 0; --i) {
      t[i] = static_cast<int>(idx % n_);
      idx /= n_;
    }
    return t;
  }

 private:
  int n_;
  int degree_;
  std::size_t count_;
};

/// Indexing of tuples over the non-identity elements 1..n-1 only (the
/// normalized subcomplex). Tuples carry real element indices.
class NormalizedIndexer {
 public:
  NormalizedIndexer(int order, int degree) : n_(order), degree_(degree) {
    count_ = 1;
    for (int i = 0; i < degree; ++i) count_ *= static_cast<std::size_t>(n_ - 1);
  }

  int order() const { return n_; }
  int degree() const { return degree_; }
  std::size_t count() const { return count_; }

  /// Tuple must have all entries in 1..n-1.
  std::size_t index(std::span<const int> tuple) const {
    std::size_t idx = 0;
    for (int i = 0; i < degree_; ++i)
      idx = idx * (n_ - 1) + static_cast<std::size_t>(tuple[i] - 1);
    return idx;
  }

  std::array<int, 4> unpack(std::size_t idx) const {
    std::array<int, 4> t{0, 0, 0, 0};
    for (int i = degree_ - 1; i >= 0; --i) {
      t[i] = static_cast<int>(idx % (n_ - 1)) + 1;
      idx /= (n_ - 1);
    }
    return t;
  }

 private:
  int n_;
  int degree_;
  std::size_t count_;
};

}  // namespace fspt
