#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include "fspt/doubled.hpp"
#include "fspt/finite_group.hpp"
#include "fspt/indexing.hpp"

namespace fspt {

/// Dense doubled Z_2-valued cochain G^degree -> Z_2 + Z_2, bit-packed as two
/// planes (plus and minus components).
class BitCochain {
 public:
  BitCochain(GroupPtr group, int degree);

  static BitCochain from_function(GroupPtr group, int degree,
                                  const std::function<BitPair(std::span<const int>)>& f);

  const GroupPtr& group() const { return group_; }
  int degree() const { return degree_; }
  std::size_t tuple_count() const { return indexer_.count(); }
  const TupleIndexer& indexer() const { return indexer_; }

  BitPair get(std::size_t t) const {
    return {bit(plus_, t), bit(minus_, t)};
  }
  BitPair at(std::span<const int> tuple) const { return get(indexer_.index(tuple)); }
  BitPair at(std::initializer_list<int> tuple) const {
    return at(std::span<const int>(tuple.begin(), tuple.size()));
  }
  void set(std::size_t t, BitPair v) {
    put(plus_, t, v.plus);
    put(minus_, t, v.minus);
  }
  void set(std::span<const int> tuple, BitPair v) { set(indexer_.index(tuple), v); }
  void set(std::initializer_list<int> tuple, BitPair v) {
    set(std::span<const int>(tuple.begin(), tuple.size()), v);
  }

  bool is_zero() const;
  friend bool operator==(const BitCochain& a, const BitCochain& b);

 private:
  static Bit bit(const std::vector<std::uint64_t>& plane, std::size_t t) {
    return static_cast<Bit>((plane[t >> 6] >> (t & 63)) & 1u);
  }
  static void put(std::vector<std::uint64_t>& plane, std::size_t t, Bit v) {
    const std::uint64_t mask = std::uint64_t{1} << (t & 63);
    if (v)
      plane[t >> 6] |= mask;
    else
      plane[t >> 6] &= ~mask;
  }

  GroupPtr group_;
  int degree_;
  TupleIndexer indexer_;
  std::vector<std::uint64_t> plus_, minus_;
};

/// Dense doubled U(1)-valued cochain, stored as numerator arrays over a
/// shared positive denominator (entries are numerators mod den).
class PhaseCochain {
 public:
  PhaseCochain(GroupPtr group, int degree, std::int64_t den = 1);

  static PhaseCochain from_function(GroupPtr group, int degree,
                                    const std::function<PhasePair(std::span<const int>)>& f);

  const GroupPtr& group() const { return group_; }
  int degree() const { return degree_; }
  std::size_t tuple_count() const { return indexer_.count(); }
  const TupleIndexer& indexer() const { return indexer_; }
  std::int64_t den() const { return den_; }

  PhasePair get(std::size_t t) const {
    return {Phase::fraction(num_[2 * t], den_), Phase::fraction(num_[2 * t + 1], den_)};
  }
  PhasePair at(std::span<const int> tuple) const { return get(indexer_.index(tuple)); }
  PhasePair at(std::initializer_list<int> tuple) const {
    return at(std::span<const int>(tuple.begin(), tuple.size()));
  }
  void set(std::size_t t, const PhasePair& v);
  void set(std::span<const int> tuple, const PhasePair& v) { set(indexer_.index(tuple), v); }
  void set(std::initializer_list<int> tuple, const PhasePair& v) {
    set(std::span<const int>(tuple.begin(), tuple.size()), v);
  }

  /// Raw numerator access (component c: 0 = plus, 1 = minus).
  std::int64_t raw(std::size_t t, int c) const { return num_[2 * t + c]; }
  void set_raw(std::size_t t, int c, std::int64_t numerator) {
    num_[2 * t + c] = floor_mod(numerator, den_);
  }
  /// Rescales storage to a denominator that lcm-absorbs the current one.
  void rescale_to(std::int64_t den);
  /// Shrinks the shared denominator to the lcm of the reduced entries.
  void canonicalize();

  bool is_zero() const;
  /// Equality is exact equality in Q/Z entrywise (denominators may differ).
  friend bool operator==(const PhaseCochain& a, const PhaseCochain& b);

 private:
  GroupPtr group_;
  int degree_;
  TupleIndexer indexer_;
  std::int64_t den_;
  std::vector<std::int64_t> num_;
};

/// Twisted coboundary d^n_a. Accepts degree 1..3 inputs; output has degree+1.
BitCochain coboundary(const Z2Hom& a, const BitCochain& x);
PhaseCochain coboundary(const Z2Hom& a, const PhaseCochain& x);

/// Entrywise group law (and its inverse) on same-shape cochains.
BitCochain pointwise_mul(const BitCochain& x, const BitCochain& y);
BitCochain pointwise_div(const BitCochain& x, const BitCochain& y);
PhaseCochain pointwise_mul(const PhaseCochain& x, const PhaseCochain& y);
PhaseCochain pointwise_div(const PhaseCochain& x, const PhaseCochain& y);
PhaseCochain pointwise_neg(const PhaseCochain& x);

/// Right side of the cocycle obstruction: (g,h,k,f) |->
/// (-1)^{kappa(g,h) . kappa^{a(gh)}(k,f)}, a degree-4 phase cochain.
PhaseCochain obstruction_rhs(const BitCochain& kappa, const Z2Hom& a);

/// Deterministic pseudorandom cochains (SplitMix64-based; same seed, same
/// cochain on every platform).
BitCochain random_bit_cochain(GroupPtr group, int degree, std::uint64_t seed);
PhaseCochain random_phase_cochain(GroupPtr group, int degree, std::int64_t denominator,
                                  std::uint64_t seed);

bool is_diagonal(const BitCochain& x);
bool is_diagonal(const PhaseCochain& x);
/// True when every entry with an identity argument is the identity value.
bool is_normalized(const BitCochain& x);
bool is_normalized(const PhaseCochain& x);

/// True when the tuple of the given full-complex index contains the identity.
bool tuple_has_identity(const TupleIndexer& ix, std::size_t t);

}  // namespace fspt
