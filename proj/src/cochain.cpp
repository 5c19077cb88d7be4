#include "fspt/cochain.hpp"

#include <numeric>
#include <stdexcept>

namespace fspt {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

}  // namespace

BitCochain::BitCochain(GroupPtr group, int degree)
    : group_(std::move(group)), degree_(degree), indexer_(group_->order(), degree) {
  require(degree >= 1 && degree <= 4, "cochain degree must be 1..4");
  plus_.assign(words_for(indexer_.count()), 0);
  minus_.assign(words_for(indexer_.count()), 0);
}

BitCochain BitCochain::from_function(GroupPtr group, int degree,
                                     const std::function<BitPair(std::span<const int>)>& f) {
  BitCochain out(std::move(group), degree);
  for (std::size_t t = 0; t < out.tuple_count(); ++t) {
    const auto tuple = out.indexer_.unpack(t);
    out.set(t, f(std::span<const int>(tuple.data(), static_cast<std::size_t>(degree))));
  }
  return out;
}

bool BitCochain::is_zero() const {
  for (auto w : plus_)
    if (w) return false;
  for (auto w : minus_)
    if (w) return false;
  return true;
}

bool operator==(const BitCochain& a, const BitCochain& b) {
  return a.degree_ == b.degree_ && *a.group_ == *b.group_ && a.plus_ == b.plus_ &&
         a.minus_ == b.minus_;
}

PhaseCochain::PhaseCochain(GroupPtr group, int degree, std::int64_t den)
    : group_(std::move(group)), degree_(degree), indexer_(group_->order(), degree), den_(den) {
  require(degree >= 1 && degree <= 4, "cochain degree must be 1..4");
  require(den >= 1, "denominator must be positive");
  num_.assign(2 * indexer_.count(), 0);
}

PhaseCochain PhaseCochain::from_function(
    GroupPtr group, int degree, const std::function<PhasePair(std::span<const int>)>& f) {
  PhaseCochain out(std::move(group), degree);
  for (std::size_t t = 0; t < out.tuple_count(); ++t) {
    const auto tuple = out.indexer_.unpack(t);
    out.set(t, f(std::span<const int>(tuple.data(), static_cast<std::size_t>(degree))));
  }
  return out;
}

void PhaseCochain::set(std::size_t t, const PhasePair& v) {
  const std::int64_t den = lcm_checked(lcm_checked(den_, v.plus.den()), v.minus.den());
  if (den != den_) rescale_to(den);
  num_[2 * t] = checked_mul(v.plus.num(), den_ / v.plus.den());
  num_[2 * t + 1] = checked_mul(v.minus.num(), den_ / v.minus.den());
}

void PhaseCochain::rescale_to(std::int64_t den) {
  require(den % den_ == 0, "rescale target must be a multiple of the denominator");
  const std::int64_t f = den / den_;
  if (f == 1) return;
  for (auto& n : num_) n = checked_mul(n, f);
  den_ = den;
}

void PhaseCochain::canonicalize() {
  std::int64_t l = 1;
  for (auto n : num_) {
    const std::int64_t g = std::gcd(n, den_);
    l = lcm_checked(l, den_ / (g == 0 ? den_ : g));
  }
  if (l == den_) return;
  for (auto& n : num_) n = n / (den_ / l);
  den_ = l;
}

bool PhaseCochain::is_zero() const {
  for (auto n : num_)
    if (n) return false;
  return true;
}

bool operator==(const PhaseCochain& a, const PhaseCochain& b) {
  if (a.degree_ != b.degree_ || !(*a.group_ == *b.group_)) return false;
  for (std::size_t i = 0; i < a.num_.size(); ++i) {
    // compare a.num_[i]/a.den_ == b.num_[i]/b.den_ in Q/Z
    if (checked_mul(a.num_[i], b.den_) != checked_mul(b.num_[i], a.den_)) return false;
  }
  return true;
}

namespace {

// Shared tuple combinatorics of the three twisted differentials. Each output
// tuple maps to a signed sum of input lookups, the first of which is hit by
// the swap action a(g).
struct Term {
  std::array<int, 3> tuple;
  int coef;     // +1 or -1
  bool twisted;  // apply swap^{a(g)}
};

template <class F>
void for_each_term(const FiniteGroup& g, int degree, std::span<const int> out, F&& emit) {
  if (degree == 1) {
    // d1 x(g,h) = x^{a(g)}(h) + x(g) - x(gh)
    emit(Term{{out[1], 0, 0}, +1, true});
    emit(Term{{out[0], 0, 0}, +1, false});
    emit(Term{{g.mul(out[0], out[1]), 0, 0}, -1, false});
  } else if (degree == 2) {
    // d2 y(g,h,k) = y^{a(g)}(h,k) + y(g,hk) - y(gh,k) - y(g,h)
    emit(Term{{out[1], out[2], 0}, +1, true});
    emit(Term{{out[0], g.mul(out[1], out[2]), 0}, +1, false});
    emit(Term{{g.mul(out[0], out[1]), out[2], 0}, -1, false});
    emit(Term{{out[0], out[1], 0}, -1, false});
  } else {
    // d3 z(g,h,k,f) = z^{a(g)}(h,k,f) + z(g,hk,f) + z(g,h,k)
    //                 - z(gh,k,f) - z(g,h,kf)
    emit(Term{{out[1], out[2], out[3]}, +1, true});
    emit(Term{{out[0], g.mul(out[1], out[2]), out[3]}, +1, false});
    emit(Term{{out[0], out[1], out[2]}, +1, false});
    emit(Term{{g.mul(out[0], out[1]), out[2], out[3]}, -1, false});
    emit(Term{{out[0], out[1], g.mul(out[2], out[3])}, -1, false});
  }
}

}  // namespace

BitCochain coboundary(const Z2Hom& a, const BitCochain& x) {
  require(x.degree() <= 3, "coboundary input degree must be 1..3");
  const FiniteGroup& g = *x.group();
  BitCochain out(x.group(), x.degree() + 1);
  const TupleIndexer in_ix(g.order(), x.degree());
  for (std::size_t t = 0; t < out.tuple_count(); ++t) {
    const auto tup = out.indexer().unpack(t);
    const std::span<const int> ot(tup.data(), static_cast<std::size_t>(x.degree() + 1));
    const Bit twist = a(ot[0]);
    BitPair acc{0, 0};
    for_each_term(g, x.degree(), ot, [&](const Term& term) {
      BitPair v = x.get(in_ix.index(
          std::span<const int>(term.tuple.data(), static_cast<std::size_t>(x.degree()))));
      if (term.twisted) v = swap_pow(v, twist);
      acc = pair_mul(acc, v);  // signs are invisible mod 2
    });
    out.set(t, acc);
  }
  return out;
}

PhaseCochain coboundary(const Z2Hom& a, const PhaseCochain& x) {
  require(x.degree() <= 3, "coboundary input degree must be 1..3");
  const FiniteGroup& g = *x.group();
  PhaseCochain out(x.group(), x.degree() + 1, x.den());
  const TupleIndexer in_ix(g.order(), x.degree());
  for (std::size_t t = 0; t < out.tuple_count(); ++t) {
    const auto tup = out.indexer().unpack(t);
    const std::span<const int> ot(tup.data(), static_cast<std::size_t>(x.degree() + 1));
    const Bit twist = a(ot[0]);
    std::int64_t plus = 0, minus = 0;
    for_each_term(g, x.degree(), ot, [&](const Term& term) {
      const std::size_t s = in_ix.index(
          std::span<const int>(term.tuple.data(), static_cast<std::size_t>(x.degree())));
      std::int64_t p = x.raw(s, 0), m = x.raw(s, 1);
      if (term.twisted && twist) std::swap(p, m);
      plus += term.coef * p;
      minus += term.coef * m;
    });
    out.set_raw(t, 0, plus);
    out.set_raw(t, 1, minus);
  }
  return out;
}

namespace {

void require_same_shape(const BitCochain& x, const BitCochain& y) {
  require(x.degree() == y.degree() && *x.group() == *y.group(),
          "cochain shape mismatch");
}
void require_same_shape(const PhaseCochain& x, const PhaseCochain& y) {
  require(x.degree() == y.degree() && *x.group() == *y.group(),
          "cochain shape mismatch");
}

}  // namespace

BitCochain pointwise_mul(const BitCochain& x, const BitCochain& y) {
  require_same_shape(x, y);
  BitCochain out(x.group(), x.degree());
  for (std::size_t t = 0; t < x.tuple_count(); ++t) out.set(t, pair_mul(x.get(t), y.get(t)));
  return out;
}

BitCochain pointwise_div(const BitCochain& x, const BitCochain& y) { return pointwise_mul(x, y); }

PhaseCochain pointwise_mul(const PhaseCochain& x, const PhaseCochain& y) {
  require_same_shape(x, y);
  PhaseCochain out(x.group(), x.degree(), lcm_checked(x.den(), y.den()));
  const std::int64_t fx = out.den() / x.den(), fy = out.den() / y.den();
  for (std::size_t t = 0; t < x.tuple_count(); ++t)
    for (int c = 0; c < 2; ++c)
      out.set_raw(t, c, checked_add(checked_mul(x.raw(t, c), fx), checked_mul(y.raw(t, c), fy)));
  return out;
}

PhaseCochain pointwise_div(const PhaseCochain& x, const PhaseCochain& y) {
  return pointwise_mul(x, pointwise_neg(y));
}

PhaseCochain pointwise_neg(const PhaseCochain& x) {
  PhaseCochain out(x.group(), x.degree(), x.den());
  for (std::size_t t = 0; t < x.tuple_count(); ++t)
    for (int c = 0; c < 2; ++c) out.set_raw(t, c, -x.raw(t, c));
  return out;
}

PhaseCochain obstruction_rhs(const BitCochain& kappa, const Z2Hom& a) {
  require(kappa.degree() == 2, "obstruction requires a degree-2 cochain");
  const FiniteGroup& g = *kappa.group();
  PhaseCochain out(kappa.group(), 4, 2);
  const TupleIndexer ix4(g.order(), 4);
  for (std::size_t t = 0; t < out.tuple_count(); ++t) {
    const auto tup = ix4.unpack(t);
    const BitPair left = kappa.at({tup[0], tup[1]});
    const BitPair right = swap_pow(kappa.at({tup[2], tup[3]}), a(g.mul(tup[0], tup[1])));
    const BitPair e = bit_dot(left, right);
    out.set_raw(t, 0, e.plus);
    out.set_raw(t, 1, e.minus);
  }
  return out;
}

namespace {

// SplitMix64: fixed, portable stream.
struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
};

}  // namespace

BitCochain random_bit_cochain(GroupPtr group, int degree, std::uint64_t seed) {
  BitCochain out(std::move(group), degree);
  SplitMix64 rng{seed};
  for (std::size_t t = 0; t < out.tuple_count(); ++t) {
    const std::uint64_t r = rng.next();
    out.set(t, BitPair{static_cast<Bit>(r & 1), static_cast<Bit>((r >> 1) & 1)});
  }
  return out;
}

PhaseCochain random_phase_cochain(GroupPtr group, int degree, std::int64_t denominator,
                                  std::uint64_t seed) {
  if (denominator < 1) throw std::invalid_argument("denominator must be positive");
  PhaseCochain out(std::move(group), degree, denominator);
  SplitMix64 rng{seed};
  for (std::size_t t = 0; t < out.tuple_count(); ++t)
    for (int c = 0; c < 2; ++c)
      out.set_raw(t, c, static_cast<std::int64_t>(rng.next() % static_cast<std::uint64_t>(denominator)));
  return out;
}

bool is_diagonal(const BitCochain& x) {
  for (std::size_t t = 0; t < x.tuple_count(); ++t) {
    const BitPair v = x.get(t);
    if (v.plus != v.minus) return false;
  }
  return true;
}

bool is_diagonal(const PhaseCochain& x) {
  for (std::size_t t = 0; t < x.tuple_count(); ++t)
    if (x.raw(t, 0) != x.raw(t, 1)) return false;
  return true;
}

bool tuple_has_identity(const TupleIndexer& ix, std::size_t t) {
  const auto tup = ix.unpack(t);
  for (int i = 0; i < ix.degree(); ++i)
    if (tup[i] == FiniteGroup::identity()) return true;
  return false;
}

bool is_normalized(const BitCochain& x) {
  for (std::size_t t = 0; t < x.tuple_count(); ++t)
    if (tuple_has_identity(x.indexer(), t) && x.get(t) != BitPair{0, 0}) return false;
  return true;
}

bool is_normalized(const PhaseCochain& x) {
  for (std::size_t t = 0; t < x.tuple_count(); ++t)
    if (tuple_has_identity(x.indexer(), t) && (x.raw(t, 0) != 0 || x.raw(t, 1) != 0)) return false;
  return true;
}

}  // namespace fspt
