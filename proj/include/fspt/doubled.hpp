#pragma once

#include <cstdint>

#include "fspt/phase.hpp"

namespace fspt {

using Bit = std::uint8_t;  // values 0/1, XOR group law

/// Ordered pair (plus, minus) of coefficients: the epsilon = +1 and -1
/// components of A + A. The group acts by swapping the two slots.
template <class T>
struct Doubled {
  T plus{};
  T minus{};

  const T& component(int eps) const { return eps == +1 ? plus : minus; }
  friend bool operator==(const Doubled&, const Doubled&) = default;
};

using BitPair = Doubled<Bit>;
using PhasePair = Doubled<Phase>;

/// Applies the swap matrix e times: identity for e = 0, component exchange
/// for e = 1.
template <class T>
Doubled<T> swap_pow(const Doubled<T>& x, Bit e) {
  return e ? Doubled<T>{x.minus, x.plus} : x;
}

/// Pointwise group law: XOR for bits, addition in Q/Z for phases.
inline BitPair pair_mul(BitPair x, BitPair y) {
  return {static_cast<Bit>(x.plus ^ y.plus), static_cast<Bit>(x.minus ^ y.minus)};
}
inline PhasePair pair_mul(const PhasePair& x, const PhasePair& y) {
  return {x.plus + y.plus, x.minus + y.minus};
}
inline PhasePair pair_div(const PhasePair& x, const PhasePair& y) {
  return {x.plus - y.plus, x.minus - y.minus};
}
inline PhasePair pair_neg(const PhasePair& x) { return {-x.plus, -x.minus}; }

/// Pointwise bit product, as in exponents kappa(g,h) . kappa^{a(gh)}(k,f).
inline BitPair bit_dot(BitPair x, BitPair y) {
  return {static_cast<Bit>(x.plus & y.plus), static_cast<Bit>(x.minus & y.minus)};
}

/// (-1)^x componentwise: bit b lifts to the phase b/2.
inline PhasePair sign_of_bits(BitPair x) {
  return {lift_half(x.plus), lift_half(x.minus)};
}

}  // namespace fspt
