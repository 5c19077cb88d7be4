#pragma once

#include <memory>

#include "fspt/finite_group.hpp"

namespace fspt::test {

inline GroupPtr make(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

inline GroupPtr z2() { return make(FiniteGroup::cyclic(2)); }
inline GroupPtr z3() { return make(FiniteGroup::cyclic(3)); }
inline GroupPtr z4() { return make(FiniteGroup::cyclic(4)); }
inline GroupPtr trivial() { return make(FiniteGroup::cyclic(1)); }
inline GroupPtr z2xz2() {
  return make(FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)));
}
inline GroupPtr z2xz4() {
  return make(FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(4)));
}
inline GroupPtr d4() { return make(FiniteGroup::dihedral(4)); }

inline Z2Hom zero_hom(const FiniteGroup& g) {
  return Z2Hom{std::vector<Bit>(static_cast<std::size_t>(g.order()), 0)};
}

}  // namespace fspt::test
