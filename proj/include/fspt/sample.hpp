#pragma once

#include <cstdint>

#include "fspt/crt.hpp"
#include "fspt/triple.hpp"

namespace fspt {

/// SplitMix64 stream; fixed across platforms so seeded tests reproduce.
struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

/// Deterministic pseudorandom valid triple: a random normalized
/// kappa-cocycle whose obstruction is N-torsion solvable (kappa = 0 as the
/// guaranteed fallback) and a random solution c.
PD0Triple sample_valid_triple(const GroupPtr& g, const Z2Hom& a, std::int64_t n,
                              std::uint64_t seed, TwistSystem& sys);

/// Deterministic pseudorandom valid diagonal triple. The diagonal sector is
/// untwisted and undoubled, so one solver serves every a of the group.
class DiagonalSampler {
 public:
  DiagonalSampler(GroupPtr g, std::int64_t n);
  PD0Triple sample(const Z2Hom& a, std::uint64_t seed, TwistSystem& sys) const;

 private:
  GroupPtr group_;
  std::int64_t n_;
  SmithForm d3_;  // undoubled untwisted normalized degree-3 differential
};

std::vector<Bit> random_b(const FiniteGroup& g, std::uint64_t seed);

}  // namespace fspt
