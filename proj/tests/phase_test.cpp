#include <doctest.h>

#include "fspt/doubled.hpp"
#include "fspt/sample.hpp"

using namespace fspt;

namespace {
Phase fr(std::int64_t n, std::int64_t d) { return Phase::fraction(n, d); }
}  // namespace

TEST_CASE("phase arithmetic on fixed values") {
  CHECK(fr(1, 8) + fr(7, 8) == fr(0, 1));
  CHECK(fr(3, 8).scaled(2) == fr(3, 4));
  CHECK(-fr(1, 4) == fr(3, 4));
  CHECK(fr(6, 8) == fr(3, 4));      // reduction
  CHECK(fr(-1, 8) == fr(7, 8));     // mod 1
  CHECK(fr(9, 8) == fr(1, 8));
  CHECK(fr(0, 5) == fr(0, 1));      // zero is 0/1
  CHECK(fr(2, -4) == fr(1, 2));     // negative denominator
}

TEST_CASE("phase group laws hold exactly on random values") {
  SplitMix64 rng{20240811};
  for (int i = 0; i < 500; ++i) {
    const auto p = fr(static_cast<std::int64_t>(rng.below(97)), 1 + static_cast<std::int64_t>(rng.below(96)));
    const auto q = fr(static_cast<std::int64_t>(rng.below(97)), 1 + static_cast<std::int64_t>(rng.below(96)));
    const auto r = fr(static_cast<std::int64_t>(rng.below(97)), 1 + static_cast<std::int64_t>(rng.below(96)));
    CHECK(p + q == q + p);
    CHECK((p + q) + r == p + (q + r));
    CHECK(p + (-p) == Phase{});
    CHECK(p - q == p + (-q));
  }
}

TEST_CASE("quarter and eighth lifts") {
  CHECK(lift_quarter(1) == fr(1, 4));
  CHECK(lift_quarter(-1) == fr(3, 4));
  CHECK(lift_eighth(-2) == fr(3, 4));
  CHECK(lift_eighth(8) == Phase{});
  CHECK(lift_half(3) == fr(1, 2));
}

TEST_CASE("phase parsing is strict about canonical form") {
  CHECK(Phase::parse("3/8", true) == fr(3, 8));
  CHECK(Phase::parse("0/1", true) == Phase{});
  CHECK(!Phase::parse("3/6", true));   // not reduced
  CHECK(!Phase::parse("9/8", true));   // not in [0,1)
  CHECK(!Phase::parse("0/2", true));
  CHECK(!Phase::parse("-1/8", true));
  CHECK(!Phase::parse("1/", true));
  CHECK(!Phase::parse("x/8", true));
  CHECK(Phase::parse("3/6", false) == fr(1, 2));
  CHECK(fr(3, 8).str() == "3/8");
  CHECK(Phase{}.str() == "0/1");
}

TEST_CASE("swap acts by exchanging components") {
  const PhasePair x{fr(1, 8), fr(3, 8)};
  CHECK(swap_pow(x, 1) == PhasePair{fr(3, 8), fr(1, 8)});
  CHECK(swap_pow(x, 0) == x);
  const PhasePair d{fr(1, 3), fr(1, 3)};
  CHECK(swap_pow(d, 1) == d);
  CHECK(swap_pow(BitPair{0, 1}, 1) == BitPair{1, 0});
}

TEST_CASE("swap is an involution and a group action") {
  SplitMix64 rng{7};
  for (int i = 0; i < 200; ++i) {
    const PhasePair x{fr(static_cast<std::int64_t>(rng.below(16)), 16),
                      fr(static_cast<std::int64_t>(rng.below(16)), 16)};
    const Bit e1 = static_cast<Bit>(rng.next() & 1), e2 = static_cast<Bit>(rng.next() & 1);
    CHECK(swap_pow(swap_pow(x, 1), 1) == x);
    CHECK(swap_pow(x, static_cast<Bit>(e1 ^ e2)) == swap_pow(swap_pow(x, e2), e1));
  }
}

TEST_CASE("pointwise pair product") {
  CHECK(pair_mul(PhasePair{fr(1, 8), fr(1, 4)}, PhasePair{fr(1, 8), fr(3, 4)}) ==
        PhasePair{fr(1, 4), Phase{}});
  const PhasePair x{fr(2, 7), fr(5, 9)};
  CHECK(pair_mul(x, PhasePair{}) == x);
  CHECK(pair_mul(BitPair{1, 0}, BitPair{1, 1}) == BitPair{0, 1});
}

TEST_CASE("bit products and sign lifting") {
  CHECK(bit_dot(BitPair{1, 0}, BitPair{1, 1}) == BitPair{1, 0});
  CHECK(bit_dot(BitPair{1, 1}, BitPair{0, 0}) == BitPair{0, 0});
  CHECK(bit_dot(BitPair{1, 1}, BitPair{1, 1}) == BitPair{1, 1});
  CHECK(sign_of_bits(BitPair{0, 0}) == PhasePair{});
  CHECK(sign_of_bits(BitPair{1, 0}) == PhasePair{fr(1, 2), Phase{}});
  CHECK(sign_of_bits(BitPair{1, 1}) == PhasePair{fr(1, 2), fr(1, 2)});
}

TEST_CASE("sign lifting is a homomorphism") {
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      const BitPair bx{static_cast<Bit>(x & 1), static_cast<Bit>(x >> 1)};
      const BitPair by{static_cast<Bit>(y & 1), static_cast<Bit>(y >> 1)};
      CHECK(sign_of_bits(pair_mul(bx, by)) ==
            pair_mul(sign_of_bits(bx), sign_of_bits(by)));
    }
}
