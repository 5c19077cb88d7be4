#include <doctest.h>

#include "fspt/sample.hpp"
#include "fspt/triple.hpp"
#include "test_support.hpp"

using namespace fspt;
using namespace fspt::test;

namespace {

Phase fr(std::int64_t n, std::int64_t d) { return Phase::fraction(n, d); }

// Independent evaluation of d^3_a straight from the displayed formula; used
// as the oracle against the library's coboundary path.
PhasePair d3_direct(const PhaseCochain& z, const Z2Hom& a, int g0, int h, int k, int f) {
  const FiniteGroup& g = *z.group();
  auto val = [&](int x, int y, int w) { return z.at({x, y, w}); };
  PhasePair acc = swap_pow(val(h, k, f), a(g0));
  acc = pair_mul(acc, val(g0, g.mul(h, k), f));
  acc = pair_mul(acc, val(g0, h, k));
  acc = pair_div(acc, val(g.mul(g0, h), k, f));
  acc = pair_div(acc, val(g0, h, g.mul(k, f)));
  return acc;
}

// The standard nontrivial diagonal triple on Z_2: kappa = 0 and
// c(g,g,g) = (1/2, 1/2), all other entries trivial.
PD0Triple nontrivial_z2_triple() {
  const auto g = z2();
  PhaseCochain c(g, 3, 2);
  c.set({1, 1, 1}, PhasePair{fr(1, 2), fr(1, 2)});
  return PD0Triple{g, zero_hom(*g), BitCochain(g, 2), c};
}

}  // namespace

TEST_CASE("validate_triple on the trivial and standard triples") {
  const auto g = z2();
  CHECK(!validate_triple(PD0Triple::trivial(g, zero_hom(*g))));

  const PD0Triple t = nontrivial_z2_triple();
  // oracle: the full d^3 evaluation vanishes on all 16 tuples
  for (int a0 = 0; a0 < 2; ++a0)
    for (int b = 0; b < 2; ++b)
      for (int c0 = 0; c0 < 2; ++c0)
        for (int d = 0; d < 2; ++d)
          CHECK(d3_direct(t.c, t.a, a0, b, c0, d) == PhasePair{});
  CHECK(!validate_triple(t));
  CHECK(is_diagonal(t));

  // same shape with quarter phases is not a cocycle
  PhaseCochain bad(g, 3, 4);
  bad.set({1, 1, 1}, PhasePair{fr(1, 4), fr(1, 4)});
  const PD0Triple tb{g, zero_hom(*g), BitCochain(g, 2), bad};
  const auto v = validate_triple(tb);
  REQUIRE(v);
  CHECK(v->constraint == "c-obstruction");
}

TEST_CASE("validate_triple checks the kappa cocycle condition") {
  const auto g = z2xz2();
  const Z2Hom a{{0, 1, 1, 0}};
  // constant (1,0) is a cocycle only for trivial a: with this a the swap term
  // breaks closure
  BitCochain k(g, 2);
  for (std::size_t t = 0; t < k.tuple_count(); ++t) k.set(t, BitPair{1, 0});
  const PD0Triple t{g, a, k, PhaseCochain(g, 3)};
  const auto v = validate_triple(t);
  REQUIRE(v);
  CHECK(v->constraint == "kappa-cocycle");
}

TEST_CASE("solve_kappa_move") {
  const auto g = z2();
  const PD0Triple t = PD0Triple::trivial(g, zero_hom(*g));
  TwistSystem sys(g, t.a);

  auto same = solve_kappa_move(t, t, sys);
  REQUIRE(same);
  CHECK(same->particular.is_zero());
  for (const auto& k : same->kernel) CHECK(coboundary(t.a, k).is_zero());
  // kernel of d^1 on Z_2 (a = 0): m free at g, pinned at e -> dimension 2
  CHECK(same->kernel.size() == 2);

  // unreachable kappa difference: a single (1,0) entry at (g,g) is not a
  // coboundary (the image consists of constant cochains)
  PD0Triple t2 = t;
  t2.kappa.set({1, 1}, BitPair{1, 0});
  CHECK(!solve_kappa_move(t, t2, sys));

  // a reachable difference: d^1 m0 for m0 = (0,1) at g... on Z_2 with a = 0
  // every coboundary is constant; target the constant (0,1) cochain
  PD0Triple t3 = t;
  for (std::size_t s = 0; s < t3.kappa.tuple_count(); ++s) t3.kappa.set(s, BitPair{0, 1});
  const auto sol = solve_kappa_move(t, t3, sys);
  REQUIRE(sol);
  CHECK(coboundary(t.a, sol->particular) == t3.kappa);
}

TEST_CASE("coboundary membership over the torus") {
  const auto g = z2();
  const Z2Hom a = zero_hom(*g);
  TwistSystem sys(g, a);

  // the identity cochain is a coboundary
  CHECK(coboundary_membership(PhaseCochain(g, 3), sys).member());

  // constructed coboundaries are members and the preimage verifies
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const PhaseCochain sigma0 = random_phase_cochain(g, 2, 8, seed);
    const PhaseCochain r = coboundary(a, sigma0);
    const auto res = coboundary_membership(r, sys);
    REQUIRE(res.member());
    CHECK(coboundary(a, *res.sigma) == r);
  }

  // an identity-argument entry that no coboundary can reach
  PhaseCochain r(g, 3, 8);
  r.set({0, 0, 0}, PhasePair{fr(1, 8), Phase{}});
  const auto res = coboundary_membership(r, sys);
  REQUIRE(!res.member());
  REQUIRE(res.witness);
  CHECK(!res.witness->pairing.is_zero());
  // the witness row is a genuine integer left-kernel row
  const IntMatrix& d2 = sys.ints(2, false);
  const IntVector prod = res.witness->row.transpose() * d2;
  CHECK(prod.isZero());
}

TEST_CASE("equiv: reflexivity, constructed moves, and the rigid pair") {
  const auto g = z2();
  const Z2Hom a = zero_hom(*g);
  TwistSystem sys(g, a);

  const PD0Triple triv = PD0Triple::trivial(g, a);
  const PD0Triple hot = nontrivial_z2_triple();

  // t ~ t with a replaying certificate
  const EquivResult self = equiv(triv, triv, sys);
  REQUIRE(self.verdict == EquivVerdict::equivalent);
  CHECK(self.certificate->m.is_zero());

  // t ~ (t moved by a coboundary)
  PD0Triple moved = triv;
  moved.c = coboundary(a, random_phase_cochain(g, 2, 8, 3));
  CHECK(equiv(triv, moved, sys).verdict == EquivVerdict::equivalent);

  // the two Z_2 diagonal classes are distinct
  CHECK(equiv(triv, hot, sys).verdict == EquivVerdict::inequivalent);
  CHECK(equiv(hot, triv, sys).verdict == EquivVerdict::inequivalent);
  CHECK(equiv(hot, hot, sys).verdict == EquivVerdict::equivalent);

  // differing a decides immediately
  PD0Triple other = PD0Triple::trivial(g, Z2Hom{{0, 1}});
  CHECK(equiv(triv, other).verdict == EquivVerdict::inequivalent);
  CHECK(equiv(triv, other).reason == "a-differs");
}

TEST_CASE("equiv: enumeration mode agrees with the linear reduction") {
  const auto g = z2();
  for (const auto& a : all_z2_homs(*g)) {
    TwistSystem sys(g, a);
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      const PD0Triple t1 = sample_valid_triple(g, a, 8, seed, sys);
      const PD0Triple t2 = sample_valid_triple(g, a, 8, seed + 1000, sys);
      EquivOptions lin;
      EquivOptions enu;
      enu.enumerate = true;
      const auto r1 = equiv(t1, t2, sys, lin);
      const auto r2 = equiv(t1, t2, sys, enu);
      CHECK(r1.verdict == r2.verdict);
      // symmetry of the decision
      CHECK(equiv(t2, t1, sys, lin).verdict == r1.verdict);
    }
  }
}

TEST_CASE("equiv honors the enumeration budget") {
  const auto g = z2();
  const Z2Hom a = zero_hom(*g);
  TwistSystem sys(g, a);
  EquivOptions opts;
  opts.enumerate = true;
  opts.budget_log2 = 0;  // only the particular solution is tried
  const EquivResult r = equiv(PD0Triple::trivial(g, a), nontrivial_z2_triple(), sys, opts);
  CHECK(r.verdict == EquivVerdict::budget_exceeded);
}

TEST_CASE("move soundness: moved triples validate and certify equivalent") {
  for (const auto& gp : {z2(), z4()}) {
    for (const auto& a : all_z2_homs(*gp)) {
      TwistSystem sys(gp, a);
      for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const PD0Triple t = sample_valid_triple(gp, a, 8, seed, sys);
        const BitCochain m = random_bit_cochain(gp, 1, seed * 7 + 1);
        const PhaseCochain sigma = random_phase_cochain(gp, 2, 8, seed * 7 + 2);
        const PD0Triple moved = apply_move(t, m, sigma);
        CHECK(!validate_triple(moved));
        const EquivResult r = equiv(t, moved, sys);
        REQUIRE(r.verdict == EquivVerdict::equivalent);
        // the certificate replays exactly
        const PD0Triple replay = apply_move(t, r.certificate->m, r.certificate->sigma);
        CHECK(replay.kappa == moved.kappa);
        CHECK(replay.c == moved.c);
      }
    }
  }
}

TEST_CASE("diagonal representative search") {
  const auto g = z2();
  const Z2Hom a = zero_hom(*g);
  TwistSystem sys(g, a);

  // a diagonal triple is its own witness
  const PD0Triple hot = nontrivial_z2_triple();
  const auto res = diagonal_representative(hot, sys);
  REQUIRE(res.status == DiagonalSearchResult::Status::found);
  CHECK(is_diagonal(*res.representative));
  CHECK(equiv(hot, *res.representative, sys).verdict == EquivVerdict::equivalent);

  // a non-diagonal kappa that cannot be diagonalized: plus/minus difference
  // (1,0) at (g,g) only, which is not a d^1 m component difference on Z_2
  PD0Triple skew = PD0Triple::trivial(g, a);
  skew.kappa.set({1, 1}, BitPair{1, 0});
  // not a valid triple as-is (obstruction changes); check kappa first:
  if (!validate_triple(skew)) {
    const auto r2 = diagonal_representative(skew, sys);
    CHECK(r2.status == DiagonalSearchResult::Status::not_in_class);
  }
}

TEST_CASE("off-diagonal component class on Z_2x Z_2 stays off-diagonal") {
  // kappa constant (1,0): a cocycle for a = 0 whose obstruction splits the
  // components; the diagonal search decides membership honestly.
  const auto g = z2xz2();
  const Z2Hom a = zero_hom(*g);
  TwistSystem sys(g, a);
  BitCochain k(g, 2);
  for (std::size_t t = 0; t < k.tuple_count(); ++t) k.set(t, BitPair{1, 0});

  // build a c solving the obstruction over denominator 8, if possible
  const PhaseCochain obst = obstruction_rhs(k, a);
  IntVector w = discretize_num(obst);
  for (Eigen::Index i = 0; i < w.size(); ++i) w(i) = floor_mod(w(i) * 4, 8);
  const SmithForm& d3 = sys.smith(3, false);
  const ModNSolveResult sol = solve_mod_n(d3, w, 8);
  REQUIRE(sol.solvable);
  const PD0Triple t{g, a, k, phase_cochain_from_num(g, 3, sol.particular, 8)};
  REQUIRE(!validate_triple(t));

  const auto res = diagonal_representative(t, sys);
  // The search succeeds: an m with m(e) != 0 diagonalizes this kappa (the
  // component-sum equation d^1 s = 1 is solvable with s(e) = 1), and the
  // component-difference of c is absorbed by a sigma coboundary.
  REQUIRE(res.status == DiagonalSearchResult::Status::found);
  CHECK(is_diagonal(*res.representative));
  CHECK(!validate_triple(*res.representative));
  CHECK(equiv(t, *res.representative, sys).verdict == EquivVerdict::equivalent);
}
