#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "fspt/finite_group.hpp"
#include "test_support.hpp"

using namespace fspt;
using namespace fspt::test;

TEST_CASE("cyclic group construction") {
  const auto g1 = FiniteGroup::cyclic(1);
  CHECK(g1.order() == 1);
  CHECK(g1.table() == std::vector<int>{0});

  const auto g2 = FiniteGroup::cyclic(2);
  CHECK(g2.table() == std::vector<int>{0, 1, 1, 0});

  const auto g4 = FiniteGroup::cyclic(4);
  CHECK(g4.mul(3, 2) == 1);
  CHECK(!check_axioms(g4));
  CHECK_THROWS_AS(FiniteGroup::cyclic(0), std::invalid_argument);
}

TEST_CASE("direct products") {
  const auto v4 = *z2xz2();
  CHECK(v4.order() == 4);
  for (int g = 1; g < 4; ++g) CHECK(v4.mul(g, g) == 0);  // every non-identity is self-inverse

  const auto g = FiniteGroup::cyclic(3);
  const auto gt = FiniteGroup::direct_product(g, FiniteGroup::cyclic(1));
  CHECK(gt.table() == g.table());

  const auto z2z4 = *z2xz4();
  CHECK(z2z4.order() == 8);
  // (1,1) has index 1*4+1 = 5 and squares to (0,2) = index 2
  CHECK(z2z4.mul(5, 5) == 2);
}

TEST_CASE("axiom checking pinpoints the first violation") {
  CHECK(!check_axioms(FiniteGroup::cyclic(6)));

  // identity row broken
  auto v = check_table(2, {0, 0, 1, 0});
  REQUIRE(v);
  CHECK(v->invariant == "identity-row");

  // latin square violation in row 1
  v = check_table(2, {0, 1, 1, 1});
  REQUIRE(v);
  CHECK(v->invariant == "latin-row");

  // non-associative Latin square with identity: deterministic backtracking
  // over reduced Latin squares of order 5, keeping the first one the
  // associativity scan rejects.
  {
    const int n = 5;
    std::vector<int> table(static_cast<std::size_t>(n) * n, -1);
    for (int h = 0; h < n; ++h) table[h] = h;
    for (int r = 1; r < n; ++r) table[static_cast<std::size_t>(r) * n] = r;
    bool found = false;
    std::function<void(int)> search = [&](int row) {
      if (found) return;
      if (row == n) {
        const auto check = check_table(n, table);
        if (check && check->invariant == "associativity") found = true;
        return;
      }
      std::vector<int> perm{0, 1, 2, 3, 4};
      do {
        if (perm[0] != row) continue;
        bool colsOk = true;
        for (int h = 1; h < n && colsOk; ++h)
          for (int r0 = 0; r0 < row && colsOk; ++r0)
            if (table[static_cast<std::size_t>(r0) * n + h] == perm[static_cast<std::size_t>(h)])
              colsOk = false;
        if (!colsOk) continue;
        for (int h = 0; h < n; ++h)
          table[static_cast<std::size_t>(row) * n + h] = perm[static_cast<std::size_t>(h)];
        search(row + 1);
        if (found) return;
      } while (std::next_permutation(perm.begin(), perm.end()));
      for (int h = 1; h < n; ++h) table[static_cast<std::size_t>(row) * n + h] = -1;
    };
    search(1);
    REQUIRE(found);
    const auto w = check_table(5, table);
    REQUIRE(w);
    CHECK(w->invariant == "associativity");
    // the witness triple really fails
    auto at = [&](int a, int b) { return table[static_cast<std::size_t>(a) * 5 + b]; };
    const auto [x, y, z] = std::tuple{w->witness[0], w->witness[1], w->witness[2]};
    CHECK(at(at(x, y), z) != at(x, at(y, z)));
  }
}

TEST_CASE("inverses") {
  CHECK(FiniteGroup::cyclic(4).inverse(3) == 1);
  CHECK(FiniteGroup::cyclic(4).inverse(0) == 0);
  CHECK(z2xz2()->inverse(3) == 3);
  for (const auto& g : {*z4(), *d4(), *z2xz4()})
    for (int x = 0; x < g.order(); ++x) {
      CHECK(g.mul(x, g.inverse(x)) == 0);
      CHECK(g.mul(g.inverse(x), x) == 0);
    }
}

TEST_CASE("dihedral group of order 8") {
  const auto g = *d4();
  CHECK(g.order() == 8);
  CHECK(!check_axioms(g));
  // r*s != s*r (non-abelian)
  CHECK(g.mul(1, 4) != g.mul(4, 1));
}

TEST_CASE("loaded table must pass the axioms") {
  CHECK_THROWS_AS(FiniteGroup::from_table(2, {0, 1, 1, 1}), GroupError);
  const auto g = FiniteGroup::from_table(2, {0, 1, 1, 0});
  CHECK(g.order() == 2);
  // D4 via from_table round trip
  const auto d = *d4();
  const auto d2 = FiniteGroup::from_table(d.order(), d.table());
  CHECK(d2 == d);
}

TEST_CASE("Z2-valued homomorphism enumeration") {
  const auto homs2 = all_z2_homs(*z2());
  REQUIRE(homs2.size() == 2);
  CHECK(homs2[0].values == std::vector<Bit>{0, 0});
  CHECK(homs2[1].values == std::vector<Bit>{0, 1});

  CHECK(all_z2_homs(*z3()).size() == 1);
  CHECK(all_z2_homs(*z2xz2()).size() == 4);
  CHECK(all_z2_homs(*d4()).size() == 4);

  // completeness for small orders: every bit array is either listed or fails
  for (const auto& gp : {z2(), z3(), z2xz2()}) {
    const auto& g = *gp;
    const auto homs = all_z2_homs(g);
    int count = 0;
    for (std::uint32_t mask = 0; mask < (1u << g.order()); ++mask) {
      std::vector<Bit> v(static_cast<std::size_t>(g.order()));
      for (int x = 0; x < g.order(); ++x) v[static_cast<std::size_t>(x)] = (mask >> x) & 1u;
      if (is_z2_hom(g, v)) {
        ++count;
        CHECK(std::any_of(homs.begin(), homs.end(),
                          [&](const Z2Hom& h) { return h.values == v; }));
      }
    }
    CHECK(count == static_cast<int>(homs.size()));
  }

  // zero map always present and first
  for (const auto& gp : {z4(), d4(), z2xz4()}) {
    const auto homs = all_z2_homs(*gp);
    CHECK(homs.front().values == std::vector<Bit>(static_cast<std::size_t>(gp->order()), 0));
  }
}

TEST_CASE("generator-image search agrees with exhaustive enumeration") {
  // order 18 > 16 exercises the generator path; compare against a direct scan
  // over subgroup-index-2 characters via the exhaustive definition.
  const auto g = make(FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(9)));
  const auto homs = all_z2_homs(*g);
  CHECK(homs.size() == 2);  // Z2 factor contributes the only character
  for (const auto& h : homs) CHECK(is_z2_hom(*g, h.values));
}
