#include "fspt/sample.hpp"

#include <stdexcept>

namespace fspt {

namespace {

Gf2Vec random_span_element(const std::vector<Gf2Vec>& basis, std::size_t dim, SplitMix64& rng) {
  Gf2Vec v(dim);
  for (const Gf2Vec& b : basis)
    if (rng.next() & 1) v ^= b;
  return v;
}

IntVector random_kernel_element(const ModNSolveResult& sol, std::int64_t n, Eigen::Index dim,
                                SplitMix64& rng) {
  IntVector v = sol.particular;
  for (const IntVector& gen : sol.kernel_gens) {
    const std::int64_t c = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(n)));
    for (Eigen::Index i = 0; i < dim; ++i)
      v(i) = floor_mod(v(i) + c * gen(i), n);
  }
  return v;
}

}  // namespace

PD0Triple sample_valid_triple(const GroupPtr& g, const Z2Hom& a, std::int64_t n,
                              std::uint64_t seed, TwistSystem& sys) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("sampling denominator must be even");
  SplitMix64 rng{seed};
  const Gf2System& b2 = sys.bits(2, true);
  const SmithForm& d3 = sys.smith(3, true);
  const NormalizedIndexer nix2(g->order(), 2);
  const Eigen::Index slots3 = 2 * static_cast<Eigen::Index>(NormalizedIndexer(g->order(), 3).count());

  for (int attempt = 0; attempt < 16; ++attempt) {
    const Gf2Vec kv = attempt + 1 < 16
                          ? random_span_element(b2.kernel_basis(), 2 * nix2.count(), rng)
                          : Gf2Vec(2 * nix2.count());  // zero cocycle always works
    const BitCochain kappa = embed_normalized(g, 2, kv);
    const PhaseCochain obst = obstruction_rhs(kappa, a);
    IntVector w = restrict_normalized_num(obst);
    for (Eigen::Index i = 0; i < w.size(); ++i) w(i) = floor_mod(w(i) * (n / 2), n);
    const ModNSolveResult sol = solve_mod_n(d3, w, n);
    if (!sol.solvable) continue;
    const IntVector v = random_kernel_element(sol, n, slots3, rng);
    PhaseCochain c = embed_normalized(g, 3, v, n);
    c.canonicalize();
    PD0Triple t{g, a, kappa, std::move(c)};
    if (validate_triple(t)) throw std::logic_error("sampled triple failed validation");
    return t;
  }
  throw std::logic_error("sampling failed to find a solvable kappa sector");
}

DiagonalSampler::DiagonalSampler(GroupPtr g, std::int64_t n)
    : group_(std::move(g)), n_(n), d3_(smith_normal_form(linearize_normalized_plain(*group_, 3))) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("sampling denominator must be even");
}

PD0Triple DiagonalSampler::sample(const Z2Hom& a, std::uint64_t seed, TwistSystem& sys) const {
  SplitMix64 rng{seed};
  const FiniteGroup& g = *group_;
  const NormalizedIndexer nix2(g.order(), 2);
  const NormalizedIndexer nix3(g.order(), 3);

  // diagonal normalized cocycles: kernel of [d^2 ; component difference]
  const Gf2Matrix& m2 = sys.bits(2, true).matrix();
  Gf2Matrix stacked(m2.rows() + nix2.count(), 2 * nix2.count());
  for (std::size_t r = 0; r < m2.rows(); ++r)
    for (std::size_t c = 0; c < 2 * nix2.count(); ++c)
      if (m2.get(r, c)) stacked.set(r, c, true);
  for (std::size_t t = 0; t < nix2.count(); ++t) {
    stacked.set(m2.rows() + t, 2 * t, true);
    stacked.set(m2.rows() + t, 2 * t + 1, true);
  }
  const Gf2System diag_cocycles{std::move(stacked)};

  for (int attempt = 0; attempt < 16; ++attempt) {
    const Gf2Vec kv = attempt + 1 < 16 ? random_span_element(diag_cocycles.kernel_basis(),
                                                             2 * nix2.count(), rng)
                                       : Gf2Vec(2 * nix2.count());
    const BitCochain kappa = embed_normalized(group_, 2, kv);
    // untwisted undoubled obstruction (diagonal data): plus components only
    const PhaseCochain obst = obstruction_rhs(kappa, a);
    const IntVector wfull = restrict_normalized_num(obst);
    const NormalizedIndexer nix4(g.order(), 4);
    IntVector w = IntVector::Zero(static_cast<Eigen::Index>(nix4.count()));
    for (std::size_t t = 0; t < nix4.count(); ++t)
      w(static_cast<Eigen::Index>(t)) = floor_mod(wfull(2 * static_cast<Eigen::Index>(t)) * (n_ / 2), n_);
    const ModNSolveResult sol = solve_mod_n(d3_, w, n_);
    if (!sol.solvable) continue;
    const IntVector v =
        random_kernel_element(sol, n_, static_cast<Eigen::Index>(nix3.count()), rng);
    IntVector doubled = IntVector::Zero(2 * static_cast<Eigen::Index>(nix3.count()));
    for (std::size_t t = 0; t < nix3.count(); ++t) {
      doubled(2 * static_cast<Eigen::Index>(t)) = v(static_cast<Eigen::Index>(t));
      doubled(2 * static_cast<Eigen::Index>(t) + 1) = v(static_cast<Eigen::Index>(t));
    }
    PhaseCochain c = embed_normalized(group_, 3, doubled, n_);
    c.canonicalize();
    PD0Triple t{group_, a, kappa, std::move(c)};
    if (validate_triple(t)) throw std::logic_error("sampled diagonal triple failed validation");
    return t;
  }
  throw std::logic_error("diagonal sampling failed to find a solvable kappa sector");
}

std::vector<Bit> random_b(const FiniteGroup& g, std::uint64_t seed) {
  SplitMix64 rng{seed};
  std::vector<Bit> b(static_cast<std::size_t>(g.order()));
  for (auto& v : b) v = static_cast<Bit>(rng.next() & 1);
  return b;
}

}  // namespace fspt
