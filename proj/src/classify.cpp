#include "fspt/classify.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

#include "fspt/parallel.hpp"

namespace fspt {

namespace {

using i64 = std::int64_t;

// Echelon (by lowest set bit order) basis maintenance for GF(2) spans.
struct Gf2Span {
  std::vector<Gf2Vec> basis;  // each with a unique pivot
  std::vector<std::size_t> pivots;

  Gf2Vec reduce(Gf2Vec v) const {
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (v.get(pivots[i])) v ^= basis[i];
    return v;
  }
  bool insert(Gf2Vec v) {
    v = reduce(std::move(v));
    if (v.is_zero()) return false;
    std::size_t p = 0;
    while (!v.get(p)) ++p;
    basis.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  }
};

Gf2Vec column_of(const Gf2Matrix& m, std::size_t j) {
  Gf2Vec v(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (m.get(r, j)) v.set(r, true);
  return v;
}

IntVector mod_n(IntVector v, i64 n) {
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = floor_mod(v(i), n);
  return v;
}

IntMatrix gens_matrix(const std::vector<IntVector>& gens, Eigen::Index dim) {
  IntMatrix m(dim, static_cast<Eigen::Index>(gens.size()));
  for (std::size_t j = 0; j < gens.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = gens[j];
  return m;
}

void sort_reps(std::vector<IntVector>& reps) {
  std::sort(reps.begin(), reps.end(), [](const IntVector& x, const IntVector& y) {
    return std::lexicographical_compare(x.data(), x.data() + x.size(), y.data(),
                                        y.data() + y.size());
  });
}

// mixed-radix walk over the quotient transversal
template <class F>
void for_each_class(const IntVector& particular, const LatticeQuotient& quot, i64 den, F&& fn) {
  std::vector<std::uint64_t> counters(quot.generators.size(), 0);
  for (;;) {
    IntVector v = particular;
    for (std::size_t i = 0; i < quot.generators.size(); ++i)
      if (counters[i] > 0)
        v = mod_n(v + static_cast<i64>(counters[i]) * quot.generators[i], den);
    fn(mod_n(std::move(v), den));
    std::size_t i = 0;
    for (; i < counters.size(); ++i) {
      if (++counters[i] < static_cast<std::uint64_t>(quot.cyclic_orders[i])) break;
      counters[i] = 0;
    }
    if (i == counters.size()) break;
  }
}

}  // namespace

ClassifyResult classify_sector(const GroupPtr& g, const Z2Hom& a, const ClassifyOptions& opts) {
  const int n = g->order();
  const i64 den = opts.denominator ? opts.denominator : lcm_checked(n, 8);
  if (den < 2 || den % 2 != 0)
    throw std::invalid_argument("classification denominator must be even (obstructions are signs)");

  ClassifyResult result;
  result.denominator = den;
  result.diagonal_only = opts.diagonal_only;

  TwistSystem sys(g, a);
  const Gf2System& b1 = sys.bits(1, true);
  const Gf2System& b2 = sys.bits(2, true);
  const NormalizedIndexer nix2(n, 2);
  const NormalizedIndexer nix3(n, 3);
  const std::size_t slots2 = 2 * nix2.count();
  const Eigen::Index slots3 = 2 * static_cast<Eigen::Index>(nix3.count());

  // --- kappa sectors -------------------------------------------------------
  std::vector<Gf2Vec> cocycle_basis = b2.kernel_basis();
  std::vector<Gf2Vec> boundary_gens;
  for (std::size_t j = 0; j < b1.matrix().cols(); ++j)
    boundary_gens.push_back(column_of(b1.matrix(), j));

  // component-sum rows of d^1: constraints for diagonal-preserving moves
  Gf2Matrix sum_rows(nix2.count(), b1.matrix().cols());
  for (std::size_t t = 0; t < nix2.count(); ++t)
    for (std::size_t c = 0; c < b1.matrix().cols(); ++c)
      sum_rows.set(t, c, b1.matrix().get(2 * t, c) ^ b1.matrix().get(2 * t + 1, c));
  const Gf2System diagonal_moves(sum_rows);

  if (opts.diagonal_only) {
    // diagonal cocycles: kernel of [d^2 ; component difference]
    const Gf2Matrix& m2 = b2.matrix();
    Gf2Matrix stacked(m2.rows() + nix2.count(), slots2);
    for (std::size_t r = 0; r < m2.rows(); ++r)
      for (std::size_t c = 0; c < slots2; ++c)
        if (m2.get(r, c)) stacked.set(r, c, true);
    for (std::size_t t = 0; t < nix2.count(); ++t) {
      stacked.set(m2.rows() + t, 2 * t, true);
      stacked.set(m2.rows() + t, 2 * t + 1, true);
    }
    cocycle_basis = Gf2System(std::move(stacked)).kernel_basis();
    // diagonal boundaries: d^1 m with diagonal output
    boundary_gens.clear();
    for (const Gf2Vec& x : diagonal_moves.kernel_basis())
      boundary_gens.push_back(b1.matrix().multiply(x));
  }

  Gf2Span boundary_span;
  for (auto& v : boundary_gens) boundary_span.insert(v);
  Gf2Span free_span;
  std::vector<Gf2Vec> free_basis;
  for (const Gf2Vec& z : cocycle_basis) {
    Gf2Vec r = boundary_span.reduce(z);
    r = free_span.reduce(std::move(r));
    if (!r.is_zero()) {
      free_span.insert(r);
      free_basis.push_back(std::move(r));
    }
  }
  if (free_basis.size() >= 20)
    throw std::runtime_error("kappa sector enumeration too large");

  // shared solver data, warmed before any parallel work
  const SmithForm& d3 = sys.smith(3, true);
  const SmithForm& d2 = sys.smith(2, true);
  const SmithForm* tdiff = opts.diagonal_only ? &sys.diag_difference_smith(true) : nullptr;

  // torus-coboundary subgroup of Z_den^slots3: annihilated by the integer
  // left kernel of d^2
  std::vector<IntVector> coboundary_gens;
  {
    const Eigen::Index lk2 = d2.rows - d2.rank();
    IntMatrix u20(lk2, d2.rows);
    for (Eigen::Index i = 0; i < lk2; ++i) u20.row(i) = d2.u.row(d2.rank() + i);
    const SmithForm fu = smith_normal_form(u20);
    coboundary_gens = solve_mod_n(fu, IntVector::Zero(lk2), den).kernel_gens;
  }

  // component-difference projector (diagonal census bookkeeping)
  IntMatrix proj;
  if (opts.diagonal_only) {
    proj = IntMatrix::Zero(static_cast<Eigen::Index>(nix3.count()), slots3);
    for (std::size_t t = 0; t < nix3.count(); ++t) {
      proj(static_cast<Eigen::Index>(t), 2 * static_cast<Eigen::Index>(t)) = 1;
      proj(static_cast<Eigen::Index>(t), 2 * static_cast<Eigen::Index>(t) + 1) = -1;
    }
    if (diagonal_moves.kernel_basis().size() >= 24)
      throw std::runtime_error("diagonal census move enumeration too large");
  }

  const std::size_t sector_count = std::size_t{1} << free_basis.size();
  std::vector<SectorResult> sectors(sector_count);

  auto compute_sector = [&](std::size_t mask) {
    Gf2Vec kv(slots2);
    for (std::size_t j = 0; j < free_basis.size(); ++j)
      if ((mask >> j) & 1) kv ^= free_basis[j];
    kv = boundary_span.reduce(std::move(kv));  // canonical label
    const BitCochain kappa = embed_normalized(g, 2, kv);

    SectorResult sector{kappa, false, 0, {}, true};

    const PhaseCochain obst = obstruction_rhs(kappa, a);
    IntVector w = restrict_normalized_num(obst);  // numerators over den 2
    for (Eigen::Index i = 0; i < w.size(); ++i) w(i) = floor_mod(w(i) * (den / 2), den);

    const ModNSolveResult sol = solve_mod_n(d3, w, den);
    if (!sol.solvable) {
      sector.empty = true;
      sectors[mask] = std::move(sector);
      return;
    }

    // move subgroup: torus coboundaries + kernel-m sign shifts
    std::vector<IntVector> move_gens = coboundary_gens;
    for (const Gf2Vec& mk : b1.kernel_basis()) {
      const BitCochain m = embed_normalized(g, 1, mk);
      const IntVector half = restrict_normalized_num(move_sign_factors(kappa, kappa, m, a));
      IntVector shift = IntVector::Zero(slots3);
      for (Eigen::Index i = 0; i < slots3; ++i) shift(i) = floor_mod(half(i) * (den / 2), den);
      if (!shift.isZero()) move_gens.push_back(std::move(shift));
    }

    const IntMatrix ker_basis =
        hnf_lattice_basis(gens_matrix(sol.kernel_gens, slots3), den, slots3);
    const IntMatrix move_basis = hnf_lattice_basis(gens_matrix(move_gens, slots3), den, slots3);
    const LatticeQuotient quot = lattice_quotient(ker_basis, move_basis, den);

    if (!opts.diagonal_only) {
      sector.class_count = quot.order;
      if (quot.order <= opts.max_reps) {
        std::vector<IntVector> reps;
        for_each_class(sol.particular, quot, den, [&](IntVector v) {
          reps.push_back(reduce_lex_least(move_basis, std::move(v), den));
        });
        sort_reps(reps);
        for (const IntVector& v : reps) {
          PhaseCochain rep = embed_normalized(g, 3, v, den);
          rep.canonicalize();
          sector.representatives.push_back(std::move(rep));
        }
      } else {
        sector.reps_complete = false;
      }
      sectors[mask] = std::move(sector);
      return;
    }

    // --- diagonal census for this kappa class ------------------------------
    // A class counts when some move with diagonal d^1_a m lands it on a
    // diagonal cochain; membership is the component-difference coboundary
    // criterion. m runs over the kernel of the component-sum constraint
    // (kappa stays diagonal along the walk).
    if (quot.order > opts.max_reps)
      throw std::runtime_error("diagonal census requires enumerating more classes than max_reps");

    const std::vector<Gf2Vec>& m_kernel = diagonal_moves.kernel_basis();

    // lattice of moves that stay diagonal, for canonical witnesses
    IntMatrix diag_move_basis;
    {
      const IntMatrix pm = proj * move_basis;
      const SmithForm fpm = smith_normal_form(pm);
      const ModNSolveResult k =
          solve_mod_n(fpm, IntVector::Zero(static_cast<Eigen::Index>(nix3.count())), den);
      std::vector<IntVector> gens;
      for (const IntVector& t : k.kernel_gens) {
        IntVector x = IntVector::Zero(slots3);
        for (Eigen::Index j = 0; j < slots3; ++j) {
          __int128 acc = 0;
          for (Eigen::Index i = 0; i < slots3; ++i)
            acc += static_cast<__int128>(move_basis(j, i)) * t(i);
          x(j) = floor_mod(static_cast<i64>(acc % den), den);
        }
        if (!x.isZero()) gens.push_back(std::move(x));
      }
      diag_move_basis = hnf_lattice_basis(gens_matrix(gens, slots3), den, slots3);
    }

    std::vector<std::pair<IntVector, i64>> diag_reps;
    for_each_class(sol.particular, quot, den, [&](IntVector v) {
      bool found = false;
      for (std::size_t mmask = 0; mmask < (std::size_t{1} << m_kernel.size()) && !found;
           ++mmask) {
        Gf2Vec mv(b1.matrix().cols());
        for (std::size_t j = 0; j < m_kernel.size(); ++j)
          if ((mmask >> j) & 1) mv ^= m_kernel[j];
        const BitCochain m = embed_normalized(g, 1, mv);
        const BitCochain kappa2 = pointwise_mul(kappa, coboundary(a, m));
        const IntVector ms = restrict_normalized_num(move_sign_factors(kappa, kappa2, m, a));
        IntVector diff = IntVector::Zero(static_cast<Eigen::Index>(nix3.count()));
        for (std::size_t t = 0; t < nix3.count(); ++t) {
          const i64 plus = floor_mod(v(2 * static_cast<Eigen::Index>(t)) +
                                         ms(2 * static_cast<Eigen::Index>(t)) * (den / 2),
                                     den);
          const i64 minus = floor_mod(v(2 * static_cast<Eigen::Index>(t) + 1) +
                                          ms(2 * static_cast<Eigen::Index>(t) + 1) * (den / 2),
                                      den);
          diff(static_cast<Eigen::Index>(t)) = floor_mod(minus - plus, den);
        }
        const TorusSolveResult memb = solve_torus(*tdiff, diff, den);
        if (!memb.member) continue;
        found = true;
        // diagonal witness: v + ms + d^2 sigma
        PhaseCochain shifted = embed_normalized(g, 3, v, den);
        shifted = pointwise_mul(shifted, move_sign_factors(kappa, kappa2, m, a));
        PhaseCochain sigma = embed_normalized(g, 2, memb.solution_num, memb.den_out);
        shifted = pointwise_mul(shifted, coboundary(a, sigma));
        if (!is_diagonal(shifted))
          throw std::logic_error("diagonal census produced a non-diagonal witness");
        shifted.canonicalize();
        if (den % shifted.den() == 0) {
          shifted.rescale_to(den);
          IntVector wit = restrict_normalized_num(shifted);
          diag_reps.emplace_back(reduce_lex_least(diag_move_basis, std::move(wit), den), den);
        } else {
          // a witness outside the N-torsion layer; reported at its own torsion
          diag_reps.emplace_back(restrict_normalized_num(shifted), shifted.den());
        }
      }
      if (found) ++sector.class_count;
    });

    std::sort(diag_reps.begin(), diag_reps.end(),
              [](const std::pair<IntVector, i64>& x, const std::pair<IntVector, i64>& y) {
                const bool lt = std::lexicographical_compare(
                    x.first.data(), x.first.data() + x.first.size(), y.first.data(),
                    y.first.data() + y.first.size());
                if (lt) return true;
                if (x.first == y.first) return x.second < y.second;
                return false;
              });
    for (const auto& [v, vden] : diag_reps) {
      PhaseCochain rep = embed_normalized(g, 3, v, vden);
      rep.canonicalize();
      sector.representatives.push_back(std::move(rep));
    }
    sectors[mask] = std::move(sector);
  };

  parallel_for(sector_count, opts.workers, compute_sector);

  for (auto& s : sectors) {
    result.total_classes += s.class_count;
    result.sectors.push_back(std::move(s));
  }
  return result;
}

CensusResult diagonal_census(const GroupPtr& g, const ClassifyOptions& opts) {
  CensusResult out;
  ClassifyOptions o = opts;
  o.diagonal_only = true;
  for (const Z2Hom& a : all_z2_homs(*g)) {
    out.per_a.push_back(classify_sector(g, a, o));
    out.total_classes += out.per_a.back().total_classes;
  }
  return out;
}

}  // namespace fspt
