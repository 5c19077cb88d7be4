#include "fspt/triple.hpp"

#include <stdexcept>

namespace fspt {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

void require_shapes(const PD0Triple& t) {
  require(t.kappa.degree() == 2, "kappa must have degree 2");
  require(t.c.degree() == 3, "c must have degree 3");
  require(*t.kappa.group() == *t.group && *t.c.group() == *t.group,
          "cochain groups do not match the triple group");
  require(t.a.values.size() == static_cast<std::size_t>(t.group->order()),
          "a has the wrong length");
  require(is_z2_hom(*t.group, t.a.values), "a is not a homomorphism");
}

std::array<int, 4> to_array(const TupleIndexer& ix, std::size_t t) { return ix.unpack(t); }

std::string pair_str(const PhasePair& p) { return "(" + p.plus.str() + "," + p.minus.str() + ")"; }
std::string pair_str(const BitPair& p) {
  return "(" + std::to_string(p.plus) + "," + std::to_string(p.minus) + ")";
}

}  // namespace

PD0Triple PD0Triple::trivial(GroupPtr g, Z2Hom a) {
  BitCochain kappa(g, 2);
  PhaseCochain c(g, 3, 1);
  return PD0Triple{std::move(g), std::move(a), std::move(kappa), std::move(c)};
}

std::optional<TripleViolation> validate_triple(const PD0Triple& t) {
  require_shapes(t);
  const BitCochain dk = coboundary(t.a, t.kappa);
  for (std::size_t s = 0; s < dk.tuple_count(); ++s) {
    const BitPair v = dk.get(s);
    if (v.plus || v.minus)
      return TripleViolation{"kappa-cocycle", to_array(dk.indexer(), s), pair_str(v), "(0,0)"};
  }
  const PhaseCochain dc = coboundary(t.a, t.c);
  const PhaseCochain rhs = obstruction_rhs(t.kappa, t.a);
  for (std::size_t s = 0; s < dc.tuple_count(); ++s) {
    const PhasePair l = dc.get(s), r = rhs.get(s);
    if (!(l == r))
      return TripleViolation{"c-obstruction", to_array(dc.indexer(), s), pair_str(l), pair_str(r)};
  }
  return std::nullopt;
}

bool is_diagonal(const PD0Triple& t) { return is_diagonal(t.kappa) && is_diagonal(t.c); }

BitCochain move_sign_bits(const BitCochain& kappa1, const BitCochain& kappa2, const BitCochain& m,
                          const Z2Hom& a) {
  require(kappa1.degree() == 2 && kappa2.degree() == 2 && m.degree() == 1,
          "move_sign_bits expects degrees (2,2,1)");
  const FiniteGroup& g = *m.group();
  BitCochain out(m.group(), 3);
  for (std::size_t s = 0; s < out.tuple_count(); ++s) {
    const auto tup = out.indexer().unpack(s);
    const int gg = tup[0], hh = tup[1], kk = tup[2];
    const BitPair first = bit_dot(kappa1.at({gg, hh}), swap_pow(m.at({kk}), a(g.mul(gg, hh))));
    const BitPair second = bit_dot(m.at({gg}), swap_pow(kappa2.at({hh, kk}), a(gg)));
    out.set(s, pair_mul(first, second));
  }
  return out;
}

PhaseCochain move_sign_factors(const BitCochain& kappa1, const BitCochain& kappa2,
                               const BitCochain& m, const Z2Hom& a) {
  const BitCochain bits = move_sign_bits(kappa1, kappa2, m, a);
  PhaseCochain out(m.group(), 3, 2);
  for (std::size_t s = 0; s < bits.tuple_count(); ++s) {
    const BitPair b = bits.get(s);
    out.set_raw(s, 0, b.plus);
    out.set_raw(s, 1, b.minus);
  }
  return out;
}

PD0Triple apply_move(const PD0Triple& t, const BitCochain& m, const PhaseCochain& sigma) {
  require_shapes(t);
  require(m.degree() == 1 && sigma.degree() == 2, "move expects m of degree 1, sigma of degree 2");
  const BitCochain kappa2 = pointwise_mul(t.kappa, coboundary(t.a, m));
  PhaseCochain c2 = pointwise_mul(
      pointwise_mul(move_sign_factors(t.kappa, kappa2, m, t.a), coboundary(t.a, sigma)), t.c);
  return PD0Triple{t.group, t.a, kappa2, std::move(c2)};
}

std::optional<KappaMoveSolution> solve_kappa_move(const PD0Triple& t1, const PD0Triple& t2,
                                                  TwistSystem& sys) {
  require(t1.a == t2.a, "solve_kappa_move requires matching a");
  const Gf2System& d1 = sys.bits(1, false);
  const BitCochain delta = pointwise_mul(t2.kappa, t1.kappa);  // xor
  const auto particular = d1.solve(discretize_gf2(delta));
  if (!particular) return std::nullopt;
  KappaMoveSolution out{bit_cochain_from_gf2(t1.group, 1, *particular), {}};
  for (const Gf2Vec& k : d1.kernel_basis())
    out.kernel.push_back(bit_cochain_from_gf2(t1.group, 1, k));
  return out;
}

CoboundaryMembership coboundary_membership(const PhaseCochain& r, TwistSystem& sys) {
  require(r.degree() == 3, "coboundary membership expects a degree-3 cochain");
  const SmithForm& f = sys.smith(2, false);
  const TorusSolveResult res = solve_torus(f, discretize_num(r), r.den());
  CoboundaryMembership out;
  if (!res.member) {
    out.witness = CoboundaryWitness{res.witness_row, res.witness_value};
    return out;
  }
  PhaseCochain sigma = phase_cochain_from_num(r.group(), 2, res.solution_num, res.den_out);
  sigma.canonicalize();
  if (!(coboundary(sys.a(), sigma) == r))
    throw std::logic_error("coboundary membership produced an invalid preimage");
  out.sigma = std::move(sigma);
  return out;
}

CoboundaryMembership coboundary_membership(const PhaseCochain& r, const Z2Hom& a) {
  TwistSystem sys(r.group(), a);
  return coboundary_membership(r, sys);
}

namespace {

// r(m) = c2 - c1 - signs(kappa1, kappa2, m), with an even shared denominator.
PhaseCochain move_ratio(const PD0Triple& t1, const PD0Triple& t2, const BitCochain& m) {
  PhaseCochain r = pointwise_div(t2.c, t1.c);
  r = pointwise_div(r, move_sign_factors(t1.kappa, t2.kappa, m, t1.a));
  if (r.den() % 2 != 0) r.rescale_to(lcm_checked(r.den(), 2));
  return r;
}

EquivResult certify(const PD0Triple& t1, const PD0Triple& t2, const BitCochain& m,
                    PhaseCochain sigma) {
  const PD0Triple moved = apply_move(t1, m, sigma);
  if (!(moved.kappa == t2.kappa) || !(moved.c == t2.c))
    throw std::logic_error("equivalence certificate failed to replay");
  return EquivResult{EquivVerdict::equivalent, EquivCertificate{m, std::move(sigma)}, "certified"};
}

}  // namespace

EquivResult equiv(const PD0Triple& t1, const PD0Triple& t2, TwistSystem& sys,
                  const EquivOptions& opts) {
  require_shapes(t1);
  require_shapes(t2);
  require(*t1.group == *t2.group, "triples live on different groups");
  if (validate_triple(t1) || validate_triple(t2))
    throw std::invalid_argument("equiv expects validated triples");
  if (!(t1.a == t2.a)) return {EquivVerdict::inequivalent, std::nullopt, "a-differs"};

  const auto moves = solve_kappa_move(t1, t2, sys);
  if (!moves) return {EquivVerdict::inequivalent, std::nullopt, "kappa-not-movable"};

  if (opts.enumerate) {
    // Literal coset walk: try every kernel combination up to the budget.
    const std::size_t dim = moves->kernel.size();
    const std::size_t cap = opts.budget_log2 >= 63 ? ~std::size_t{0}
                                                   : (std::size_t{1} << opts.budget_log2);
    const bool exhaustive = dim < 63 && (std::size_t{1} << dim) <= cap;
    const std::size_t total = exhaustive ? (std::size_t{1} << dim) : cap;
    for (std::size_t iter = 0; iter < total; ++iter) {
      BitCochain m = moves->particular;
      for (std::size_t j = 0; j < dim; ++j)
        if ((iter >> j) & 1) m = pointwise_mul(m, moves->kernel[j]);
      auto member = coboundary_membership(move_ratio(t1, t2, m), sys);
      if (member.member()) return certify(t1, t2, m, std::move(*member.sigma));
    }
    if (!exhaustive) return {EquivVerdict::budget_exceeded, std::nullopt, "m-coset-budget"};
    return {EquivVerdict::inequivalent, std::nullopt, "no-m-admits-coboundary"};
  }

  // Complete path: the membership pairings are affine in m over GF(2), so the
  // whole search collapses to one linear system.
  const SmithForm& f = sys.smith(2, false);
  const PhaseCochain r0 = move_ratio(t1, t2, moves->particular);
  const std::int64_t den = r0.den();
  const IntVector num = discretize_num(r0);
  const Eigen::Index lk_rows = f.rows - f.rank();

  std::vector<Gf2Vec> u_mod2;
  std::vector<Bit> beta;
  u_mod2.reserve(static_cast<std::size_t>(lk_rows));
  for (Eigen::Index i = f.rank(); i < f.rows; ++i) {
    __int128 acc = 0;
    for (Eigen::Index j = 0; j < f.rows; ++j)
      acc += static_cast<__int128>(f.u(i, j)) * num(j);
    __int128 rem = acc % den;
    if (rem < 0) rem += den;
    const std::int64_t alpha = static_cast<std::int64_t>(rem);
    if (alpha != 0 && 2 * alpha != den)
      return {EquivVerdict::inequivalent, std::nullopt, "coboundary-obstruction"};
    beta.push_back(alpha == 0 ? 0 : 1);
    Gf2Vec u(static_cast<std::size_t>(f.rows));
    for (Eigen::Index j = 0; j < f.rows; ++j)
      if (f.u(i, j) & 1) u.set(static_cast<std::size_t>(j), true);
    u_mod2.push_back(std::move(u));
  }

  const std::size_t dim = moves->kernel.size();
  Gf2Matrix system(static_cast<std::size_t>(lk_rows), dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const Gf2Vec xbits =
        discretize_gf2(move_sign_bits(t1.kappa, t2.kappa, moves->kernel[j], t1.a));
    for (std::size_t i = 0; i < static_cast<std::size_t>(lk_rows); ++i)
      system.set(i, j, u_mod2[i].parity_and(xbits));
  }
  Gf2Vec rhs(static_cast<std::size_t>(lk_rows));
  for (std::size_t i = 0; i < beta.size(); ++i) rhs.set(i, beta[i]);

  const Gf2System solver(system);
  const auto coeffs = solver.solve(rhs);
  if (!coeffs) return {EquivVerdict::inequivalent, std::nullopt, "no-m-admits-coboundary"};

  BitCochain m = moves->particular;
  for (std::size_t j = 0; j < dim; ++j)
    if (coeffs->get(j)) m = pointwise_mul(m, moves->kernel[j]);
  auto member = coboundary_membership(move_ratio(t1, t2, m), sys);
  if (!member.member())
    throw std::logic_error("linear reduction selected m outside the coboundary image");
  return certify(t1, t2, m, std::move(*member.sigma));
}

EquivResult equiv(const PD0Triple& t1, const PD0Triple& t2, const EquivOptions& opts) {
  TwistSystem sys(t1.group, t1.a);
  if (!(t1.a == t2.a)) return {EquivVerdict::inequivalent, std::nullopt, "a-differs"};
  return equiv(t1, t2, sys, opts);
}

DiagonalSearchResult diagonal_representative(const PD0Triple& t, TwistSystem& sys,
                                             const EquivOptions& opts) {
  require_shapes(t);
  if (validate_triple(t))
    throw std::invalid_argument("diagonal_representative expects a validated triple");

  // Constraint on m: (d^1_a m)^+ xor (d^1_a m)^- = kappa^+ xor kappa^-.
  const Gf2Matrix& d1 = sys.bits(1, false).matrix();
  const std::size_t tuples2 = d1.rows() / 2;
  Gf2Matrix sum_rows(tuples2, d1.cols());
  for (std::size_t tN = 0; tN < tuples2; ++tN)
    for (std::size_t c = 0; c < d1.cols(); ++c)
      sum_rows.set(tN, c, d1.get(2 * tN, c) ^ d1.get(2 * tN + 1, c));
  Gf2Vec target(tuples2);
  for (std::size_t s = 0; s < tuples2; ++s) {
    const BitPair v = t.kappa.get(s);
    target.set(s, v.plus ^ v.minus);
  }
  const Gf2System diag_system(sum_rows);
  const auto m1 = diag_system.solve(target);
  if (!m1) return {DiagonalSearchResult::Status::not_in_class, std::nullopt, std::nullopt};

  const auto& kernel = diag_system.kernel_basis();
  const std::size_t dim = kernel.size();
  const std::size_t cap =
      opts.budget_log2 >= 63 ? ~std::size_t{0} : (std::size_t{1} << opts.budget_log2);
  const bool exhaustive = dim < 63 && (std::size_t{1} << dim) <= cap;
  const std::size_t total = exhaustive ? (std::size_t{1} << dim) : cap;

  const SmithForm& tdiff = sys.diag_difference_smith(false);
  for (std::size_t iter = 0; iter < total; ++iter) {
    Gf2Vec mv = *m1;
    for (std::size_t j = 0; j < dim; ++j)
      if ((iter >> j) & 1) mv ^= kernel[j];
    const BitCochain m = bit_cochain_from_gf2(t.group, 1, mv);
    const BitCochain kappa2 = pointwise_mul(t.kappa, coboundary(t.a, m));
    PhaseCochain shifted = pointwise_mul(t.c, move_sign_factors(t.kappa, kappa2, m, t.a));
    // need sigma with (d^2 sigma)^+ - (d^2 sigma)^- = -(shifted^+ - shifted^-)
    IntVector diff = IntVector::Zero(static_cast<Eigen::Index>(shifted.tuple_count()));
    for (std::size_t s = 0; s < shifted.tuple_count(); ++s)
      diff(static_cast<Eigen::Index>(s)) =
          floor_mod(shifted.raw(s, 1) - shifted.raw(s, 0), shifted.den());
    const TorusSolveResult sol = solve_torus(tdiff, diff, shifted.den());
    if (!sol.member) continue;
    PhaseCochain sigma = phase_cochain_from_num(t.group, 2, sol.solution_num, sol.den_out);
    sigma.canonicalize();
    PD0Triple rep = apply_move(t, m, sigma);
    if (!is_diagonal(rep))
      throw std::logic_error("diagonal search produced a non-diagonal representative");
    if (validate_triple(rep))
      throw std::logic_error("diagonal search produced an invalid triple");
    return {DiagonalSearchResult::Status::found, std::move(rep),
            EquivCertificate{m, std::move(sigma)}};
  }
  if (!exhaustive)
    return {DiagonalSearchResult::Status::budget_exceeded, std::nullopt, std::nullopt};
  return {DiagonalSearchResult::Status::not_in_class, std::nullopt, std::nullopt};
}

}  // namespace fspt
