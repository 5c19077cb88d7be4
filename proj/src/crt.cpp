#include "fspt/crt.hpp"

#include <stdexcept>

namespace fspt {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

void require_shapes(const CRTPentuple& p) {
  require(p.kappaR.degree() == 2 && p.kappaL.degree() == 2, "kappa cochains must have degree 2");
  require(p.cR.degree() == 3, "c_R must have degree 3");
  require(*p.kappaR.group() == *p.group && *p.kappaL.group() == *p.group &&
              *p.cR.group() == *p.group,
          "cochain groups do not match the pentuple group");
  require(p.b.size() == static_cast<std::size_t>(p.group->order()), "b has the wrong length");
  require(is_z2_hom(*p.group, p.a.values), "a is not a homomorphism");
}

std::string phase_str(Phase p) { return p.str(); }

// (g,h,k) |-> (b_g kappa^+(h,k) / 2, b_g kappa^-(h,k) / 2)
PhaseCochain half_shift(const std::vector<Bit>& b, const BitCochain& kappa) {
  const GroupPtr& g = kappa.group();
  PhaseCochain out(g, 3, 2);
  const TupleIndexer ix(g->order(), 3);
  for (std::size_t t = 0; t < ix.count(); ++t) {
    const auto tup = ix.unpack(t);
    const BitPair k = kappa.at({tup[1], tup[2]});
    out.set_raw(t, 0, b[static_cast<std::size_t>(tup[0])] & k.plus);
    out.set_raw(t, 1, b[static_cast<std::size_t>(tup[0])] & k.minus);
  }
  return out;
}

// sigma: plus = 1, minus = e^{i pi/2 kappa_R^+(g,h)} (-1)^{kappa(g,h)(b_g+b_h)}
PhaseCochain build_sigma(const BitCochain& kappaR, const BitCochain& kappa,
                         const std::vector<Bit>& b, BitLift lift) {
  const GroupPtr& g = kappa.group();
  PhaseCochain out(g, 2, 8);
  const TupleIndexer ix(g->order(), 2);
  for (std::size_t t = 0; t < ix.count(); ++t) {
    const auto tup = ix.unpack(t);
    const std::int64_t quarter = lift_bit(kappaR.get(t).plus, lift);
    const std::int64_t parity =
        static_cast<std::int64_t>(kappa.get(t).plus) *
        (b[static_cast<std::size_t>(tup[0])] + b[static_cast<std::size_t>(tup[1])]);
    const Phase minus = lift_quarter(quarter) + lift_half(parity);
    out.set(t, PhasePair{Phase{}, minus});
  }
  return out;
}

// eta: plus = 1, minus = e^{-i pi/4 (b_g + b_h - b_{gh})}
PhaseCochain build_eta(const GroupPtr& g, const std::vector<Bit>& b) {
  PhaseCochain out(g, 2, 8);
  const TupleIndexer ix(g->order(), 2);
  for (std::size_t t = 0; t < ix.count(); ++t) {
    const auto tup = ix.unpack(t);
    const std::int64_t s = static_cast<std::int64_t>(b[static_cast<std::size_t>(tup[0])]) +
                           b[static_cast<std::size_t>(tup[1])] -
                           b[static_cast<std::size_t>(g->mul(tup[0], tup[1]))];
    out.set(t, PhasePair{Phase{}, lift_eighth(-s)});
  }
  return out;
}

}  // namespace

CRTPentuple CRTPentuple::trivial(GroupPtr g, Z2Hom a) {
  BitCochain kr(g, 2), kl(g, 2);
  PhaseCochain cr(g, 3, 1);
  std::vector<Bit> b(static_cast<std::size_t>(g->order()), 0);
  return CRTPentuple{std::move(g), std::move(a), std::move(b), std::move(kr), std::move(kl),
                     std::move(cr)};
}

Bit d1b(const FiniteGroup& g, const std::vector<Bit>& b, int x, int y) {
  return static_cast<Bit>(b[static_cast<std::size_t>(x)] ^ b[static_cast<std::size_t>(y)] ^
                          b[static_cast<std::size_t>(g.mul(x, y))]);
}

BitCochain build_m(const GroupPtr& g, const Z2Hom& a, const std::vector<Bit>& b) {
  require(b.size() == static_cast<std::size_t>(g->order()), "b has the wrong length");
  BitCochain m(g, 1);
  for (int x = 0; x < g->order(); ++x)
    m.set({x}, BitPair{0, b[static_cast<std::size_t>(x)]});
  // closed form of d^1_a m
  const BitCochain dm = coboundary(a, m);
  for (int x = 0; x < g->order(); ++x)
    for (int y = 0; y < g->order(); ++y) {
      const Bit ab = static_cast<Bit>(a(x) & b[static_cast<std::size_t>(y)]);
      const BitPair expect{ab, static_cast<Bit>(d1b(*g, b, x, y) ^ ab)};
      if (dm.at({x, y}) != expect)
        throw std::logic_error("d^1_a m closed form failed; lift conventions are inconsistent");
    }
  return m;
}

std::optional<CrtViolation> validate_crt(const CRTPentuple& p) {
  require_shapes(p);
  const FiniteGroup& g = *p.group;
  const int n = g.order();

  // mirror relation: kappa_L^{-eps} = kappa_R^{eps}
  for (std::size_t t = 0; t < p.kappaR.tuple_count(); ++t) {
    const BitPair r = p.kappaR.get(t), l = p.kappaL.get(t);
    if (l.minus != r.plus || l.plus != r.minus) {
      const auto tup = p.kappaR.indexer().unpack(t);
      return CrtViolation{"mirror-relation",
                          tup,
                          "(" + std::to_string(l.plus) + "," + std::to_string(l.minus) + ")",
                          "swap(" + std::to_string(r.plus) + "," + std::to_string(r.minus) + ")"};
    }
  }
  // sum rule: b_g + b_h + b_{gh} = kappa_L^eps + kappa_R^eps, both components
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const Bit lhs = d1b(g, p.b, x, y);
      const BitPair r = p.kappaR.at({x, y}), l = p.kappaL.at({x, y});
      for (int c = 0; c < 2; ++c) {
        const Bit rhs = static_cast<Bit>((c == 0 ? l.plus ^ r.plus : l.minus ^ r.minus));
        if (lhs != rhs)
          return CrtViolation{"sum-rule",
                              {x, y, c, -1},
                              std::to_string(lhs),
                              std::to_string(rhs)};
      }
    }
  // compatibility: the component ratio of c_R equals the explicit phase
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const PhasePair c = p.cR.at({x, y, z});
        const Phase lhs = c.plus - c.minus;
        const BitPair k_hk = p.kappaR.at({y, z});
        const BitPair l_hk = p.kappaL.at({y, z});
        const std::int64_t sign1 =
            static_cast<std::int64_t>(l_hk.minus & k_hk.minus & p.a(x));
        const Bit eps0 = p.a(x) ? k_hk.minus : k_hk.plus;  // kappa_R^{(-1)^{a(g)}}(h,k)
        const std::int64_t quarter = -static_cast<std::int64_t>(eps0) -
                                     p.kappaR.at({x, g.mul(y, z)}).plus +
                                     p.kappaR.at({x, y}).plus +
                                     p.kappaR.at({g.mul(x, y), z}).plus;
        const std::int64_t sign2 =
            static_cast<std::int64_t>(d1b(g, p.b, y, z) & p.kappaR.at({x, g.mul(y, z)}).plus) +
            static_cast<std::int64_t>(d1b(g, p.b, x, y) & p.kappaR.at({g.mul(x, y), z}).plus);
        const Phase rhs = lift_half(sign1) + lift_quarter(quarter) + lift_half(sign2);
        if (!(lhs == rhs))
          return CrtViolation{"crt-compatibility", {x, y, z, -1}, phase_str(lhs), phase_str(rhs)};
      }
  return std::nullopt;
}

bool ReductionCertificate::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const CheckVerdict* ReductionCertificate::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

CheckVerdict check_bit_diagonal(const std::string& name, const BitCochain& x) {
  for (std::size_t t = 0; t < x.tuple_count(); ++t) {
    const BitPair v = x.get(t);
    if (v.plus != v.minus)
      return {name, false, x.indexer().unpack(t),
              "(" + std::to_string(v.plus) + "," + std::to_string(v.minus) + ")"};
  }
  return {name, true, {}, ""};
}

CheckVerdict check_phase_diagonal(const std::string& name, const PhaseCochain& x) {
  for (std::size_t t = 0; t < x.tuple_count(); ++t)
    if (x.raw(t, 0) != x.raw(t, 1)) {
      const PhasePair v = x.get(t);
      return {name, false, x.indexer().unpack(t), "(" + v.plus.str() + "," + v.minus.str() + ")"};
    }
  return {name, true, {}, ""};
}

CheckVerdict check_ratio_identity(const CRTPentuple& p, const ReductionCertificate& cert) {
  const PhaseCochain se = pointwise_mul(cert.sigma, cert.eta);
  const PhaseCochain dse = coboundary(p.a, se);
  for (std::size_t t = 0; t < cert.c_tilde.tuple_count(); ++t) {
    const PhasePair ct = cert.c_tilde.get(t);
    const PhasePair dv = dse.get(t);
    if (!(ct.plus - ct.minus == dv.plus - dv.minus))
      return {"ratio-identity", false, cert.c_tilde.indexer().unpack(t),
              (ct.plus - ct.minus).str() + " != " + (dv.plus - dv.minus).str()};
  }
  return {"ratio-identity", true, {}, ""};
}

CheckVerdict check_quarter_lift_identity(const CRTPentuple& p, BitLift lift) {
  const FiniteGroup& g = *p.group;
  for (int y = 0; y < g.order(); ++y)
    for (int z = 0; z < g.order(); ++z) {
      const BitPair k = p.kappaR.at({y, z});
      const Phase lhs = lift_half(k.plus & k.minus);
      const std::int64_t s = static_cast<std::int64_t>(p.b[static_cast<std::size_t>(y)]) -
                             p.b[static_cast<std::size_t>(z)] +
                             p.b[static_cast<std::size_t>(g.mul(y, z))];
      const Phase rhs =
          lift_quarter(-s * s) + lift_quarter(lift_bit(k.plus, lift) + lift_bit(k.minus, lift));
      if (!(lhs == rhs))
        return {"quarter-lift-identity", false, {y, z, -1, -1}, lhs.str() + " != " + rhs.str()};
    }
  return {"quarter-lift-identity", true, {}, ""};
}

}  // namespace

ReduceOutcome reduce(const CRTPentuple& p, const ReduceOptions& opts) {
  ReduceOutcome out;
  if (auto v = validate_crt(p)) {
    out.rejected = std::move(v);
    return out;
  }
  const GroupPtr& g = p.group;

  ReductionCertificate cert{
      build_m(g, p.a, p.b),
      BitCochain(g, 2),
      BitCochain(g, 2),
      PhaseCochain(g, 3),
      PhaseCochain(g, 3),
      PhaseCochain(g, 2),
      PhaseCochain(g, 2),
      PhaseCochain(g, 3),
      opts.lift,
      {}};

  const BitCochain dm = coboundary(p.a, cert.m);
  cert.kappa = pointwise_mul(p.kappaR, dm);
  cert.checks.push_back(check_bit_diagonal("kappa-diagonal", cert.kappa));

  cert.kappa_prime = pointwise_mul(p.kappaL, dm);
  cert.checks.push_back(check_bit_diagonal("kappa-prime-diagonal", cert.kappa_prime));
  {
    // kappa' = kappa + d^1 b embedded diagonally
    BitCochain expected = cert.kappa;
    for (std::size_t t = 0; t < expected.tuple_count(); ++t) {
      const auto tup = expected.indexer().unpack(t);
      const Bit d = d1b(*g, p.b, tup[0], tup[1]);
      expected.set(t, pair_mul(expected.get(t), BitPair{d, d}));
    }
    CheckVerdict v{"kappa-prime-shift", true, {}, ""};
    if (!(expected == cert.kappa_prime)) {
      v.pass = false;
      v.detail = "kappa' != kappa + d^1 b";
    }
    cert.checks.push_back(v);
  }

  cert.c_intermediate =
      pointwise_mul(move_sign_factors(p.kappaL, cert.kappa, cert.m, p.a), p.cR);
  cert.c_tilde = pointwise_mul(half_shift(p.b, cert.kappa), cert.c_intermediate);

  cert.sigma = build_sigma(p.kappaR, cert.kappa, p.b, opts.lift);
  cert.eta = build_eta(g, p.b);

  cert.checks.push_back(check_ratio_identity(p, cert));
  cert.checks.push_back(check_quarter_lift_identity(p, opts.lift));

  const PhaseCochain conj_se = pointwise_neg(pointwise_mul(cert.sigma, cert.eta));
  cert.c_hat = pointwise_mul(coboundary(p.a, conj_se), cert.c_tilde);
  cert.checks.push_back(check_phase_diagonal("chat-diagonal", cert.c_hat));

  PD0Triple triple{g, p.a, cert.kappa, cert.c_hat};
  {
    CheckVerdict v{"output-valid", true, {}, ""};
    if (auto violation = validate_triple(triple)) {
      v.pass = false;
      v.tuple = violation->tuple;
      v.detail = violation->constraint + ": " + violation->lhs + " != " + violation->rhs;
    }
    cert.checks.push_back(v);
  }

  for (const auto& c : cert.checks)
    if (!c.pass) {
      out.inconsistency = c;
      out.certificate = std::move(cert);
      return out;
    }
  out.triple = std::move(triple);
  out.certificate = std::move(cert);
  return out;
}

std::vector<CheckVerdict> check_claim_identities(const CRTPentuple& p,
                                                 const ReductionCertificate& cert) {
  std::vector<CheckVerdict> out;
  out.push_back(check_ratio_identity(p, cert));
  out.push_back(check_quarter_lift_identity(p, cert.lift));
  return out;
}

CRTPentuple synthesize_pentuple(const PD0Triple& t, const std::vector<Bit>& b) {
  if (!is_diagonal(t)) throw std::invalid_argument("synthesis requires a diagonal triple");
  if (validate_triple(t)) throw std::invalid_argument("synthesis requires a valid triple");
  require(b.size() == static_cast<std::size_t>(t.group->order()), "b has the wrong length");
  const GroupPtr& g = t.group;

  const BitCochain m = build_m(g, t.a, b);
  const BitCochain dm = coboundary(t.a, m);
  const BitCochain kappaR = pointwise_mul(t.kappa, dm);
  BitCochain kappaL = kappaR;
  for (std::size_t s = 0; s < kappaL.tuple_count(); ++s) {
    const auto tup = kappaL.indexer().unpack(s);
    const Bit d = d1b(*g, b, tup[0], tup[1]);
    kappaL.set(s, pair_mul(kappaL.get(s), BitPair{d, d}));
  }

  const PhaseCochain sigma = build_sigma(kappaR, t.kappa, b, BitLift::canonical01);
  const PhaseCochain eta = build_eta(g, b);
  const PhaseCochain c_tilde =
      pointwise_mul(t.c, coboundary(t.a, pointwise_mul(sigma, eta)));
  const PhaseCochain c = pointwise_mul(c_tilde, half_shift(b, t.kappa));  // shift is self-inverse
  const PhaseCochain cR =
      pointwise_mul(c, move_sign_factors(kappaL, t.kappa, m, t.a));  // signs are self-inverse

  CRTPentuple p{g, t.a, b, kappaR, kappaL, cR};
  if (auto v = validate_crt(p)) throw ConventionDiscrepancy(std::move(*v));
  return p;
}

}  // namespace fspt
