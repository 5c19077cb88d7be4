#pragma once

#include <optional>
#include <string>

#include "fspt/cochain.hpp"
#include "fspt/twist.hpp"

namespace fspt {

/// Invariant datum (c, kappa, a): a Z_2-valued homomorphism, a doubled
/// Z_2-valued 2-cochain and a doubled U(1)-valued 3-cochain subject to the
/// cocycle/obstruction constraints checked by validate_triple.
struct PD0Triple {
  GroupPtr group;
  Z2Hom a;
  BitCochain kappa;  // degree 2
  PhaseCochain c;    // degree 3

  static PD0Triple trivial(GroupPtr g, Z2Hom a);
};

struct TripleViolation {
  std::string constraint;  // "kappa-cocycle" or "c-obstruction"
  std::array<int, 4> tuple{};
  std::string lhs, rhs;
};

/// ok (nullopt) iff d^2_a kappa = 0 and d^3_a c equals the sign obstruction
/// built from kappa. Shape mismatches throw std::invalid_argument.
std::optional<TripleViolation> validate_triple(const PD0Triple& t);

/// plus = minus for every entry of both kappa and c.
bool is_diagonal(const PD0Triple& t);

/// Exponent bits of the two sign factors of the equivalence move:
/// (g,h,k) |-> kappa1(g,h).m^{a(gh)}(k)  XOR  m(g).kappa2^{a(g)}(h,k).
BitCochain move_sign_bits(const BitCochain& kappa1, const BitCochain& kappa2, const BitCochain& m,
                          const Z2Hom& a);
/// The same data as a phase cochain (each bit contributes a half phase).
PhaseCochain move_sign_factors(const BitCochain& kappa1, const BitCochain& kappa2,
                               const BitCochain& m, const Z2Hom& a);

/// Applies the move (m, sigma): kappa' = kappa + d^1_a m and
/// c' = signs(kappa, kappa', m) * d^2_a sigma * c.
PD0Triple apply_move(const PD0Triple& t, const BitCochain& m, const PhaseCochain& sigma);

/// Solutions of d^1_a m = kappa2 - kappa1 over doubled bit 1-cochains.
struct KappaMoveSolution {
  BitCochain particular;
  std::vector<BitCochain> kernel;  // basis of ker d^1_a
};
std::optional<KappaMoveSolution> solve_kappa_move(const PD0Triple& t1, const PD0Triple& t2,
                                                  TwistSystem& sys);

/// Decides r in image(d^2_a) over the full torus by the integer left-kernel
/// annihilator criterion; constructs a concrete preimage on success.
struct CoboundaryWitness {
  IntVector row;   // integer left-kernel row u with u.r != 0
  Phase pairing;   // the nonzero value of u.r in Q/Z
};
struct CoboundaryMembership {
  std::optional<PhaseCochain> sigma;
  std::optional<CoboundaryWitness> witness;
  bool member() const { return sigma.has_value(); }
};
CoboundaryMembership coboundary_membership(const PhaseCochain& r, TwistSystem& sys);
CoboundaryMembership coboundary_membership(const PhaseCochain& r, const Z2Hom& a);

enum class EquivVerdict { equivalent, inequivalent, budget_exceeded };

struct EquivCertificate {
  BitCochain m;
  PhaseCochain sigma;
};

struct EquivResult {
  EquivVerdict verdict;
  std::optional<EquivCertificate> certificate;  // when equivalent
  std::string reason;                           // short machine-readable cause
};

struct EquivOptions {
  int budget_log2 = 20;    // cap on enumerated kernel combinations
  bool enumerate = false;  // force the budgeted coset enumeration instead of
                           // the complete linear reduction
};

/// Decides t1 ~ t2. The default path reduces the search over m to a GF(2)
/// linear system (complete, never budget-limited); the enumeration path
/// walks the kernel coset and honors the budget.
EquivResult equiv(const PD0Triple& t1, const PD0Triple& t2, TwistSystem& sys,
                  const EquivOptions& opts = {});
EquivResult equiv(const PD0Triple& t1, const PD0Triple& t2, const EquivOptions& opts = {});

/// Searches for an equivalent triple with diagonal kappa and c.
struct DiagonalSearchResult {
  enum class Status { found, not_in_class, budget_exceeded } status;
  std::optional<PD0Triple> representative;
  std::optional<EquivCertificate> move;
};
DiagonalSearchResult diagonal_representative(const PD0Triple& t, TwistSystem& sys,
                                             const EquivOptions& opts = {});

}  // namespace fspt
