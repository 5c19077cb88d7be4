#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fspt/triple.hpp"

namespace fspt {

/// Integer lift used where a Z_2 value enters a quarter phase. canonical01 is
/// the working convention ({0,1}); negated01 ({0,-1}) exists as a negative
/// control for the lift-sensitive identities and fails them by design.
enum class BitLift { canonical01, negated01 };

inline std::int64_t lift_bit(Bit v, BitLift lift) {
  return lift == BitLift::canonical01 ? static_cast<std::int64_t>(v)
                                      : -static_cast<std::int64_t>(v);
}

/// CRT-compatible invariant data (c_R, kappa_R, kappa_L, b, a). b is stored
/// undoubled: its two components coincide by construction.
struct CRTPentuple {
  GroupPtr group;
  Z2Hom a;
  std::vector<Bit> b;      // b[g]
  BitCochain kappaR;       // degree 2
  BitCochain kappaL;       // degree 2
  PhaseCochain cR;         // degree 3

  static CRTPentuple trivial(GroupPtr g, Z2Hom a);
};

struct CrtViolation {
  std::string constraint;  // "mirror-relation", "sum-rule", "crt-compatibility"
  std::array<int, 4> tuple{};
  std::string lhs, rhs;
};

/// Checks the scalar CRT constraints: the mirror relation between kappa_L and
/// kappa_R, the parity sum rule binding them to b, and the compatibility
/// identity fixing the component ratio of c_R. All with {0,1} lifts.
std::optional<CrtViolation> validate_crt(const CRTPentuple& p);

/// d^1 b (g,h) = b_g + b_h + b_{gh} mod 2 (the twist is invisible on b).
Bit d1b(const FiniteGroup& g, const std::vector<Bit>& b, int x, int y);

/// The move cochain m with plus component 0 and minus component b. Verifies
/// the closed form (d^1_a m)(g,h) = (a(g) b_h, d^1 b(g,h) + a(g) b_h).
BitCochain build_m(const GroupPtr& g, const Z2Hom& a, const std::vector<Bit>& b);

struct CheckVerdict {
  std::string name;
  bool pass = false;
  std::array<int, 4> tuple{};  // first failing tuple when !pass
  std::string detail;
};

struct ReductionCertificate {
  BitCochain m;
  BitCochain kappa;        // diagonal
  BitCochain kappa_prime;  // kappa + d^1 b (diagonal)
  PhaseCochain c_intermediate;
  PhaseCochain c_tilde;
  PhaseCochain sigma;  // plus component trivial
  PhaseCochain eta;    // plus component trivial
  PhaseCochain c_hat;  // diagonal
  BitLift lift = BitLift::canonical01;
  std::vector<CheckVerdict> checks;

  bool all_pass() const;
  const CheckVerdict* find(const std::string& name) const;
};

struct ReduceOptions {
  BitLift lift = BitLift::canonical01;
};

/// Outcome of the reduction chain. Exactly one of the three states holds:
/// rejected (input failed validate_crt; certificate absent), inconsistency
/// (a chain identity failed; certificate carries the verdicts), or success
/// (triple set, certificate all-pass).
struct ReduceOutcome {
  std::optional<PD0Triple> triple;
  std::optional<ReductionCertificate> certificate;
  std::optional<CrtViolation> rejected;
  std::optional<CheckVerdict> inconsistency;

  bool ok() const { return triple.has_value(); }
};

/// Carries (c_R, kappa_R, kappa_L, b, a) to a diagonal triple
/// (c_hat, kappa, a), verifying every intermediate identity.
ReduceOutcome reduce(const CRTPentuple& p, const ReduceOptions& opts = {});

/// Re-derives the identity verdicts of a certificate against its pentuple,
/// honoring the certificate's lift convention.
std::vector<CheckVerdict> check_claim_identities(const CRTPentuple& p,
                                                 const ReductionCertificate& cert);

struct ConventionDiscrepancy : std::runtime_error {
  explicit ConventionDiscrepancy(CrtViolation v)
      : std::runtime_error("synthesized pentuple violates " + v.constraint + ": " + v.lhs +
                           " != " + v.rhs),
        violation(std::move(v)) {}
  CrtViolation violation;
};

/// Inverts the reduction chain: builds a pentuple that reduces back to the
/// given diagonal triple exactly. Validates its own output and throws
/// ConventionDiscrepancy if the synthesized data fails validate_crt.
CRTPentuple synthesize_pentuple(const PD0Triple& t, const std::vector<Bit>& b);

}  // namespace fspt
