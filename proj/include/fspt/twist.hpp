#pragma once

#include <map>
#include <memory>
#include <optional>

#include "fspt/cochain.hpp"
#include "fspt/gf2.hpp"
#include "fspt/snf.hpp"

namespace fspt {

/// Integer matrix of the twisted differential d^degree_a on component-indexed
/// slots (slot = 2*tuple + component; component 0 = plus, 1 = minus).
/// Applying it to a discretized cochain agrees with direct evaluation:
/// mod 2 for bit cochains, in Q/Z for phase cochains.
IntMatrix linearize(const FiniteGroup& g, const Z2Hom& a, int degree);

/// Same map restricted to the normalized subcomplex (tuples over non-identity
/// elements only).
IntMatrix linearize_normalized(const FiniteGroup& g, const Z2Hom& a, int degree);

/// Untwisted, undoubled differential on the normalized subcomplex. This is
/// the action of every d^degree_a on diagonal cochains (the swap is invisible
/// there), so it carries no dependence on a.
IntMatrix linearize_normalized_plain(const FiniteGroup& g, int degree);

/// The component-difference of a coboundary: sigma (doubled, degree 2)
/// |-> (d^2_a sigma)^plus - (d^2_a sigma)^minus, landing in undoubled
/// degree-3 slots.
IntMatrix linearize_diag_difference(const FiniteGroup& g, const Z2Hom& a, bool normalized);

// --- discretization -------------------------------------------------------

IntVector discretize(const BitCochain& x);
IntVector discretize_num(const PhaseCochain& x);
Gf2Vec discretize_gf2(const BitCochain& x);
BitCochain bit_cochain_from_gf2(const GroupPtr& g, int degree, const Gf2Vec& v);
PhaseCochain phase_cochain_from_num(const GroupPtr& g, int degree, const IntVector& num,
                                    std::int64_t den);

// normalized restrictions / embeddings (doubled slots: 2*tuple + component)
Gf2Vec restrict_normalized(const BitCochain& x);
IntVector restrict_normalized_num(const PhaseCochain& x);
BitCochain embed_normalized(const GroupPtr& g, int degree, const Gf2Vec& v);
PhaseCochain embed_normalized(const GroupPtr& g, int degree, const IntVector& num,
                              std::int64_t den);

/// Lazily built and memoized linear-algebra data for one (group, a) pair.
/// Not thread-safe; use one instance per worker.
class TwistSystem {
 public:
  TwistSystem(GroupPtr group, Z2Hom a);

  const GroupPtr& group() const { return group_; }
  const Z2Hom& a() const { return a_; }

  /// GF(2) system of d^degree_a on doubled bit cochains (degree 1 or 2).
  const Gf2System& bits(int degree, bool normalized);
  /// Integer matrix of d^degree_a (degree 1..3).
  const IntMatrix& ints(int degree, bool normalized);
  /// Smith form of the integer matrix (degree 2 or 3).
  const SmithForm& smith(int degree, bool normalized);
  /// Component-difference map and its Smith form.
  const IntMatrix& diag_difference(bool normalized);
  const SmithForm& diag_difference_smith(bool normalized);

 private:
  GroupPtr group_;
  Z2Hom a_;
  std::map<std::pair<int, bool>, Gf2System> bits_;
  std::map<std::pair<int, bool>, IntMatrix> ints_;
  std::map<std::pair<int, bool>, SmithForm> smith_;
  std::map<bool, IntMatrix> diff_;
  std::map<bool, SmithForm> diff_smith_;
};

}  // namespace fspt
