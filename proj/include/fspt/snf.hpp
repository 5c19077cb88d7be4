#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fspt/gf2.hpp"
#include "fspt/phase.hpp"

namespace fspt {

/// Smith normal form u * a * v = diag(divisors), with u, v unimodular and
/// their inverses tracked. divisors are positive and form a divisibility
/// chain; their number is the rank.
struct SmithForm {
  IntMatrix u, v;
  IntMatrix u_inv, v_inv;
  std::vector<std::int64_t> divisors;
  Eigen::Index rows = 0, cols = 0;

  Eigen::Index rank() const { return static_cast<Eigen::Index>(divisors.size()); }
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Membership/solve of A x = r over the torus Q/Z, where r is given as
/// numerators over a common denominator. A vector r is in the image iff
/// u . r = 0 in Q/Z for every integer left-kernel row u of A; on success a
/// concrete rational solution is produced (numerators over den_out).
struct TorusSolveResult {
  bool member = false;
  // witness (only when !member): the violated left-kernel row and its pairing
  IntVector witness_row;
  Phase witness_value;
  // solution (only when member), numerators over den_out
  std::int64_t den_out = 1;
  IntVector solution_num;
};
TorusSolveResult solve_torus(const SmithForm& f, const IntVector& num, std::int64_t den);

/// Solve A x = w (mod n). kernel_gens generate ker(A mod n) as a subgroup of
/// Z_n^cols.
struct ModNSolveResult {
  bool solvable = false;
  IntVector particular;                 // entries in [0, n)
  std::vector<IntVector> kernel_gens;   // entries in [0, n)
};
ModNSolveResult solve_mod_n(const SmithForm& f, const IntVector& w, std::int64_t n);

/// Lower-triangular basis (positive diagonal dividing n, or n itself on
/// pivotless rows) of the lattice spanned by the columns of gens together
/// with n * Z^d. Computed Howell-style entirely in mod-n arithmetic, with
/// the saturation property that makes mixed-radix quotient transversals
/// valid. Always full rank.
IntMatrix hnf_lattice_basis(const IntMatrix& gens, std::int64_t n, Eigen::Index dim);

/// Canonical (lexicographically least, coordinates in [0, n)) representative
/// of x modulo the lattice with basis b (as produced by hnf_lattice_basis).
IntVector reduce_lex_least(const IntMatrix& b, IntVector x, std::int64_t n);

/// Membership of x in the lattice with basis b.
bool lattice_contains(const IntMatrix& b, const IntVector& x, std::int64_t n);

/// Structure of the finite quotient L_ker / L_sub for bases produced by
/// hnf_lattice_basis with the same n, L_sub contained in L_ker. The
/// generators with their cyclic_orders form mixed-radix transversal
/// coordinates: every coset has exactly one representative
/// sum_i c_i * generators[i] with 0 <= c_i < cyclic_orders[i].
struct LatticeQuotient {
  std::uint64_t order = 1;
  std::vector<std::int64_t> cyclic_orders;   // > 1 entries only
  std::vector<IntVector> generators;         // elements of L_ker
};
LatticeQuotient lattice_quotient(const IntMatrix& ker_basis, const IntMatrix& sub_basis,
                                 std::int64_t n);

}  // namespace fspt
