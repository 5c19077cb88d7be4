#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fspt/doubled.hpp"

namespace fspt {

/// First failed group axiom, with witnesses.
struct GroupViolation {
  std::string invariant;        // "identity-row", "identity-column", "latin-row",
                                // "latin-column", "associativity"
  std::array<int, 3> witness{};  // elements involved (unused slots = -1)
  std::string message;
};

struct GroupError : std::runtime_error {
  explicit GroupError(GroupViolation v)
      : std::runtime_error("invalid group: " + v.message), violation(std::move(v)) {}
  GroupViolation violation;
};

/// Finite group as an immutable multiplication table. Index 0 is the
/// identity; the inverse table is derived eagerly at construction.
class FiniteGroup {
 public:
  /// Z_n with table[g][h] = (g+h) mod n.
  static FiniteGroup cyclic(int n);
  /// Dihedral group of order 2n (n >= 1): elements r^i s^j, index i + n*j.
  static FiniteGroup dihedral(int n);
  /// Direct product; element (g,h) gets index g*|H| + h.
  static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
  /// Validates all axioms; throws GroupError on violation.
  static FiniteGroup from_table(int order, std::vector<int> table,
                                std::vector<std::string> names = {});

  int order() const { return order_; }
  int mul(int g, int h) const { return table_[static_cast<std::size_t>(g) * order_ + h]; }
  int inverse(int g) const { return inverse_[g]; }
  static constexpr int identity() { return 0; }
  const std::vector<int>& table() const { return table_; }
  const std::vector<std::string>& names() const { return names_; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

 private:
  FiniteGroup(int order, std::vector<int> table, std::vector<std::string> names);

  int order_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<std::string> names_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Checks the raw table against all FiniteGroup invariants without
/// constructing a group. Returns the first violation found, if any.
std::optional<GroupViolation> check_table(int order, const std::vector<int>& table);

/// Re-checks an already constructed group (always ok for groups built through
/// the factories; exposed for loaded/handcrafted tables).
std::optional<GroupViolation> check_axioms(const FiniteGroup& g);

/// Homomorphism G -> Z_2, i.e. an element of H^1(G, Z_2).
struct Z2Hom {
  std::vector<Bit> values;  // values[g] = a(g)
  Bit operator()(int g) const { return values[static_cast<std::size_t>(g)]; }
  friend bool operator==(const Z2Hom&, const Z2Hom&) = default;
};

bool is_z2_hom(const FiniteGroup& g, const std::vector<Bit>& values);

/// The complete list of homomorphisms G -> Z_2 in lexicographic order of
/// their value arrays. Always starts with the zero map.
std::vector<Z2Hom> all_z2_homs(const FiniteGroup& g);

}  // namespace fspt
