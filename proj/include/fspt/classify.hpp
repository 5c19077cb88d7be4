#pragma once

#include <cstdint>
#include <vector>

#include "fspt/triple.hpp"

namespace fspt {

struct ClassifyOptions {
  std::int64_t denominator = 0;  // 0 selects lcm(|G|, 8)
  bool diagonal_only = false;
  std::uint64_t max_reps = 4096;  // cap on enumerated representatives per sector
  int workers = 1;                // kappa sectors computed in parallel when > 1
};

/// One kappa-cocycle class and the classification of its c-solutions.
struct SectorResult {
  BitCochain kappa_rep;  // normalized representative, embedded in the full complex
  bool empty = false;    // obstruction has no N-torsion solution
  std::uint64_t class_count = 0;
  std::vector<PhaseCochain> representatives;  // canonical (lex-least) per class
  bool reps_complete = true;
};

struct ClassifyResult {
  std::int64_t denominator = 0;
  bool diagonal_only = false;
  std::vector<SectorResult> sectors;
  std::uint64_t total_classes = 0;
};

/// Classifies the sector data for one a: kappa-cocycle classes modulo
/// kappa-moves, and for each kappa representative the c-solutions of the
/// obstruction equation over N-torsion phases modulo sigma-coboundaries and
/// the sign moves of kernel m's. Works in the normalized subcomplex.
///
/// With diagonal_only set, counts the equivalence classes that admit a
/// diagonal representative (kappa and c entrywise plus = minus), searching
/// diagonalizing moves exhaustively per class.
ClassifyResult classify_sector(const GroupPtr& g, const Z2Hom& a, const ClassifyOptions& opts = {});

/// Sum of diagonal class counts over every a in H^1(G, Z_2).
struct CensusResult {
  std::vector<ClassifyResult> per_a;
  std::uint64_t total_classes = 0;
};
CensusResult diagonal_census(const GroupPtr& g, const ClassifyOptions& opts = {});

}  // namespace fspt
