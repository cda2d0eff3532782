#pragma once

// Self-contained cross-checks pitting the fast algorithms against
// independent brute-force definitions.  Each oracle sweeps an exhaustive
// population and reports the number of cases checked plus the first
// disagreement found, if any.  The CLI `verify` command and the acceptance
// suite both run these.

#include <string>

#include "cuspidal/preorder.hpp"

namespace cusp {

struct OracleReport {
  std::string name;
  bool passed = true;
  long cases = 0;      // population size actually swept
  std::string detail;  // first counterexample, or a short summary
};

// The canonical tiling is identical under both removal tie-breaks for every
// skew shape of <= max_nodes nodes in a rows x cols window.
OracleReport oracle_gamma_uniqueness(const ConvexPreorder& pre, int rows,
                                     int cols, int max_nodes);

// For every skew shape of <= max_nodes nodes in the window, the canonical
// tiling's Kostant partition dominates every enumerated Kostant tiling's
// partition bilexicographically, with equality exactly when each tile is a
// union of equal-content canonical tiles.
OracleReport oracle_bilex_maximality(const ConvexPreorder& pre, int rows,
                                     int cols, int max_nodes);

// For every connected skew shape of <= max_nodes nodes (all residue
// alignments), the exhaustive two-split cuspidality test agrees with
// "matches a canonical cuspidal ribbon up to residue-preserving
// translation".
OracleReport oracle_cuspidal_classification(const ConvexPreorder& pre,
                                            int max_nodes);

// For every connected skew shape of <= max_nodes nodes (all residue
// alignments), the weak two-split semicuspidality test agrees with the
// canonical-tiling criterion.
OracleReport oracle_semicuspidal_agreement(const ConvexPreorder& pre,
                                           int max_nodes);

// For every connected shape of content m*delta with m*e <= max_nodes nodes,
// semicuspidality holds exactly when undilate succeeds.
OracleReport oracle_dilation_recognition(const ConvexPreorder& pre,
                                         int max_nodes);

}  // namespace cusp
