#pragma once

#include "phaselab/algebra/groebner.hpp"
#include "phaselab/algebra/hilbert.hpp"
#include "phaselab/core.hpp"

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace phaselab::algebra {

struct SweepBudget {
  std::size_t max_items = 0;  ///< pairs (support) or sets (signal) to test; 0 = no cap
  std::optional<std::chrono::steady_clock::time_point> deadline;
  GroebnerBudget groebner;
  unsigned workers = 0;
};

struct SignalConjectureReport {
  SupportSet support;
  bool skipped = false;
  std::string reason;
  HilbertPoly hilbert;
  int affine_dim = 0;
  std::int64_t degree = 0;
  int stabilizer = 0;
  std::int64_t expected_degree = 0;  ///< 2 |D_S|
  bool pass = false;
};

/// Dimension and degree of the incidence variety of S against itself,
/// compared with |S| and 2 |D_S|. Skipped unless |S - S| > |S| as sets.
SignalConjectureReport check_signal_conjecture(const SupportSet& s, const GroebnerBudget& budget = {});

struct SupportPairReport {
  SupportSet first;
  SupportSet second;
  HilbertPoly hilbert;
  int affine_dim = 0;
  std::int64_t degree = 0;
  bool pass = false;
  std::string error;  ///< set when the ideal computation failed
};

/// Threshold on |S - S| (distinct differences, 0 included) for a pair to be tested.
enum class SupportQualifier { AtLeastK, MoreThanK };

struct SupportConjectureReport {
  int n = 0;
  int k = 0;
  std::size_t classes = 0;
  std::size_t qualifying_classes = 0;
  std::vector<SupportPairReport> pairs;
  bool partial = false;
  bool all_pass = true;
};

/// Every unordered pair of non-equivalent K-subsets of [0, N-1] with
/// |S - S| = |S' - S'| >= K (distinct differences): the incidence variety
/// must have affine dimension < K. MoreThanK tests only |S - S| > K.
SupportConjectureReport check_support_conjecture(int n, int k, const SweepBudget& budget = {},
                                                 SupportQualifier qualifier = SupportQualifier::AtLeastK);

struct SignalSweepReport {
  int n = 0;
  int k = 0;
  std::vector<SignalConjectureReport> sets;  ///< tested (non-skipped) classes only
  std::size_t skipped = 0;
  bool partial = false;
  bool all_pass = true;
};

/// check_signal_conjecture on one representative of every dihedral class of K-subsets.
SignalSweepReport check_signal_sweep(int n, int k, const SweepBudget& budget = {});

}  // namespace phaselab::algebra
