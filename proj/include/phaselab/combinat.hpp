#pragma once

#include "phaselab/core.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace phaselab {

/// Folded cyclic differences min((b - a) mod N, (a - b) mod N) over unordered
/// pairs a <= b, counted with multiplicity. counts[d] for d in [0, floor(N/2)].
struct DiffMultiset {
  int modulus = 0;
  std::vector<int> counts;

  /// Number of distinct differences, 0 included.
  int distinct() const;
  int total() const;
  auto operator<=>(const DiffMultiset&) const = default;
  bool operator==(const DiffMultiset&) const = default;
  std::string to_string() const;  // e.g. {0^4,1^2,2^1,3^2,4^1}
};

DiffMultiset difference_multiset(const SupportSet& s);

/// Reduced periodic autocorrelation of a real signal with the lag-N/2 value
/// halved for even N, so a 0/1 indicator maps onto DiffMultiset::counts.
Eigen::VectorXd folded_autocorr(const Eigen::VectorXd& x);

/// Lexicographically smallest member of the dihedral orbit.
SupportSet dihedral_canonical(const SupportSet& s);

/// One canonical representative per dihedral class of K-subsets of [0, N-1],
/// in increasing order. Throws ComputationError past max_classes (0 = no cap).
std::vector<SupportSet> dihedral_classes(int n, int k, std::size_t max_classes = 0);

struct CollisionGroup {
  DiffMultiset multiset;
  std::vector<SupportSet> classes;
};

struct CensusReport {
  int n = 0;
  int k = 0;
  std::size_t num_classes = 0;
  std::size_t num_colliding_pairs = 0;
  std::size_t num_colliding_classes = 0;
  double proportion = 0.0;  ///< colliding classes / classes
  bool partial = false;
  std::vector<CollisionGroup> groups;  ///< only groups with >= 2 classes
};

CensusReport collision_census(int n, int k, std::size_t max_classes = 0);

struct ComplementResult {
  bool holds = true;
  std::vector<int> witness;  ///< 1-based row indices S with neither S nor S^C spanning
  bool exact = false;        ///< exact rational rank was used
};

/// Exhaustive complement-property test over all 2^M row subsets.
ComplementResult complement_property(const Eigen::MatrixXd& a, const Tolerances& tol = {},
                                     int max_rows = 24);

/// Rank of the selected rows. Exact (rational elimination) when `exact`.
int row_rank(const Eigen::MatrixXd& a, std::uint64_t row_mask, bool exact, double rank_tol);

}  // namespace phaselab
