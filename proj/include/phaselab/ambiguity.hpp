#pragma once

#include "phaselab/core.hpp"

#include <optional>
#include <string>
#include <vector>

namespace phaselab {

/// xhat(w) = leading * prod_i (w - roots[i]).
struct RootSet {
  std::vector<Complex> roots;
  Complex leading{1.0, 0.0};
  /// Number of coefficients of the trimmed polynomial (degree + 1).
  Eigen::Index trimmed_length = 1;

  /// Coefficients of leading * prod (w - root), lowest degree first.
  Signal expand() const;
};

struct RootOptions {
  int max_iterations = 500;
  double residual_tol = 1e-12;
};

/// Roots of sum_n x[n] w^n by Aberth-Ehrlich simultaneous iteration with a
/// Newton polish. Trailing zeros are trimmed first; roots are returned in a
/// deterministic order (by real part, then imaginary part).
/// Throws std::invalid_argument for an all-zero signal and ComputationError
/// when the iteration cap is hit before the residual test passes.
RootSet poly_roots(const Signal& x, const RootOptions& opts = {});

/// Flips the roots with the given indices (into poly_roots(x).roots) to their
/// conjugate inverses, multiplies by e^{i theta}, and rescales so the result
/// has the same energy as x. The output has the length of x.
Signal flip(const Signal& x, const std::vector<int>& flipped, double theta = 0.0);
Signal flip(const Signal& x, const RootSet& roots, const std::vector<int>& flipped, double theta = 0.0);

struct AmbiguityOptions {
  double dedup_tol = 1e-7;
  double distinct_tol = 1e-6;  ///< relative to max |root|
  double circle_tol = 1e-6;
  std::size_t max_classes = 0;  ///< 0 = no cap
};

struct AmbiguityReport {
  std::vector<Signal> representatives;
  std::vector<std::vector<int>> flip_sets;  ///< root indices flipped for each representative
  std::vector<Complex> roots;
  bool degenerate = false;
  bool truncated = false;
  std::vector<std::string> notes;
};

/// One representative per class of signals sharing x's Fourier intensity,
/// modulo global phase and conjugate reversal. 2^{N-2} classes for generic x.
AmbiguityReport enumerate_ambiguities(const Signal& x, const AmbiguityOptions& opts = {});

}  // namespace phaselab
