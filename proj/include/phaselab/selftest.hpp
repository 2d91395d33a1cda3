#pragma once

#include "phaselab/core.hpp"

#include <string>
#include <vector>

namespace phaselab {

struct SelftestCase {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

/// Worked examples from the source material, checked end to end. Floating
/// comparisons use tol.eq_tol.
std::vector<SelftestCase> run_selftest(const Tolerances& tol = {});

/// The 5 x 3 integer matrix of the complement-property counterexample.
Eigen::MatrixXd example_matrix_5x3();

/// x1..x4 of the four-signal Fourier-intensity example.
std::vector<Signal> fourier_example_signals();

}  // namespace phaselab
