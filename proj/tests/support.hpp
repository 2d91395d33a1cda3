#pragma once

#include "phaselab/core.hpp"

#include <random>

namespace phaselab::fixtures {

Signal random_complex(std::mt19937_64& rng, Eigen::Index n);
Signal random_real(std::mt19937_64& rng, Eigen::Index n);
Eigen::MatrixXd random_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols);

/// DFT with the same sign convention as phaselab::dft, computed by Eigen's FFT.
Signal fft(const Signal& x);

/// Hilbert function of R / <monomials> at degree t by listing monomials.
long long count_standard_monomials(const std::vector<std::vector<int>>& lead, int num_vars, int t);

}  // namespace phaselab::fixtures
