#pragma once

#include "phaselab/algebra/polynomial.hpp"
#include "phaselab/core.hpp"

namespace phaselab::algebra {

/// Folded real autocorrelation a[l], l = 0..floor(N/2), of a signal supported
/// on S, as polynomials in the variables first_var .. first_var + |S| - 1
/// of a ring with num_vars variables. Every unordered pair is counted once.
std::vector<Polynomial> autocorrelation_polynomials(const SupportSet& s, int num_vars, int first_var);

/// Ideal of pairs (x, y) in L_S x L_S' with equal real periodic
/// autocorrelations: generators a_x[l] - a_y[l], l = 0..floor(N/2), with
/// identically zero generators dropped. Variables x_s (s in S) then y_s'.
Ideal incidence_ideal(const SupportSet& s, const SupportSet& s_prime);

}  // namespace phaselab::algebra
