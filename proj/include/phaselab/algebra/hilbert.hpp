#pragma once

#include "phaselab/algebra/groebner.hpp"
#include "phaselab/algebra/polynomial.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace phaselab::algebra {

/// Hilbert polynomial sum_i c_i P_i with P_i(t) = C(t + i, i), the Hilbert
/// polynomial of projective i-space.
struct HilbertPoly {
  std::vector<std::int64_t> coeffs;  ///< coeffs[i] multiplies P_i; no trailing zeros

  /// Largest i with c_i != 0, or -1 for the zero polynomial (empty projective set).
  int projective_dimension() const { return static_cast<int>(coeffs.size()) - 1; }
  int affine_dimension() const { return projective_dimension() + 1; }
  /// Leading coefficient; 0 for the zero polynomial.
  std::int64_t degree() const { return coeffs.empty() ? 0 : coeffs.back(); }
  /// Value at t (t large enough that the Hilbert function agrees).
  std::int64_t evaluate(std::int64_t t) const;

  bool operator==(const HilbertPoly&) const = default;
  std::string to_string() const;  // e.g. "32P2 - 80P1 + 80P0"
};

/// Numerator K(t) of the Hilbert series K(t) / (1 - t)^n of R / <monomials>,
/// lowest degree first. Bigatti-style pivoting on the most frequent variable.
std::vector<std::int64_t> hilbert_numerator(const std::vector<Monomial>& generators, int num_vars);

HilbertPoly hilbert_polynomial_from_numerator(std::vector<std::int64_t> numerator, int num_vars);

HilbertPoly hilbert_polynomial_of_monomials(const std::vector<Monomial>& generators, int num_vars);

/// Leading monomials of a Groebner basis.
std::vector<Monomial> initial_ideal(const Ideal& basis);

/// Hilbert polynomial of R / I for a homogeneous ideal. Computes a Groebner
/// basis first. Throws std::invalid_argument for inhomogeneous generators.
HilbertPoly hilbert_polynomial(const Ideal& ideal, const GroebnerBudget& budget = {});

}  // namespace phaselab::algebra
