#pragma once

#include "phaselab/algebra/polynomial.hpp"

#include <chrono>
#include <cstddef>
#include <optional>

namespace phaselab::algebra {

struct GroebnerBudget {
  std::size_t max_pairs = 200000;  ///< S-pairs reduced before giving up
  int max_degree = 40;             ///< largest S-pair lcm degree allowed
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  int max_degree_seen = 0;
};

/// Fully reduces f against g (all terms, not just the leading one).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& g);

/// Reduced Groebner basis in degrevlex (variables ordered as in the ideal).
/// Buchberger's algorithm with the Gebauer-Moeller pair criteria and the
/// normal selection strategy. Throws ComputationError when the budget runs out.
Ideal groebner(const Ideal& ideal, const GroebnerBudget& budget = {}, GroebnerStats* stats = nullptr);

/// True when every S-polynomial of the basis reduces to zero.
bool is_groebner_basis(const std::vector<Polynomial>& basis);

/// True when the basis is reduced: monic, no lead term divides any term of another element.
bool is_reduced_basis(const std::vector<Polynomial>& basis);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

}  // namespace phaselab::algebra
