#include "phaselab/algebra/incidence.hpp"

#include <algorithm>

namespace phaselab::algebra {

std::vector<Polynomial> autocorrelation_polynomials(const SupportSet& s, int num_vars, int first_var) {
  const int n = s.modulus();
  const auto& idx = s.indices();
  std::vector<std::vector<Term>> lags(static_cast<std::size_t>(n / 2 + 1));
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = i; j < idx.size(); ++j) {
      const int d = idx[j] - idx[i];
      const int lag = std::min(d, n - d);
      Monomial m(num_vars);
      m.set(first_var + static_cast<int>(i), 1);
      m.set(first_var + static_cast<int>(j), m[first_var + static_cast<int>(j)] + 1);
      lags[static_cast<std::size_t>(lag)].push_back({m, Rational(1)});
    }
  }
  std::vector<Polynomial> out;
  out.reserve(lags.size());
  for (auto& terms : lags) out.emplace_back(num_vars, std::move(terms));
  return out;
}

Ideal incidence_ideal(const SupportSet& s, const SupportSet& s_prime) {
  if (s.modulus() != s_prime.modulus()) throw std::invalid_argument("incidence_ideal: supports must share N");
  const int kx = static_cast<int>(s.size());
  const int nv = kx + static_cast<int>(s_prime.size());
  if (nv > kMaxVariables) throw std::invalid_argument("incidence_ideal: too many variables");

  Ideal ideal;
  for (int i : s.indices()) ideal.variables.push_back("x" + std::to_string(i));
  for (int i : s_prime.indices()) ideal.variables.push_back("y" + std::to_string(i));

  const auto ax = autocorrelation_polynomials(s, nv, 0);
  const auto ay = autocorrelation_polynomials(s_prime, nv, kx);
  for (std::size_t lag = 0; lag < ax.size(); ++lag) {
    Polynomial g = ax[lag] - ay[lag];
    if (!g.is_zero()) ideal.generators.push_back(std::move(g));
  }
  return ideal;
}

}  // namespace phaselab::algebra
