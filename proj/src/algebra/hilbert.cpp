#include "phaselab/algebra/hilbert.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace phaselab::algebra {
namespace {

using Series = std::vector<std::int64_t>;

void add_into(Series& acc, const Series& other, std::size_t shift) {
  if (acc.size() < other.size() + shift) acc.resize(other.size() + shift, 0);
  for (std::size_t k = 0; k < other.size(); ++k) acc[k + shift] += other[k];
}

Series multiply(const Series& a, const Series& b) {
  Series out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens)
    if (std::none_of(out.begin(), out.end(), [&](const Monomial& m) { return m.divides(g); })) out.push_back(g);
  return out;
}

int support_size(const Monomial& m) {
  int s = 0;
  for (int i = 0; i < m.num_vars(); ++i) s += m[i] > 0;
  return s;
}

Series numerator(std::vector<Monomial> gens, int num_vars) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};

  // Pivot on the variable that occurs most often among mixed generators.
  std::vector<int> counts(static_cast<std::size_t>(num_vars), 0);
  bool all_pure = true;
  for (const auto& g : gens) {
    if (support_size(g) < 2) continue;
    all_pure = false;
    for (int i = 0; i < num_vars; ++i) counts[static_cast<std::size_t>(i)] += g[i] > 0;
  }
  if (all_pure) {
    // Pure powers of distinct variables form a regular sequence.
    Series out{1};
    for (const auto& g : gens) {
      Series factor(static_cast<std::size_t>(g.degree()) + 1, 0);
      factor.front() = 1;
      factor.back() -= 1;
      out = multiply(out, factor);
    }
    return out;
  }
  const int v = static_cast<int>(std::max_element(counts.begin(), counts.end()) - counts.begin());
  Monomial pivot(num_vars);
  pivot.set(v, 1);

  std::vector<Monomial> plus{pivot};
  std::vector<Monomial> colon;
  for (const auto& g : gens) {
    if (g[v] == 0) plus.push_back(g);
    colon.push_back(g / g.gcd(pivot));
  }
  // K(I) = K(I + <p>) + t^{deg p} K(I : p)
  Series out = numerator(std::move(plus), num_vars);
  add_into(out, numerator(std::move(colon), num_vars), 1);
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::int64_t HilbertPoly::evaluate(std::int64_t t) const {
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    acc += coeffs[i] * binomial(t + static_cast<std::int64_t>(i), static_cast<std::int64_t>(i));
  return acc;
}

std::string HilbertPoly::to_string() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const std::int64_t c = coeffs[i];
    if (c == 0) continue;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    if (c != 1 && c != -1) os << (c < 0 ? -c : c);
    os << 'P' << i;
    first = false;
  }
  return os.str();
}

std::vector<std::int64_t> hilbert_numerator(const std::vector<Monomial>& generators, int num_vars) {
  for (const auto& g : generators)
    if (g.num_vars() != num_vars) throw std::invalid_argument("hilbert_numerator: variable count mismatch");
  return numerator(generators, num_vars);
}

HilbertPoly hilbert_polynomial_from_numerator(std::vector<std::int64_t> k, int num_vars) {
  HilbertPoly hp;
  while (!k.empty() && k.back() == 0) k.pop_back();
  if (k.empty()) return hp;

  // Cancel (1 - t) factors: K(t) = (1 - t) Q(t) whenever K(1) = 0.
  int d = num_vars;
  while (d > 0) {
    std::int64_t at_one = 0;
    for (auto c : k) at_one += c;
    if (at_one != 0) break;
    std::vector<std::int64_t> q(k.size() - 1, 0);
    std::int64_t running = 0;
    for (std::size_t i = 0; i + 1 < k.size(); ++i) {
      running += k[i];
      q[i] = running;  // q_i = k_0 + ... + k_i
    }
    k = std::move(q);
    --d;
  }
  if (d == 0) return hp;

  // t^k / (1 - t)^d contributes P_{d-1}(s - k); P_i(s - 1) = P_i(s) - P_{i-1}(s),
  // so c_{d-1-j} = (-1)^j sum_k h_k C(k, j).
  hp.coeffs.assign(static_cast<std::size_t>(d), 0);
  for (int j = 0; j < d; ++j) {
    std::int64_t acc = 0;
    for (std::size_t kk = 0; kk < k.size(); ++kk) acc += k[kk] * binomial(static_cast<std::int64_t>(kk), j);
    hp.coeffs[static_cast<std::size_t>(d - 1 - j)] = (j % 2 == 0) ? acc : -acc;
  }
  while (!hp.coeffs.empty() && hp.coeffs.back() == 0) hp.coeffs.pop_back();
  return hp;
}

HilbertPoly hilbert_polynomial_of_monomials(const std::vector<Monomial>& generators, int num_vars) {
  return hilbert_polynomial_from_numerator(hilbert_numerator(generators, num_vars), num_vars);
}

std::vector<Monomial> initial_ideal(const Ideal& basis) {
  std::vector<Monomial> lead;
  for (const auto& g : basis.generators)
    if (!g.is_zero()) lead.push_back(g.lead_monomial());
  return lead;
}

HilbertPoly hilbert_polynomial(const Ideal& ideal, const GroebnerBudget& budget) {
  if (!ideal.is_homogeneous()) throw std::invalid_argument("hilbert_polynomial: ideal is not homogeneous");
  bool all_zero = std::all_of(ideal.generators.begin(), ideal.generators.end(),
                              [](const Polynomial& p) { return p.is_zero(); });
  if (all_zero) return hilbert_polynomial_of_monomials({}, ideal.num_vars());
  const Ideal gb = groebner(ideal, budget);
  return hilbert_polynomial_of_monomials(initial_ideal(gb), ideal.num_vars());
}

}  // namespace phaselab::algebra
