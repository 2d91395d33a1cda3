#include "phaselab/ambiguity.hpp"

#include "phaselab/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace phaselab {
namespace {

struct Horner {
  Complex value;
  Complex derivative;
  double magnitude_bound;  // sum |c_k| |z|^k, the rounding scale of value
};

Horner horner(const Signal& c, Complex z) {
  Complex p{0.0, 0.0}, dp{0.0, 0.0};
  double bound = 0.0;
  const double az = std::abs(z);
  for (Eigen::Index k = c.size(); k-- > 0;) {
    dp = dp * z + p;
    p = p * z + c(k);
    bound = bound * az + std::abs(c(k));
  }
  return {p, dp, bound};
}

void sort_roots(std::vector<Complex>& roots) {
  auto key = [](Complex z) {
    return std::pair{std::llround(z.real() * 1e9), std::llround(z.imag() * 1e9)};
  };
  std::sort(roots.begin(), roots.end(), [&](Complex a, Complex b) { return key(a) < key(b); });
}

}  // namespace

Signal RootSet::expand() const {
  Signal c = Signal::Zero(static_cast<Eigen::Index>(roots.size()) + 1);
  c(0) = 1.0;
  Eigen::Index degree = 0;
  for (const Complex r : roots) {
    ++degree;
    for (Eigen::Index k = degree; k > 0; --k) c(k) = c(k - 1) - r * c(k);
    c(0) = -r * c(0);
  }
  return c * leading;
}

RootSet poly_roots(const Signal& x, const RootOptions& opts) {
  require_signal(x);
  Eigen::Index last = x.size() - 1;
  while (last >= 0 && x(last) == Complex{0.0, 0.0}) --last;
  if (last < 0) throw std::invalid_argument("poly_roots: all-zero signal has no root set");

  RootSet out;
  out.leading = x(last);
  out.trimmed_length = last + 1;

  Eigen::Index low = 0;
  while (x(low) == Complex{0.0, 0.0}) {
    out.roots.emplace_back(0.0, 0.0);
    ++low;
  }
  const Signal c = x.segment(low, last - low + 1) / x(last);  // monic
  const Eigen::Index degree = c.size() - 1;
  if (degree == 0) return out;

  // Start on a circle whose radius is the geometric mean of the root moduli.
  const double radius = std::pow(std::abs(c(0)), 1.0 / static_cast<double>(degree));
  std::vector<Complex> z(static_cast<std::size_t>(degree));
  for (Eigen::Index i = 0; i < degree; ++i)
    z[static_cast<std::size_t>(i)] =
        std::polar(radius, 2.0 * std::numbers::pi * (static_cast<double>(i) + 0.25) / static_cast<double>(degree) + 0.4);

  bool converged = false;
  for (int iter = 0; iter < opts.max_iterations && !converged; ++iter) {
    converged = true;
    for (std::size_t i = 0; i < z.size(); ++i) {
      const Horner h = horner(c, z[i]);
      if (h.value == Complex{0.0, 0.0}) continue;
      const Complex ratio = h.value / h.derivative;
      Complex repulsion{0.0, 0.0};
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      const Complex step = ratio / (1.0 - ratio * repulsion);
      z[i] -= step;
      if (std::abs(step) > 1e-15 * std::max(1.0, std::abs(z[i]))) converged = false;
    }
  }

  // Newton polish against the unscaled coefficients, then the residual test.
  const Signal full = x.segment(low, last - low + 1);
  const double scale = x.norm();
  for (auto& root : z) {
    for (int k = 0; k < 3; ++k) {
      const Horner h = horner(full, root);
      if (h.derivative == Complex{0.0, 0.0}) break;
      const Complex next = root - h.value / h.derivative;
      if (std::abs(horner(full, next).value) < std::abs(h.value)) root = next;
    }
    const Horner h = horner(full, root);
    const double allowance = opts.residual_tol * scale * std::pow(std::max(1.0, std::abs(root)), static_cast<double>(degree));
    if (std::abs(h.value) > std::max(allowance, 64.0 * std::numeric_limits<double>::epsilon() * h.magnitude_bound))
      throw ComputationError("poly_roots: no convergence within " + std::to_string(opts.max_iterations) +
                             " iterations");
  }
  out.roots.insert(out.roots.end(), z.begin(), z.end());
  sort_roots(out.roots);
  return out;
}

Signal flip(const Signal& x, const RootSet& roots, const std::vector<int>& flipped, double theta) {
  RootSet modified = roots;
  Complex gain = std::polar(1.0, theta);
  for (int idx : flipped) {
    if (idx < 0 || static_cast<std::size_t>(idx) >= roots.roots.size())
      throw std::invalid_argument("flip: root index out of range");
    const Complex g = roots.roots[static_cast<std::size_t>(idx)];
    if (g == Complex{0.0, 0.0}) throw std::invalid_argument("flip: a zero root has no conjugate inverse");
    modified.roots[static_cast<std::size_t>(idx)] = 1.0 / std::conj(g);
    gain *= g;
  }
  modified.leading *= gain;
  Signal out = Signal::Zero(x.size());
  out.head(roots.trimmed_length) = modified.expand();
  const double norm = out.norm();
  if (norm > 0.0) out *= x.norm() / norm;
  return out;
}

Signal flip(const Signal& x, const std::vector<int>& flipped, double theta) {
  return flip(x, poly_roots(x), flipped, theta);
}

AmbiguityReport enumerate_ambiguities(const Signal& x, const AmbiguityOptions& opts) {
  AmbiguityReport report;
  const RootSet rs = poly_roots(x);
  report.roots = rs.roots;
  const std::size_t d = rs.roots.size();

  if (x(0) == Complex{0.0, 0.0} || x(x.size() - 1) == Complex{0.0, 0.0}) {
    report.degenerate = true;
    report.notes.emplace_back("first or last entry is zero");
  }
  double max_mod = 0.0;
  for (auto r : rs.roots) max_mod = std::max(max_mod, std::abs(r));
  std::vector<int> flippable;
  for (std::size_t i = 0; i < d; ++i) {
    const Complex g = rs.roots[i];
    if (g == Complex{0.0, 0.0}) continue;
    flippable.push_back(static_cast<int>(i));
    if (std::abs(std::abs(g) - 1.0) <= opts.circle_tol) {
      report.degenerate = true;
      report.notes.push_back("root " + std::to_string(i) + " lies on the unit circle");
    }
    for (std::size_t j = 0; j < d; ++j) {
      if (j == i) continue;
      const Complex h = rs.roots[j];
      if (j > i && std::abs(g - h) <= opts.distinct_tol * max_mod) {
        report.degenerate = true;
        report.notes.push_back("roots " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
      }
      if (h != Complex{0.0, 0.0} && std::abs(g - 1.0 / std::conj(h)) <= opts.distinct_tol * max_mod) {
        report.degenerate = true;
        report.notes.push_back("root " + std::to_string(i) + " is the conjugate inverse of root " + std::to_string(j));
      }
    }
  }

  const std::size_t subsets = std::size_t{1} << flippable.size();
  std::vector<Signal> candidates(subsets);
  std::vector<std::vector<int>> sets(subsets);
  for (std::size_t mask = 0; mask < subsets; ++mask)
    for (std::size_t b = 0; b < flippable.size(); ++b)
      if (mask & (std::size_t{1} << b)) sets[mask].push_back(flippable[b]);
  parallel_for(subsets, [&](std::size_t mask) { candidates[mask] = flip(x, rs, sets[mask], 0.0); });

  for (std::size_t mask = 0; mask < subsets; ++mask) {
    bool seen = false;
    for (const auto& rep : report.representatives)
      if (orbit_equivalent(rep, candidates[mask], GroupTag::PhaseConjReflect, opts.dedup_tol).equivalent) {
        seen = true;
        break;
      }
    if (seen) continue;
    if (opts.max_classes != 0 && report.representatives.size() >= opts.max_classes) {
      report.truncated = true;
      break;
    }
    report.representatives.push_back(candidates[mask]);
    report.flip_sets.push_back(sets[mask]);
  }
  return report;
}

}  // namespace phaselab
