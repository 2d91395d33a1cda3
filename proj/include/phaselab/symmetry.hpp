#pragma once

#include "phaselab/core.hpp"
#include "phaselab/measure.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace phaselab {

struct GlobalPhase { double theta = 0.0; };
struct Sign { int value = 1; };
/// x'[i] = x[(i + s) mod N]
struct CyclicShift { long long shift = 0; };
/// x'[i] = x[(N - i) mod N]; index 0 is fixed.
struct Reflect {};
/// x'[i] = conj(x[(N - i) mod N])
struct ConjReflect {};
/// x'[i] = conj(x[N - 1 - i]); the conjugate reflection that preserves the
/// aperiodic autocorrelation.
struct ConjReverse {};

using Generator = std::variant<GlobalPhase, Sign, CyclicShift, Reflect, ConjReflect, ConjReverse>;

/// A finite word of generators. factors = {g1, g2, ..., gk} acts as
/// g1(g2(...gk(x))), so the last factor is applied first.
struct GroupElement {
  std::vector<Generator> factors;

  GroupElement() = default;
  GroupElement(Generator g) : factors{std::move(g)} {}  // NOLINT: implicit on purpose
  explicit GroupElement(std::vector<Generator> word) : factors(std::move(word)) {}

  bool is_identity() const { return factors.empty(); }
  std::string describe() const;
};

GroupElement compose(const GroupElement& g, const GroupElement& h);  // g after h
GroupElement inverse(const GroupElement& g);

Signal apply(const GroupElement& g, const Signal& x);

/// Dihedral element i -> (refl ? -i : i) + s acting on index sets. Acting on a
/// signal this is the pullback x'[i] = x[sigma(i)], so the support maps to
/// sigma^{-1}(S).
struct DihedralElement {
  int shift = 0;
  bool reflect = false;
  int map(int i, int n) const;
  SupportSet image(const SupportSet& s) const;
  GroupElement as_signal_action() const;
};

std::vector<DihedralElement> dihedral_group(int n);
std::set<SupportSet> dihedral_orbit(const SupportSet& s);
int stabilizer_order(const SupportSet& s);

enum class GroupTag { Sign, Phase, SignDihedral, PhaseConjReflect };

GroupTag parse_group_tag(const std::string& name);
std::string to_string(GroupTag tag);

struct OrbitMatch {
  bool equivalent = false;
  GroupElement witness;
  double residual = 0.0;  ///< ||g x - x'|| / max(||x||, ||x'||) for the best g
};

/// Decides whether x' = g x for some g in the tagged group. Discrete parts are
/// enumerated exhaustively; a continuous phase is resolved as arg<g x, x'>.
OrbitMatch orbit_equivalent(const Signal& x, const Signal& x_prime, GroupTag tag, double tol);

/// (theta, lambda, j) in S^1 x (C^x)^alpha x Z_R.
struct BlindStftElement {
  double theta = 0.0;
  std::vector<Complex> lambda;
  int root_index = 0;

  static BlindStftElement identity(const StftConfig& cfg);
};

/// Returns (x', w'); w keeps its length W.
std::pair<Signal, Signal> blind_apply(const BlindStftElement& g, const Signal& x, const Signal& w,
                                      const StftConfig& cfg);

}  // namespace phaselab
