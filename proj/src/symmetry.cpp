#include "phaselab/symmetry.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace phaselab {
namespace {

long long mod(long long a, long long n) { return ((a % n) + n) % n; }

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Signal apply_generator(const Generator& g, const Signal& x) {
  const Eigen::Index n = x.size();
  return std::visit(
      overloaded{
          [&](const GlobalPhase& p) -> Signal { return x * std::polar(1.0, p.theta); },
          [&](const Sign& s) -> Signal { return x * static_cast<double>(s.value); },
          [&](const CyclicShift& c) -> Signal {
            Signal y(n);
            for (Eigen::Index i = 0; i < n; ++i) y(i) = x(mod(i + c.shift, n));
            return y;
          },
          [&](const Reflect&) -> Signal {
            Signal y(n);
            for (Eigen::Index i = 0; i < n; ++i) y(i) = x(mod(n - i, n));
            return y;
          },
          [&](const ConjReflect&) -> Signal {
            Signal y(n);
            for (Eigen::Index i = 0; i < n; ++i) y(i) = std::conj(x(mod(n - i, n)));
            return y;
          },
          [&](const ConjReverse&) -> Signal {
            Signal y(n);
            for (Eigen::Index i = 0; i < n; ++i) y(i) = std::conj(x(n - 1 - i));
            return y;
          },
      },
      g);
}

Generator invert_generator(const Generator& g) {
  return std::visit(overloaded{
                        [](const GlobalPhase& p) -> Generator { return GlobalPhase{-p.theta}; },
                        [](const CyclicShift& c) -> Generator { return CyclicShift{-c.shift}; },
                        [](const auto& involution) -> Generator { return involution; },
                    },
                    g);
}

std::string describe_generator(const Generator& g) {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const GlobalPhase& p) { os << "GlobalPhase(" << p.theta << ")"; },
                 [&](const Sign& s) { os << "Sign(" << s.value << ")"; },
                 [&](const CyclicShift& c) { os << "CyclicShift(" << c.shift << ")"; },
                 [&](const Reflect&) { os << "Reflect"; },
                 [&](const ConjReflect&) { os << "ConjReflect"; },
                 [&](const ConjReverse&) { os << "ConjReverse"; },
             },
             g);
  return os.str();
}

}  // namespace

std::string GroupElement::describe() const {
  if (factors.empty()) return "Identity";
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? " * " : "") + describe_generator(factors[i]);
  return out;
}

GroupElement compose(const GroupElement& g, const GroupElement& h) {
  std::vector<Generator> word = g.factors;
  word.insert(word.end(), h.factors.begin(), h.factors.end());
  return GroupElement(std::move(word));
}

GroupElement inverse(const GroupElement& g) {
  std::vector<Generator> word;
  word.reserve(g.factors.size());
  for (auto it = g.factors.rbegin(); it != g.factors.rend(); ++it) word.push_back(invert_generator(*it));
  return GroupElement(std::move(word));
}

Signal apply(const GroupElement& g, const Signal& x) {
  Signal y = x;
  for (auto it = g.factors.rbegin(); it != g.factors.rend(); ++it) y = apply_generator(*it, y);
  return y;
}

int DihedralElement::map(int i, int n) const {
  return static_cast<int>(mod((reflect ? -i : i) + shift, n));
}

SupportSet DihedralElement::image(const SupportSet& s) const {
  const int n = s.modulus();
  std::vector<int> out;
  out.reserve(s.size());
  // preimage under map(): reflections are involutions, shifts invert by -shift
  for (int t : s.indices()) out.push_back(reflect ? map(t, n) : static_cast<int>(mod(t - shift, n)));
  return SupportSet(std::move(out), n);
}

GroupElement DihedralElement::as_signal_action() const {
  std::vector<Generator> word;
  if (reflect) word.emplace_back(Reflect{});
  if (shift != 0) word.emplace_back(CyclicShift{shift});
  return GroupElement(std::move(word));
}

std::vector<DihedralElement> dihedral_group(int n) {
  std::vector<DihedralElement> group;
  group.reserve(static_cast<std::size_t>(2 * n));
  for (int refl = 0; refl < 2; ++refl)
    for (int s = 0; s < n; ++s) group.push_back({s, refl == 1});
  return group;
}

std::set<SupportSet> dihedral_orbit(const SupportSet& s) {
  std::set<SupportSet> orbit;
  for (const auto& sigma : dihedral_group(s.modulus())) orbit.insert(sigma.image(s));
  return orbit;
}

int stabilizer_order(const SupportSet& s) {
  int count = 0;
  for (const auto& sigma : dihedral_group(s.modulus()))
    if (sigma.image(s) == s) ++count;
  return count;
}

GroupTag parse_group_tag(const std::string& name) {
  if (name == "sign") return GroupTag::Sign;
  if (name == "phase") return GroupTag::Phase;
  if (name == "sign-dihedral" || name == "sign×dihedral" || name == "signdihedral") return GroupTag::SignDihedral;
  if (name == "phase-conjreflect" || name == "phase⋉conjreflect" || name == "o2") return GroupTag::PhaseConjReflect;
  throw std::invalid_argument("unknown group tag: " + name);
}

std::string to_string(GroupTag tag) {
  switch (tag) {
    case GroupTag::Sign: return "sign";
    case GroupTag::Phase: return "phase";
    case GroupTag::SignDihedral: return "sign-dihedral";
    case GroupTag::PhaseConjReflect: return "phase-conjreflect";
  }
  return "?";
}

OrbitMatch orbit_equivalent(const Signal& x, const Signal& x_prime, GroupTag tag, double tol) {
  OrbitMatch best;
  best.residual = std::numeric_limits<double>::infinity();
  if (x.size() != x_prime.size() || x.size() == 0) return best;

  std::vector<GroupElement> discrete;
  bool continuous_phase = false;
  switch (tag) {
    case GroupTag::Sign:
      discrete = {GroupElement{}, GroupElement{Sign{-1}}};
      break;
    case GroupTag::Phase:
      discrete = {GroupElement{}};
      continuous_phase = true;
      break;
    case GroupTag::SignDihedral:
      for (const auto& sigma : dihedral_group(static_cast<int>(x.size()))) {
        discrete.push_back(sigma.as_signal_action());
        discrete.push_back(compose(GroupElement{Sign{-1}}, sigma.as_signal_action()));
      }
      break;
    case GroupTag::PhaseConjReflect:
      discrete = {GroupElement{}, GroupElement{ConjReverse{}}};
      continuous_phase = true;
      break;
  }

  const double scale = std::max(x.norm(), x_prime.norm());
  for (const auto& d : discrete) {
    Signal z = apply(d, x);
    GroupElement g = d;
    if (continuous_phase) {
      const Complex overlap = z.dot(x_prime);  // sum conj(z) x'
      const double theta = std::abs(overlap) > 0.0 ? std::arg(overlap) : 0.0;
      z *= std::polar(1.0, theta);
      if (theta != 0.0) g = compose(GroupElement{GlobalPhase{theta}}, d);
    }
    const double residual = scale == 0.0 ? 0.0 : (z - x_prime).norm() / scale;
    if (residual < best.residual) {
      best.residual = residual;
      best.witness = std::move(g);
    }
  }
  best.equivalent = best.residual <= tol;
  return best;
}

BlindStftElement BlindStftElement::identity(const StftConfig& cfg) {
  return {0.0, std::vector<Complex>(static_cast<std::size_t>(cfg.alpha()), Complex{1.0, 0.0}), 0};
}

std::pair<Signal, Signal> blind_apply(const BlindStftElement& g, const Signal& x, const Signal& w,
                                      const StftConfig& cfg) {
  const int alpha = cfg.alpha();
  const int sections = cfg.sections();
  if (static_cast<int>(g.lambda.size()) != alpha)
    throw std::invalid_argument("blind_apply: lambda must have alpha = gcd(L, N) entries");
  for (const auto& l : g.lambda)
    if (l == Complex{0.0, 0.0}) throw std::invalid_argument("blind_apply: lambda entries must be nonzero");
  if (x.size() != cfg.length || w.size() > cfg.length)
    throw std::invalid_argument("blind_apply: signal/window lengths do not match the configuration");

  const Complex phase = std::polar(1.0, g.theta);
  const Complex root = std::polar(1.0, 2.0 * std::numbers::pi * g.root_index / sections);

  Signal xp(x.size());
  for (Eigen::Index n = 0; n < x.size(); ++n) {
    const auto residue = static_cast<std::size_t>(n % alpha);
    xp(n) = phase * g.lambda[residue] * std::pow(root, static_cast<double>(n / alpha)) * x(n);
  }
  Signal wp(w.size());
  for (Eigen::Index n = 0; n < w.size(); ++n) {
    const auto residue = static_cast<std::size_t>(mod(-n, alpha));
    const auto ceil_div = (n + alpha - 1) / alpha;
    wp(n) = phase / g.lambda[residue] * std::pow(root, static_cast<double>(ceil_div)) * w(n);
  }
  return {xp, wp};
}

}  // namespace phaselab
