// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.
#include "phaselab/algebra/conjecture.hpp"
#include "phaselab/algebra/hilbert.hpp"
#include "phaselab/algebra/incidence.hpp"
#include "phaselab/ambiguity.hpp"
#include "phaselab/combinat.hpp"
#include "phaselab/measure.hpp"
#include "phaselab/numerics.hpp"
#include "phaselab/selftest.hpp"
#include "phaselab/symmetry.hpp"
#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

using namespace phaselab;
namespace alg = phaselab::algebra;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

bool same_roots(std::vector<Complex> actual, const std::vector<Complex>& expected, double tol) {
  if (actual.size() != expected.size()) return false;
  for (const Complex& e : expected) {
    auto it = std::min_element(actual.begin(), actual.end(),
                               [&](Complex a, Complex b) { return std::abs(a - e) < std::abs(b - e); });
    if (std::abs(*it - e) > tol) return false;
    actual.erase(it);
  }
  return true;
}

Verdict hilbert_distinct() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto hp = alg::hilbert_polynomial(alg::incidence_ideal(SupportSet({0, 1, 2, 4}, 8), SupportSet({0, 1, 2, 5}, 8)));
  const double t = seconds_since(t0);
  return {hp.to_string() == "32P2 - 80P1 + 80P0" && t < 60.0, hp.to_string() + " in " + fmt(t) + " s"};
}

Verdict hilbert_self() {
  const auto t0 = std::chrono::steady_clock::now();
  const SupportSet s({0, 1, 2, 5}, 8);
  const auto hp = alg::hilbert_polynomial(alg::incidence_ideal(s, s));
  const double t = seconds_since(t0);
  const int stab = stabilizer_order(s);
  const auto expected = alg::check_signal_conjecture(s).expected_degree;
  const bool ok = hp.to_string() == "4P3 + 10P2 - 30P1 + 20P0" && hp.affine_dimension() == 4 && hp.degree() == 4 &&
                  expected == 4 && stab == 2 && t < 60.0;
  return {ok, hp.to_string() + ", dim " + std::to_string(hp.affine_dimension()) + ", degree " +
                  std::to_string(hp.degree()) + " (2|D_S| = " + std::to_string(expected) + "), stabilizer " +
                  std::to_string(stab) + " in " + fmt(t) + " s"};
}

Verdict ambiguity_quadruple() {
  const auto xs = fourier_example_signals();
  const auto report = enumerate_ambiguities(xs[0]);
  bool ok = report.representatives.size() == 4;
  Signal shared(4);
  shared << 102.5, 45.5, 11.25, 4.5;
  double worst = 0.0;
  for (const auto& rep : report.representatives) {
    int matches = 0;
    for (const auto& x : xs) matches += orbit_equivalent(rep, x, GroupTag::PhaseConjReflect, 1e-7).equivalent;
    ok = ok && matches == 1;
  }
  for (const auto& x : xs) worst = std::max(worst, relative_distance(aperiodic_autocorr(x), shared));
  ok = ok && worst <= 1e-9;
  return {ok, std::to_string(report.representatives.size()) + " classes, each matching one signal; autocorrelation error " +
                  fmt(worst)};
}

Verdict root_sets() {
  using C = Complex;
  const auto xs = fourier_example_signals();
  const std::vector<std::vector<Complex>> expected = {
      {C(0, 3), C(0, -3), C(-0.5, 0)},
      {C(0, 1.0 / 3), C(0, -3), C(-0.5, 0)},
      {C(0, 3), C(0, -1.0 / 3), C(-0.5, 0)},
      {C(0, 3), C(0, -3), C(-2, 0)},
  };
  int hits = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) hits += same_roots(poly_roots(xs[i]).roots, expected[i], 1e-9);
  return {hits == 4, std::to_string(hits) + "/4 root sets within 1e-9"};
}

Verdict complement() {
  const Eigen::MatrixXd a = example_matrix_5x3();
  const auto r = complement_property(a);
  const Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic> ai = a.cast<long long>();
  Eigen::Matrix<long long, 3, 1> x, y;
  x << 1, 1, 9;
  y << 19, 7, -21;
  const bool equal = phaseless_linear(ai, x) == phaseless_linear(ai, y);
  const bool sign_eq = orbit_equivalent(x.cast<Complex>(), y.cast<Complex>(), GroupTag::Sign, 1e-9).equivalent;
  const bool ok = !r.holds && r.witness == std::vector<int>{1, 2, 3} && equal && !sign_eq;
  std::ostringstream os;
  os << "holds=" << r.holds << " witness=";
  for (int w : r.witness) os << w << ' ';
  os << "exact measurements equal=" << equal << " sign-equivalent=" << sign_eq;
  return {ok, os.str()};
}

Verdict difference_multisets() {
  const auto m = difference_multiset(SupportSet({0, 1, 2, 4}, 8));
  const bool counts = m.counts == std::vector<int>{4, 2, 2, 1, 1};
  const auto census = collision_census(8, 4);
  const auto c1 = dihedral_canonical(SupportSet({0, 1, 3, 4}, 8));
  const auto c2 = dihedral_canonical(SupportSet({0, 1, 2, 5}, 8));
  std::string shared;
  for (const auto& g : census.groups) {
    const bool h1 = std::find(g.classes.begin(), g.classes.end(), c1) != g.classes.end();
    const bool h2 = std::find(g.classes.begin(), g.classes.end(), c2) != g.classes.end();
    if (h1 && h2) shared = g.multiset.to_string();
  }
  const bool ok = counts && c1 != c2 && shared == "{0^4,1^2,2^1,3^2,4^1}";
  return {ok, "{0,1,2,4} -> " + m.to_string() + "; census pair multiset " + (shared.empty() ? "missing" : shared)};
}

Verdict conjecture_sweeps() {
  const auto t0 = std::chrono::steady_clock::now();
  alg::SweepBudget budget;
  budget.deadline = t0 + std::chrono::minutes(10);
  budget.groebner.deadline = budget.deadline;
  bool partial = false;
  std::size_t signal_sets = 0, signal_fail = 0, pairs = 0, strict_fail = 0;
  std::vector<std::string> failures;
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= std::min(n, 4); ++k) {
      const auto sig = alg::check_signal_sweep(n, k, budget);
      partial |= sig.partial;
      signal_sets += sig.sets.size();
      for (const auto& s : sig.sets) signal_fail += !s.pass;
      const auto sup = alg::check_support_conjecture(n, k, budget);
      partial |= sup.partial;
      pairs += sup.pairs.size();
      const auto strict = alg::check_support_conjecture(n, k, budget, alg::SupportQualifier::MoreThanK);
      partial |= strict.partial;
      strict_fail += !strict.all_pass;
      for (const auto& p : sup.pairs)
        if (!p.pass)
          failures.push_back(p.first.to_string() + " ~ " + p.second.to_string() + " dim " +
                             std::to_string(p.affine_dim));
    }
  std::ostringstream os;
  os << "signal: " << signal_sets << " sets, " << signal_fail << " failing; support: " << pairs << " pairs, "
     << failures.size() << " with dim >= K";
  if (!failures.empty()) os << " (e.g. " << failures.front() << ")";
  os << "; restricted to |S-S| > K: " << (strict_fail == 0 ? "all pass" : std::to_string(strict_fail) + " sweeps fail");
  if (partial) os << "; budget exhausted";
  os << " in " << fmt(seconds_since(t0)) << " s";
  return {!partial && signal_fail == 0 && failures.empty(), os.str()};
}

Verdict invariance_suite() {
  constexpr int kTrials = 100;
  constexpr double kTol = 1e-9;
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> angle(-3.14159, 3.14159), modulus(0.5, 2.0);
  std::uniform_int_distribution<int> coin(0, 1);
  double worst_pac = 0, worst_apac = 0, worst_stft = 0, worst_blind = 0, worst_frog = 0;
  for (int trial = 0; trial < kTrials; ++trial) {
    {
      const int n = 3 + trial % 8;
      const Signal x = fixtures::random_real(rng, n);
      const auto group = dihedral_group(n);
      const auto d = group[std::uniform_int_distribution<std::size_t>(0, group.size() - 1)(rng)];
      GroupElement g = d.as_signal_action();
      g = compose(GroupElement{Sign{coin(rng) ? 1 : -1}}, g);
      worst_pac = std::max(worst_pac, relative_distance(periodic_autocorr(phaselab::apply(g, x)), periodic_autocorr(x)));
    }
    {
      const Signal x = fixtures::random_complex(rng, 2 + trial % 9);
      GroupElement g{GlobalPhase{angle(rng)}};
      if (coin(rng)) g = compose(GroupElement{ConjReverse{}}, g);
      worst_apac =
          std::max(worst_apac, relative_distance(aperiodic_autocorr(phaselab::apply(g, x)), aperiodic_autocorr(x)));
    }
    {
      const int n = 4 + trial % 6;
      const StftConfig cfg{fixtures::random_complex(rng, 1 + trial % n), n, 1 + trial % 3};
      const Signal x = fixtures::random_complex(rng, n);
      const Signal xp = std::polar(1.0, angle(rng)) * x;
      worst_stft = std::max(worst_stft, relative_distance(stft_phaseless(xp, cfg), stft_phaseless(x, cfg)));
    }
    {
      const auto [n, w, l] = trial % 2 ? std::tuple{8, 3, 2} : std::tuple{12, 4, 3};
      const StftConfig cfg{fixtures::random_complex(rng, w), n, l};
      const Signal x = fixtures::random_complex(rng, n);
      BlindStftElement g{angle(rng), {}, std::uniform_int_distribution<int>(0, cfg.sections() - 1)(rng)};
      for (int a = 0; a < cfg.alpha(); ++a) g.lambda.push_back(std::polar(modulus(rng), angle(rng)));
      const auto [xp, wp] = blind_apply(g, x, cfg.window, cfg);
      worst_blind = std::max(worst_blind, relative_distance(Eigen::MatrixXd(blind_stft(xp, wp, cfg).cwiseAbs()),
                                                            Eigen::MatrixXd(blind_stft(x, cfg.window, cfg).cwiseAbs())));
    }
    {
      const int n = 4 + trial % 9;
      const int band = 1 + trial % (n / 2);
      const int first = std::uniform_int_distribution<int>(0, n - 1)(rng);
      const Signal x = band_limit(fixtures::random_complex(rng, n), first, band);
      const int hop = 1 + trial % 3;
      const long long shift = std::uniform_int_distribution<int>(0, n - 1)(rng);
      GroupElement g{std::vector<Generator>{GlobalPhase{angle(rng)}, CyclicShift{shift}}};
      if (coin(rng)) g = compose(GroupElement{ConjReflect{}}, g);
      worst_frog = std::max(worst_frog, relative_distance(frog(phaselab::apply(g, x), hop), frog(x, hop)));
    }
  }
  const double worst = std::max({worst_pac, worst_apac, worst_stft, worst_blind, worst_frog});
  return {worst <= kTol, "worst relative deviation over 5 x 100 trials: pac " + fmt(worst_pac) + ", apac " +
                             fmt(worst_apac) + ", stft " + fmt(worst_stft) + ", blind " + fmt(worst_blind) +
                             ", frog " + fmt(worst_frog)};
}

Verdict numeric_symbolic() {
  const SupportSet s({0, 1, 2, 5}, 8);
  std::mt19937_64 rng(99);
  const Signal xr = fixtures::random_real(rng, 4);
  Eigen::VectorXd pt(8);
  pt << xr.real(), xr.real();
  const auto jd = jacobian_dimension(s, s, pt);
  const int hdim = alg::hilbert_polynomial(alg::incidence_ideal(s, s)).affine_dimension();

  const Signal x = fixtures::random_complex(rng, 6);
  const Eigen::MatrixXcd a = fixtures::random_matrix(rng, 12, 6).cast<Complex>() +
                             Complex(0, 1) * fixtures::random_matrix(rng, 12, 6).cast<Complex>();
  const auto lin = ResidualMap::linear(SensingMatrix::complex(a), x);
  const StftConfig cfg{fixtures::random_complex(rng, 3), 6, 2};
  const auto st = ResidualMap::stft(cfg, x);
  const auto fr = ResidualMap::frog(2, x);
  auto start = [&](const ResidualMap& m) { return Eigen::VectorXd(m.coords(fixtures::random_complex(rng, 6))); };
  const double g_lin = gradcheck(lin, start(lin));
  const double g_stft = gradcheck(st, start(st));
  const double g_frog = gradcheck(fr, start(fr));
  const bool ok = jd.dimension == 4 && hdim == 4 && g_lin <= 1e-5 && g_stft <= 1e-5 && g_frog <= 1e-4;
  return {ok, "Jacobian dim " + std::to_string(jd.dimension) + " vs Hilbert dim " + std::to_string(hdim) +
                  "; gradcheck linear " + fmt(g_lin) + ", stft " + fmt(g_stft) + ", frog " + fmt(g_frog)};
}

Verdict collision_probes() {
  const Signal x = from_real({1, 1, 9});
  CollisionOptions opts;
  opts.restarts = 200;
  opts.seed = 0;
  const auto hit = collision_search(ResidualMap::linear(SensingMatrix::real(example_matrix_5x3()), x), x,
                                    GroupTag::Sign, opts);
  std::mt19937_64 rng(7);
  const Eigen::MatrixXd b = fixtures::random_matrix(rng, 7, 4);
  const bool cp = complement_property(b).holds;
  const Signal xb = fixtures::random_real(rng, 4);
  const auto miss = collision_search(ResidualMap::linear(SensingMatrix::real(b), xb), xb, GroupTag::Sign, opts);
  const bool ok = hit.found && hit.residual < 1e-8 && cp && !miss.found && miss.converged > 0;
  return {ok, "5x3: " + std::string(hit.found ? "collision, residual " + fmt(hit.residual) : "none") +
                  "; random 7x4 (complement property " + (cp ? "holds" : "fails") + "): " +
                  (miss.found ? "collision" : "none") + " in " + std::to_string(miss.converged) + " converged runs"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"hilbert polynomial, distinct supports", hilbert_distinct},
      {"hilbert polynomial, equal supports", hilbert_self},
      {"ambiguity quadruple", ambiguity_quadruple},
      {"root sets", root_sets},
      {"complement property", complement},
      {"difference multisets and census", difference_multisets},
      {"conjecture sweeps N<=8 K<=4", conjecture_sweeps},
      {"invariance suite", invariance_suite},
      {"numeric-symbolic consistency", numeric_symbolic},
      {"collision probes", collision_probes},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failures += !v.pass;
    std::printf("%s [%zu] %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
