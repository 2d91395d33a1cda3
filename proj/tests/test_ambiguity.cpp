#include "phaselab/ambiguity.hpp"

#include "phaselab/measure.hpp"
#include "phaselab/selftest.hpp"
#include "phaselab/symmetry.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace phaselab;

namespace {

// Eigenvalues of the companion matrix of sum x[n] w^n.
std::vector<Complex> companion_roots(const Signal& x) {
  const Eigen::Index d = x.size() - 1;
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(d, d);
  for (Eigen::Index i = 1; i < d; ++i) c(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < d; ++i) c(i, d - 1) = -x(i) / x(d);
  const Eigen::VectorXcd ev = Eigen::ComplexEigenSolver<Eigen::MatrixXcd>(c).eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

double root_distance(std::vector<Complex> a, const std::vector<Complex>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (const Complex& r : b) {
    auto it = std::min_element(a.begin(), a.end(), [&](Complex p, Complex q) { return std::abs(p - r) < std::abs(q - r); });
    worst = std::max(worst, std::abs(*it - r));
    a.erase(it);
  }
  return worst;
}

Signal from_roots(const std::vector<Complex>& roots, Complex leading) {
  RootSet rs;
  rs.roots = roots;
  rs.leading = leading;
  rs.trimmed_length = static_cast<Eigen::Index>(roots.size()) + 1;
  return rs.expand();
}

}  // namespace

TEST(PolyRoots, FourSignalExample) {
  using C = Complex;
  const auto xs = fourier_example_signals();
  const std::vector<std::vector<Complex>> expected = {
      {C(0, 3), C(0, -3), C(-0.5, 0)},
      {C(0, 1.0 / 3), C(0, -3), C(-0.5, 0)},
      {C(0, 3), C(0, -1.0 / 3), C(-0.5, 0)},
      {C(0, 3), C(0, -3), C(-2, 0)},
  };
  for (std::size_t i = 0; i < xs.size(); ++i) EXPECT_LT(root_distance(poly_roots(xs[i]).roots, expected[i]), 1e-9);
}

TEST(PolyRoots, HandCheckableQuadratic) {
  EXPECT_LT(root_distance(poly_roots(from_real({-6, 5, 1})).roots, {Complex(1, 0), Complex(-6, 0)}), 1e-12);
}

TEST(PolyRoots, AgreesWithCompanionMatrix) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    const Signal x = fixtures::random_complex(rng, 2 + trial % 9);
    const auto rs = poly_roots(x);
    EXPECT_LT(root_distance(rs.roots, companion_roots(x)), 1e-8);
    EXPECT_LT(relative_distance(rs.expand(), x), 1e-10);
  }
}

TEST(PolyRoots, TrimsTrailingZerosAndKeepsZeroRoots) {
  const auto rs = poly_roots(from_real({0, 2, -2, 0, 0}));
  EXPECT_EQ(rs.trimmed_length, 3);
  EXPECT_LT(root_distance(rs.roots, {Complex(0, 0), Complex(1, 0)}), 1e-12);
  EXPECT_THROW(poly_roots(Signal::Zero(4)), std::invalid_argument);
  EXPECT_TRUE(poly_roots(from_real({3})).roots.empty());
}

TEST(Flip, EmptySetIsGlobalPhase) {
  const Signal x1 = fourier_example_signals()[0];
  EXPECT_LT(relative_distance(flip(x1, {}, 0.9), Signal(std::polar(1.0, 0.9) * x1)), 1e-12);
}

TEST(Flip, AllRootsGivesConjugateReversal) {
  std::mt19937_64 rng(2);
  const Signal x = fixtures::random_complex(rng, 6);
  const Signal flipped = flip(x, {0, 1, 2, 3, 4});
  EXPECT_TRUE(orbit_equivalent(flipped, phaselab::apply(GroupElement{ConjReverse{}}, x), GroupTag::Phase, 1e-9).equivalent);
}

TEST(Flip, PreservesAperiodicAutocorrelation) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Signal x = fixtures::random_complex(rng, 6);
    std::uniform_int_distribution<int> mask(0, 31);
    std::vector<int> chosen;
    const int m = mask(rng);
    for (int i = 0; i < 5; ++i)
      if (m >> i & 1) chosen.push_back(i);
    const Signal y = flip(x, chosen, 0.4);
    EXPECT_LT(relative_distance(aperiodic_autocorr(y), aperiodic_autocorr(x)), 1e-9);
  }
}

TEST(Flip, ThreeIInFirstSignalGivesSecond) {
  const auto xs = fourier_example_signals();
  const RootSet rs = poly_roots(xs[0]);
  int idx = 0;
  for (std::size_t i = 0; i < rs.roots.size(); ++i)
    if (std::abs(rs.roots[i] - Complex(0, 3)) < 1e-9) idx = static_cast<int>(i);
  EXPECT_TRUE(orbit_equivalent(flip(xs[0], rs, {idx}), xs[1], GroupTag::Phase, 1e-9).equivalent);
}

TEST(Flip, RejectsZeroRootAndBadIndex) {
  const Signal x = from_real({0, 1, 1});
  const RootSet rs = poly_roots(x);
  int zero = 0;
  for (std::size_t i = 0; i < rs.roots.size(); ++i)
    if (std::abs(rs.roots[i]) < 1e-12) zero = static_cast<int>(i);
  EXPECT_THROW(flip(x, rs, {zero}), std::invalid_argument);
  EXPECT_THROW(flip(x, rs, {5}), std::invalid_argument);
}

TEST(Ambiguities, FourClassesForTheExample) {
  const auto xs = fourier_example_signals();
  const auto report = enumerate_ambiguities(xs[0]);
  ASSERT_EQ(report.representatives.size(), 4u);
  EXPECT_FALSE(report.degenerate);
  for (const auto& rep : report.representatives) {
    int matches = 0;
    for (const auto& x : xs) matches += orbit_equivalent(rep, x, GroupTag::PhaseConjReflect, 1e-7).equivalent;
    EXPECT_EQ(matches, 1);
    EXPECT_LT(relative_distance(aperiodic_autocorr(rep), aperiodic_autocorr(xs[0])), 1e-9);
  }
}

TEST(Ambiguities, GenericCountIsPowerOfTwo) {
  std::mt19937_64 rng(4);
  for (int n : {2, 3, 5, 6}) {
    const Signal x = fixtures::random_complex(rng, n);
    const auto report = enumerate_ambiguities(x);
    EXPECT_EQ(report.representatives.size(), std::size_t{1} << (n - 2)) << "n=" << n;
    for (std::size_t i = 0; i < report.representatives.size(); ++i)
      for (std::size_t j = i + 1; j < report.representatives.size(); ++j)
        EXPECT_FALSE(orbit_equivalent(report.representatives[i], report.representatives[j],
                                      GroupTag::PhaseConjReflect, 1e-7)
                         .equivalent);
  }
}

TEST(Ambiguities, UnitCircleRootIsDegenerate) {
  // Roots {i, 2, -3}: flipping i is a no-op, leaving 2 classes instead of 4.
  const Signal x = from_roots({Complex(0, 1), Complex(2, 0), Complex(-3, 0)}, 1.0);
  const auto report = enumerate_ambiguities(x);
  EXPECT_TRUE(report.degenerate);
  EXPECT_EQ(report.representatives.size(), 2u);
  EXPECT_FALSE(report.notes.empty());
}

TEST(Ambiguities, MaxClassesTruncates) {
  std::mt19937_64 rng(5);
  AmbiguityOptions opts;
  opts.max_classes = 3;
  const auto report = enumerate_ambiguities(fixtures::random_complex(rng, 6), opts);
  EXPECT_TRUE(report.truncated);
  EXPECT_LE(report.representatives.size(), 3u);
}
