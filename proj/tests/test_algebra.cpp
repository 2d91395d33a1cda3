#include "phaselab/algebra/conjecture.hpp"
#include "phaselab/algebra/groebner.hpp"
#include "phaselab/algebra/hilbert.hpp"
#include "phaselab/algebra/incidence.hpp"
#include "phaselab/algebra/polynomial.hpp"

#include "phaselab/combinat.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace phaselab;
using namespace phaselab::algebra;

namespace {

Ideal make_ideal(std::vector<std::string> vars, const std::vector<std::string>& gens) {
  Ideal ideal;
  ideal.variables = std::move(vars);
  for (const auto& g : gens) ideal.generators.push_back(parse_polynomial(g, ideal.variables));
  return ideal;
}

std::vector<double> random_point(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> normal;
  std::vector<double> p(static_cast<std::size_t>(n));
  for (auto& v : p) v = normal(rng);
  return p;
}

long long oracle_hilbert(const Ideal& basis, int t) {
  std::vector<std::vector<int>> lead;
  for (const auto& m : initial_ideal(basis)) {
    std::vector<int> e(static_cast<std::size_t>(basis.num_vars()));
    for (int i = 0; i < basis.num_vars(); ++i) e[static_cast<std::size_t>(i)] = m[i];
    lead.push_back(e);
  }
  return fixtures::count_standard_monomials(lead, basis.num_vars(), t);
}

}  // namespace

TEST(Polynomial, ArithmeticAgreesWithEvaluation) {
  const std::vector<std::string> names = {"a", "b", "c"};
  const auto p = parse_polynomial("a^2*b - 3/2*c + 4", names);
  const auto q = parse_polynomial("b*c - a + 1/3", names);
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const auto pt = random_point(rng, 3);
    const double pv = p.evaluate(pt), qv = q.evaluate(pt);
    EXPECT_NEAR((p + q).evaluate(pt), pv + qv, 1e-9);
    EXPECT_NEAR((p - q).evaluate(pt), pv - qv, 1e-9);
    EXPECT_NEAR((p * q).evaluate(pt), pv * qv, 1e-8);
    EXPECT_NEAR(p.scaled(Rational(2, 7)).evaluate(pt), pv * 2.0 / 7.0, 1e-9);
    const double h = 1e-6;
    auto shifted = pt;
    shifted[1] += h;
    const double fd = (p.evaluate(shifted) - pv) / h;
    EXPECT_NEAR(p.derivative(1).evaluate(pt), fd, 1e-4);
  }
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(p.total_degree(), 3);
  EXPECT_FALSE(p.is_homogeneous());
}

TEST(Polynomial, SubstituteComposes) {
  const std::vector<std::string> names = {"x", "y"};
  const auto p = parse_polynomial("x^2 - x*y", names);
  const auto sub = p.substitute({parse_polynomial("x + y", names), parse_polynomial("y", names)});
  EXPECT_EQ(sub, parse_polynomial("x^2 + x*y", names));
}

TEST(Polynomial, DegrevlexOrder) {
  EXPECT_EQ(degrevlex(Monomial{1, 1, 0}, Monomial{2, 0, 0}), std::strong_ordering::less);
  // Same degree: x*z < y^2 in degrevlex.
  EXPECT_EQ(degrevlex(Monomial{1, 0, 1}, Monomial{0, 2, 0}), std::strong_ordering::less);
  EXPECT_EQ(degrevlex(Monomial{0, 0, 3}, Monomial{1, 0, 0}), std::strong_ordering::greater);
}

TEST(Groebner, CyclicThreeIsGroebnerAndReduced) {
  const auto ideal = make_ideal({"a", "b", "c"}, {"a + b + c", "a*b + b*c + c*a", "a*b*c"});
  const auto basis = groebner(ideal);
  EXPECT_TRUE(is_groebner_basis(basis.generators));
  EXPECT_TRUE(is_reduced_basis(basis.generators));
  for (const auto& g : ideal.generators) EXPECT_TRUE(normal_form(g, basis.generators).is_zero());
  // c^3 lies in the ideal (roots are all zero); c^2 does not.
  EXPECT_TRUE(normal_form(parse_polynomial("c^3", ideal.variables), basis.generators).is_zero());
  EXPECT_FALSE(normal_form(parse_polynomial("c^2", ideal.variables), basis.generators).is_zero());
  const auto hp = hilbert_polynomial(ideal);
  EXPECT_TRUE(hp.coeffs.empty());
  EXPECT_EQ(hp.affine_dimension(), 0);
}

TEST(Groebner, BudgetExhaustionThrows) {
  const auto ideal = make_ideal({"a", "b", "c"}, {"a^2 - b*c", "b^2 - a*c", "c^2 - a*b"});
  GroebnerBudget budget;
  budget.max_pairs = 1;
  EXPECT_THROW(groebner(ideal, budget), ComputationError);
}

TEST(Hilbert, SimpleIdeals) {
  EXPECT_EQ(hilbert_polynomial(make_ideal({"x", "y", "z"}, {"x"})).to_string(), "P1");
  EXPECT_EQ(hilbert_polynomial(make_ideal({"x", "y", "z"}, {"x", "y"})).to_string(), "P0");
  EXPECT_EQ(hilbert_polynomial(make_ideal({"x", "y"}, {"x^2"})).to_string(), "2P0");
  const auto conic = hilbert_polynomial(make_ideal({"x", "y", "z"}, {"x*z - y^2"}));
  EXPECT_EQ(conic.projective_dimension(), 1);
  EXPECT_EQ(conic.degree(), 2);
}

TEST(Hilbert, InhomogeneousThrows) {
  EXPECT_THROW(hilbert_polynomial(make_ideal({"x", "y"}, {"x^2 - y"})), std::invalid_argument);
}

TEST(Hilbert, AgreesWithMonomialCount) {
  const std::vector<std::pair<SupportSet, SupportSet>> cases = {
      {SupportSet({0, 1, 2, 4}, 8), SupportSet({0, 1, 2, 5}, 8)},
      {SupportSet({0, 1, 2, 5}, 8), SupportSet({0, 1, 2, 5}, 8)},
      {SupportSet({0, 1, 3}, 7), SupportSet({0, 1, 5}, 7)},
  };
  for (const auto& [s, t] : cases) {
    const auto ideal = incidence_ideal(s, t);
    const auto basis = groebner(ideal);
    const auto hp = hilbert_polynomial(ideal);
    for (int deg : {20, 25, 30}) EXPECT_EQ(hp.evaluate(deg), oracle_hilbert(basis, deg)) << s.to_string();
  }
}

TEST(Hilbert, WorkedIncidenceIdeals) {
  const SupportSet s0({0, 1, 2, 4}, 8), s2({0, 1, 2, 5}, 8);
  const auto hp4 = hilbert_polynomial(incidence_ideal(s0, s2));
  EXPECT_EQ(hp4.to_string(), "32P2 - 80P1 + 80P0");
  EXPECT_EQ(hp4.affine_dimension(), 3);
  const auto hp5 = hilbert_polynomial(incidence_ideal(s2, s2));
  EXPECT_EQ(hp5.to_string(), "4P3 + 10P2 - 30P1 + 20P0");
  EXPECT_EQ(hp5.affine_dimension(), 4);
  EXPECT_EQ(hp5.degree(), 4);
}

TEST(Hilbert, InvariantUnderVariablePermutation) {
  const auto ideal = incidence_ideal(SupportSet({0, 1, 2, 4}, 8), SupportSet({0, 1, 2, 5}, 8));
  std::vector<int> perm(static_cast<std::size_t>(ideal.num_vars()));
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 3; ++trial) {
    std::shuffle(perm.begin(), perm.end(), rng);
    Ideal permuted;
    std::vector<Polynomial> values;
    for (int i = 0; i < ideal.num_vars(); ++i) {
      permuted.variables.push_back(ideal.variables[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]);
    }
    for (int i = 0; i < ideal.num_vars(); ++i) {
      const auto pos = std::find(perm.begin(), perm.end(), i) - perm.begin();
      values.push_back(Polynomial::variable(ideal.num_vars(), static_cast<int>(pos)));
    }
    for (const auto& g : ideal.generators) permuted.generators.push_back(g.substitute(values));
    EXPECT_EQ(hilbert_polynomial(permuted).to_string(), "32P2 - 80P1 + 80P0");
  }
}

TEST(Incidence, TrivialSolutionsLieOnTheVariety) {
  // y = +-x on the same support, and the reflected copy, satisfy every generator.
  const SupportSet s({0, 1, 2, 5}, 8);
  const auto ideal = incidence_ideal(s, s);
  std::mt19937_64 rng(5);
  for (int sign : {1, -1}) {
    auto x = random_point(rng, 4);
    std::vector<double> pt = x;
    for (double v : x) pt.push_back(sign * v);
    for (const auto& g : ideal.generators) EXPECT_NEAR(g.evaluate(pt), 0.0, 1e-9);
  }
}

TEST(Incidence, GeneratorsMatchFoldedAutocorrelation) {
  const SupportSet s({0, 1, 3}, 7), t({0, 1, 5}, 7);
  const auto polys = autocorrelation_polynomials(s, 3, 0);
  std::mt19937_64 rng(6);
  const auto pt = random_point(rng, 3);
  Eigen::VectorXd sig = Eigen::VectorXd::Zero(7);
  for (std::size_t i = 0; i < 3; ++i) sig(s.indices()[i]) = pt[i];
  const Eigen::VectorXd f = folded_autocorr(sig);
  ASSERT_EQ(static_cast<Eigen::Index>(polys.size()), f.size());
  for (std::size_t l = 0; l < polys.size(); ++l) EXPECT_NEAR(polys[l].evaluate(pt), f(static_cast<Eigen::Index>(l)), 1e-9);
  EXPECT_EQ(incidence_ideal(s, t).num_vars(), 6);
}

TEST(Conjecture, SignalSweepSmall) {
  const auto r = check_signal_sweep(7, 3);
  EXPECT_FALSE(r.partial);
  EXPECT_TRUE(r.all_pass);
  for (const auto& s : r.sets) EXPECT_EQ(s.affine_dim, 3);
}

TEST(Conjecture, WorkedSignalCase) {
  const auto r = check_signal_conjecture(SupportSet({0, 1, 2, 5}, 8));
  EXPECT_FALSE(r.skipped);
  EXPECT_EQ(r.affine_dim, 4);
  EXPECT_EQ(r.degree, 4);
  EXPECT_EQ(r.expected_degree, 4);
  EXPECT_EQ(r.stabilizer, 2);
  EXPECT_TRUE(r.pass);
}

TEST(Conjecture, SupportSweepStrictQualifierPasses) {
  const auto r = check_support_conjecture(7, 3, {}, SupportQualifier::MoreThanK);
  EXPECT_FALSE(r.partial);
  EXPECT_TRUE(r.all_pass);
}

TEST(Conjecture, BoundaryPairsReachDimensionK) {
  // |S - S| = K gives K generators in 2K unknowns, so dim >= K by Krull.
  const auto r = check_support_conjecture(5, 3);
  EXPECT_FALSE(r.all_pass);
  for (const auto& p : r.pairs) {
    if (p.pass) continue;
    EXPECT_EQ(difference_multiset(p.first).distinct(), 3);
    EXPECT_EQ(p.affine_dim, 3);
  }
}

TEST(Conjecture, ExpiredDeadlineIsPartial) {
  SweepBudget budget;
  budget.deadline = std::chrono::steady_clock::now();
  EXPECT_TRUE(check_support_conjecture(8, 4, budget).partial);
  EXPECT_TRUE(check_signal_sweep(8, 4, budget).partial);
}
