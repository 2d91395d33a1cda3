#include "phaselab/selftest.hpp"

#include "phaselab/algebra/conjecture.hpp"
#include "phaselab/algebra/hilbert.hpp"
#include "phaselab/algebra/incidence.hpp"
#include "phaselab/ambiguity.hpp"
#include "phaselab/combinat.hpp"
#include "phaselab/measure.hpp"
#include "phaselab/numerics.hpp"
#include "phaselab/symmetry.hpp"

#include <algorithm>
#include <iomanip>
#include <random>
#include <sstream>

namespace phaselab {
namespace {

template <typename Vec>
std::string join(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(v.size()); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string scientific(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << v;
  return os.str();
}

std::string complex_string(Complex c) {
  // Round-off below 1e-12 is shown as zero.
  if (std::abs(c.real()) < 1e-12) c.real(0.0);
  if (std::abs(c.imag()) < 1e-12) c.imag(0.0);
  std::ostringstream os;
  os << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << 'i';
  return os.str();
}

std::string roots_string(const std::vector<Complex>& roots) {
  std::string s = "{";
  for (std::size_t i = 0; i < roots.size(); ++i) s += (i ? ", " : "") + complex_string(roots[i]);
  return s + "}";
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

bool same_generators(const algebra::Ideal& ideal, const std::vector<std::string>& expected) {
  if (ideal.generators.size() != expected.size()) return false;
  for (const auto& text : expected) {
    const auto p = algebra::parse_polynomial(text, ideal.variables);
    const bool hit = std::any_of(ideal.generators.begin(), ideal.generators.end(),
                                 [&](const algebra::Polynomial& g) { return g == p || g == -p; });
    if (!hit) return false;
  }
  return true;
}

class Suite {
 public:
  void check(std::string name, std::string expected, std::string actual, bool pass) {
    cases_.push_back({std::move(name), std::move(expected), std::move(actual), pass});
  }
  void check_eq(std::string name, const std::string& expected, const std::string& actual) {
    check(std::move(name), expected, actual, expected == actual);
  }
  std::vector<SelftestCase> take() { return std::move(cases_); }

 private:
  std::vector<SelftestCase> cases_;
};

}  // namespace

Eigen::MatrixXd example_matrix_5x3() {
  Eigen::MatrixXd a(5, 3);
  a << 1, 2, 3, 1, -1, 1, 2, 1, 4, 1, 2, 1, 2, -1, 1;
  return a;
}

std::vector<Signal> fourier_example_signals() {
  using C = Complex;
  Signal x1(4), x2(4), x3(4), x4(4);
  x1 << 4.5, 9.0, 0.5, 1.0;
  x2 << 1.5, C(3, 4), C(1.5, 8), 3.0;
  x3 << 1.5, C(3, -4), C(1.5, -8), 3.0;
  x4 << 9.0, 4.5, 1.0, 0.5;
  return {x1, x2, x3, x4};
}

std::vector<SelftestCase> run_selftest(const Tolerances& tol) {
  tol.validate();
  Suite suite;
  using C = Complex;

  // Complement-property counterexample.
  const Eigen::MatrixXd a = example_matrix_5x3();
  const Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic> ai = a.cast<long long>();
  Eigen::Matrix<long long, 3, 1> xi, yi;
  xi << 1, 1, 9;
  yi << 19, 7, -21;
  const auto yx = phaseless_linear(ai, xi);
  const auto yy = phaseless_linear(ai, yi);
  suite.check_eq("5x3: |Ax|^2 for x=(1,1,9)", "(900,81,1521,144,100)", join(yx));
  suite.check_eq("5x3: |Ay|^2 equals |Ax|^2", join(yx), join(yy));
  const Signal x = from_real({1, 1, 9});
  const Signal y = from_real({19, 7, -21});
  suite.check_eq("5x3: y is not +-x", "false",
                 orbit_equivalent(x, y, GroupTag::Sign, tol.eq_tol).equivalent ? "true" : "false");
  const auto comp = complement_property(a, tol);
  suite.check_eq("5x3: complement property", "false witness (1,2,3)",
                 std::string(comp.holds ? "true" : "false") + (comp.holds ? "" : " witness " + join(comp.witness)));
  {
    const auto map = ResidualMap::linear(SensingMatrix::real(a), x);
    CollisionOptions opts;
    opts.restarts = 200;
    const auto report = collision_search(map, x, GroupTag::Sign, opts);
    const bool hit = report.found && report.residual < 1e-8 &&
                     orbit_equivalent(report.candidate, y, GroupTag::Sign, 1e-6).equivalent;
    suite.check("5x3: collision search finds +-(19,7,-21)", "found, residual < 1e-8",
                report.found ? "found " + join(report.candidate.real()) + " residual " +
                                   scientific(report.residual)
                             : "not found",
                hit);
  }

  // Fourier-intensity quadruple.
  const auto xs = fourier_example_signals();
  Signal shared(4);
  shared << 102.5, 45.5, 11.25, 4.5;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Signal acf = aperiodic_autocorr(xs[i]);
    suite.check("aperiodic autocorrelation of x" + std::to_string(i + 1), join(shared.real()), join(acf.real()),
                relative_distance(acf, shared) <= tol.eq_tol);
  }
  const std::vector<std::vector<Complex>> expected_roots = {
      {C(0, 3), C(0, -3), C(-0.5, 0)},
      {C(0, 1.0 / 3), C(0, -3), C(-0.5, 0)},
      {C(0, 3), C(0, -1.0 / 3), C(-0.5, 0)},
      {C(0, 3), C(0, -3), C(-2, 0)},
  };
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const auto roots = poly_roots(xs[i]).roots;
    suite.check("roots of x" + std::to_string(i + 1), roots_string(expected_roots[i]), roots_string(roots),
                same_roots(roots, expected_roots[i], tol.eq_tol));
  }
  {
    const RootSet roots = poly_roots(xs[0]);
    const auto it = std::min_element(roots.roots.begin(), roots.roots.end(), [](Complex p, Complex q) {
      return std::abs(p - C(0, 3)) < std::abs(q - C(0, 3));
    });
    const Signal flipped = flip(xs[0], roots, {static_cast<int>(it - roots.roots.begin())});
    const auto m = orbit_equivalent(flipped, xs[1], GroupTag::Phase, 1e-7);
    suite.check("flipping 3i in x1 gives x2 up to phase", "equivalent",
                "residual " + scientific(m.residual), m.equivalent);
  }
  {
    const auto report = enumerate_ambiguities(xs[0]);
    std::vector<int> hits(xs.size(), 0);
    bool one_each = true;
    for (const auto& rep : report.representatives) {
      int matches = 0;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (orbit_equivalent(rep, xs[i], GroupTag::PhaseConjReflect, 1e-7).equivalent) {
          ++matches;
          ++hits[i];
        }
      }
      one_each = one_each && matches == 1;
    }
    one_each = one_each && std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
    suite.check("ambiguity classes of x1", "4 classes, one per x1..x4",
                std::to_string(report.representatives.size()) + " classes, matches " + join(hits),
                report.representatives.size() == 4 && one_each);
  }

  // Difference multisets and the N=8 collision.
  suite.check_eq("difference multiset of {0,1,2,4} mod 8", "(4,2,2,1,1)",
                 join(difference_multiset(SupportSet({0, 1, 2, 4}, 8)).counts));
  const SupportSet s1({0, 1, 3, 4}, 8);
  const SupportSet s2({0, 1, 2, 5}, 8);
  suite.check_eq("difference multiset of {0,1,3,4} mod 8", "{0^4,1^2,2^1,3^2,4^1}",
                 difference_multiset(s1).to_string());
  suite.check_eq("difference multiset of {0,1,2,5} mod 8", "{0^4,1^2,2^1,3^2,4^1}",
                 difference_multiset(s2).to_string());
  suite.check_eq("{0,1,3,4} and {0,1,2,5} are not dihedrally equivalent", "false",
                 dihedral_canonical(s1) == dihedral_canonical(s2) ? "true" : "false");
  {
    const auto census = collision_census(8, 4);
    const auto c1 = dihedral_canonical(s1);
    const auto c2 = dihedral_canonical(s2);
    bool found = false;
    for (const auto& g : census.groups) {
      const bool has1 = std::find(g.classes.begin(), g.classes.end(), c1) != g.classes.end();
      const bool has2 = std::find(g.classes.begin(), g.classes.end(), c2) != g.classes.end();
      found = found || (has1 && has2);
    }
    suite.check("census N=8 K=4 lists ({0,1,3,4},{0,1,2,5})", "listed",
                std::to_string(census.groups.size()) + " collision groups", found);
  }
  suite.check_eq("stabilizer of {0,1,2,5} mod 8", "2", std::to_string(stabilizer_order(s2)));

  // Incidence ideals and Hilbert polynomials.
  const SupportSet s0({0, 1, 2, 4}, 8);
  const auto ideal4 = algebra::incidence_ideal(s0, s2);
  suite.check("incidence ideal ({0,1,2,4},{0,1,2,5})", "five quadrics", ideal4.to_string(),
              same_generators(ideal4, {"x0^2+x1^2+x2^2+x4^2-y0^2-y1^2-y2^2-y5^2", "x0*x1+x1*x2-y0*y1-y1*y2",
                                       "x0*x2+x2*x4-y0*y2", "x1*x4-y2*y5-y5*y0", "x0*x4-y1*y5"}));
  const auto ideal5 = algebra::incidence_ideal(s2, s2);
  suite.check("incidence ideal ({0,1,2,5},{0,1,2,5})", "five quadrics", ideal5.to_string(),
              same_generators(ideal5, {"x0^2+x1^2+x2^2+x5^2-y0^2-y1^2-y2^2-y5^2", "x0*x1+x1*x2-y0*y1-y1*y2",
                                       "x0*x2-y0*y2", "x2*x5+x5*x0-y2*y5-y5*y0", "x1*x5-y1*y5"}));
  const auto hp4 = algebra::hilbert_polynomial(ideal4);
  suite.check_eq("Hilbert polynomial, S != S'", "32P2 - 80P1 + 80P0", hp4.to_string());
  suite.check_eq("affine dimension, S != S'", "3", std::to_string(hp4.affine_dimension()));
  const auto hp5 = algebra::hilbert_polynomial(ideal5);
  suite.check_eq("Hilbert polynomial, S = S'", "4P3 + 10P2 - 30P1 + 20P0", hp5.to_string());
  const auto sig = algebra::check_signal_conjecture(s2);
  suite.check_eq("signal conjecture for {0,1,2,5} mod 8", "dim 4 degree 4 expected 4 pass",
                 "dim " + std::to_string(sig.affine_dim) + " degree " + std::to_string(sig.degree) + " expected " +
                     std::to_string(sig.expected_degree) + (sig.pass ? " pass" : " fail"));

  // Full Gabor frame: no collision beyond global phase.
  {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> normal;
    Signal w(4), x0(4);
    for (auto& v : w) v = C(normal(rng), normal(rng));
    for (auto& v : x0) v = C(normal(rng), normal(rng));
    const auto map = ResidualMap::gabor(w, x0);
    CollisionOptions opts;
    opts.restarts = 20;
    const auto report = collision_search(map, x0, GroupTag::Phase, opts);
    suite.check("full Gabor frame N=4: no collision", "none",
                report.found ? "collision, residual " + scientific(report.residual)
                             : "none (" + std::to_string(report.converged) + " converged restarts)",
                !report.found && report.converged > 0);
  }
  return suite.take();
}

}  // namespace phaselab
