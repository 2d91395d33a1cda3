#pragma once

#include "phaselab/algebra/polynomial.hpp"
#include "phaselab/core.hpp"
#include "phaselab/measure.hpp"
#include "phaselab/symmetry.hpp"

#include <cstdint>
#include <optional>
#include <variant>

namespace phaselab {

/// y = |A x|^2 rowwise.
struct LinearModel {
  Eigen::MatrixXcd a;
};

/// y = vec(frog(x, hop, indexing)), column-major in (k, m).
struct FrogModel {
  int length = 0;
  int hop = 1;
  FrogIndexing indexing = FrogIndexing::Periodic;
};

/// y = (p_1(x), ..., p_m(x)) for real x; used to land on algebraic sets.
struct PolynomialModel {
  std::vector<algebra::Polynomial> polys;
};

/// r(z) = measure(z) - target. Real unknowns use z = x; complex unknowns use
/// z = (Re x, Im x).
class ResidualMap {
 public:
  using Model = std::variant<LinearModel, FrogModel, PolynomialModel>;

  ResidualMap(Model model, Eigen::VectorXd target, Field unknowns);

  /// Targets taken from a reference signal.
  static ResidualMap linear(const SensingMatrix& a, const Signal& reference);
  static ResidualMap stft(const StftConfig& cfg, const Signal& reference, Field unknowns = Field::Complex);
  static ResidualMap gabor(const Signal& window, const Signal& reference, Field unknowns = Field::Complex);
  static ResidualMap frog(int hop, const Signal& reference, Field unknowns = Field::Complex,
                          FrogIndexing indexing = FrogIndexing::Periodic);

  int signal_length() const;
  int num_unknowns() const;
  /// Degree of the measurements in x (largest degree for polynomial models).
  int degree() const;
  Eigen::Index num_residuals() const { return target_.size(); }
  Field unknowns() const { return unknowns_; }
  const Eigen::VectorXd& target() const { return target_; }

  Eigen::VectorXd coords(const Signal& x) const;
  Signal signal(const Eigen::VectorXd& z) const;

  Eigen::VectorXd measure(const Signal& x) const;
  Eigen::VectorXd residual(const Eigen::VectorXd& z) const;
  Eigen::MatrixXd jacobian(const Eigen::VectorXd& z) const;

 private:
  // Holomorphic derivatives du_m / dx_j of the measured amplitudes u.
  void amplitudes(const Signal& x, Eigen::VectorXcd& u, Eigen::MatrixXcd* du) const;

  Model model_;
  std::vector<std::vector<algebra::Polynomial>> gradients_;  // polynomial models only
  Eigen::VectorXd target_;
  Field unknowns_;
};

struct JacobianDimension {
  int dimension = 0;
  int rank = 0;
  bool ambiguous = false;  ///< a singular value sits within a factor 100 of the threshold
  Eigen::VectorXd singular_values;
};

/// #variables - numerical rank of the generator Jacobian at the point. The
/// rank threshold is rank_tol times the largest singular value.
JacobianDimension jacobian_dimension(const algebra::Ideal& ideal, const Eigen::VectorXd& point,
                                     double rank_tol = 1e-8);

/// The same for incidence_ideal(S, S'); the point lists x over S then y over S'.
JacobianDimension jacobian_dimension(const SupportSet& s, const SupportSet& s_prime,
                                     const Eigen::VectorXd& point, double rank_tol = 1e-8);

/// A point of the ideal's zero set on the unit sphere, found by damped least
/// squares from random starts seeded with (seed, restart). Empty when no
/// restart reaches residual_tol.
std::optional<Eigen::VectorXd> variety_point(const algebra::Ideal& ideal, std::uint64_t seed, int restarts = 20,
                                             double residual_tol = 1e-12);

struct CollisionOptions {
  int restarts = 200;
  std::uint64_t seed = 0;
  int max_iterations = 500;
  double lambda0 = 1e-3;
  double residual_tol = 1e-8;     ///< ||r|| / ||target||
  double equivalence_tol = 1e-6;  ///< passed to orbit_equivalent
  unsigned workers = 0;
};

struct CollisionReport {
  bool found = false;
  Signal candidate;      ///< best non-equivalent solution, when found
  double residual = 0.0;  ///< ||r|| / ||target|| at the candidate
  bool orbit_equivalent = false;
  int restart = -1;
  int converged = 0;             ///< restarts reaching residual_tol
  int equivalent = 0;            ///< converged restarts equivalent to x_ref
  double best_residual = 0.0;    ///< over all restarts
};

/// Result of one damped least-squares descent.
struct DescentResult {
  Eigen::VectorXd z;
  double residual = 0.0;  ///< ||r|| / ||target||
  int iterations = 0;
};

DescentResult levenberg_marquardt(const ResidualMap& map, Eigen::VectorXd z0, int max_iterations = 500,
                                  double lambda0 = 1e-3, double residual_tol = 1e-8);

/// Random restarts of levenberg_marquardt; restart i draws its start from a
/// generator seeded with (seed, i). A candidate is reported only if it is not
/// orbit-equivalent to x_ref under the tagged group.
CollisionReport collision_search(const ResidualMap& map, const Signal& x_ref, GroupTag tag,
                                 const CollisionOptions& options = {});

/// max |J - J_fd| / max |J| with central differences of step h; 0 when both vanish.
double gradcheck(const ResidualMap& map, const Eigen::VectorXd& z0, double h = 1e-6);

}  // namespace phaselab
