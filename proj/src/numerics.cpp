#include "phaselab/numerics.hpp"

#include "phaselab/algebra/incidence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>

namespace phaselab {
namespace {

double relative(double norm, const Eigen::VectorXd& target) {
  const double scale = target.norm();
  return scale > 0.0 ? norm / scale : norm;
}

}  // namespace

ResidualMap::ResidualMap(Model model, Eigen::VectorXd target, Field unknowns)
    : model_(std::move(model)), target_(std::move(target)), unknowns_(unknowns) {
  if (const auto* f = std::get_if<FrogModel>(&model_)) {
    if (f->length < 1 || f->hop < 1) throw std::invalid_argument("ResidualMap: FROG needs N >= 1 and L >= 1");
  }
  if (const auto* p = std::get_if<PolynomialModel>(&model_)) {
    if (p->polys.empty()) throw std::invalid_argument("ResidualMap: empty polynomial system");
    if (unknowns_ != Field::Real) throw std::invalid_argument("ResidualMap: polynomial systems take real unknowns");
    for (const auto& poly : p->polys) {
      if (poly.num_vars() != p->polys.front().num_vars())
        throw std::invalid_argument("ResidualMap: polynomials over different rings");
      auto& g = gradients_.emplace_back();
      for (int v = 0; v < poly.num_vars(); ++v) g.push_back(poly.derivative(v));
    }
  }
  const Eigen::Index produced = measure(Signal::Zero(signal_length())).size();
  if (produced != target_.size())
    throw std::invalid_argument("ResidualMap: target has " + std::to_string(target_.size()) +
                                " entries, model produces " + std::to_string(produced));
}

ResidualMap ResidualMap::linear(const SensingMatrix& a, const Signal& reference) {
  if (a.num_cols() != reference.size()) throw std::invalid_argument("ResidualMap::linear: size mismatch");
  return {LinearModel{a.rows}, phaseless_linear(a, reference), a.field};
}

ResidualMap ResidualMap::stft(const StftConfig& cfg, const Signal& reference, Field unknowns) {
  cfg.validate();
  LinearModel m{stft_sensing_matrix(cfg)};
  Eigen::VectorXd target = (m.a * reference).cwiseAbs2();
  return {std::move(m), std::move(target), unknowns};
}

ResidualMap ResidualMap::gabor(const Signal& window, const Signal& reference, Field unknowns) {
  LinearModel m{gabor_sensing_matrix(window)};
  if (m.a.cols() != reference.size()) throw std::invalid_argument("ResidualMap::gabor: size mismatch");
  Eigen::VectorXd target = (m.a * reference).cwiseAbs2();
  return {std::move(m), std::move(target), unknowns};
}

ResidualMap ResidualMap::frog(int hop, const Signal& reference, Field unknowns, FrogIndexing indexing) {
  const Eigen::MatrixXd y = phaselab::frog(reference, hop, indexing);
  return {FrogModel{static_cast<int>(reference.size()), hop, indexing},
          Eigen::Map<const Eigen::VectorXd>(y.data(), y.size()), unknowns};
}

int ResidualMap::signal_length() const {
  return std::visit(
      [](const auto& m) -> int {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, LinearModel>)
          return static_cast<int>(m.a.cols());
        else if constexpr (std::is_same_v<T, FrogModel>)
          return m.length;
        else
          return m.polys.front().num_vars();
      },
      model_);
}

int ResidualMap::degree() const {
  if (std::holds_alternative<FrogModel>(model_)) return 4;
  if (const auto* p = std::get_if<PolynomialModel>(&model_)) {
    int d = 1;
    for (const auto& poly : p->polys)
      for (const auto& t : poly.terms()) d = std::max(d, t.monomial.degree());
    return d;
  }
  return 2;
}

int ResidualMap::num_unknowns() const { return unknowns_ == Field::Real ? signal_length() : 2 * signal_length(); }

Eigen::VectorXd ResidualMap::coords(const Signal& x) const {
  const int n = signal_length();
  if (x.size() != n) throw std::invalid_argument("ResidualMap::coords: wrong signal length");
  if (unknowns_ == Field::Real) return x.real();
  Eigen::VectorXd z(2 * n);
  z << x.real(), x.imag();
  return z;
}

Signal ResidualMap::signal(const Eigen::VectorXd& z) const {
  const int n = signal_length();
  if (z.size() != num_unknowns()) throw std::invalid_argument("ResidualMap::signal: wrong coordinate count");
  Signal x(n);
  for (int j = 0; j < n; ++j) x(j) = unknowns_ == Field::Real ? Complex(z(j), 0.0) : Complex(z(j), z(n + j));
  return x;
}

void ResidualMap::amplitudes(const Signal& x, Eigen::VectorXcd& u, Eigen::MatrixXcd* du) const {
  if (const auto* lin = std::get_if<LinearModel>(&model_)) {
    u = lin->a * x;
    if (du) *du = lin->a;
    return;
  }
  const auto& f = std::get<FrogModel>(model_);
  const int n = f.length;
  const int delays = n / f.hop + 1;
  u = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n) * delays);
  if (du) *du = Eigen::MatrixXcd::Zero(u.size(), n);
  for (int m = 0; m < delays; ++m) {
    for (int j = 0; j < n; ++j) {
      long long other = j + static_cast<long long>(m) * f.hop;
      if (f.indexing == FrogIndexing::Periodic)
        other %= n;
      else if (other >= n)
        continue;
      const auto p = static_cast<Eigen::Index>(other);
      for (int k = 0; k < n; ++k) {
        const Eigen::Index row = k + static_cast<Eigen::Index>(n) * m;
        const Complex e = unit_root(static_cast<long long>(j) * k, n);
        u(row) += x(j) * x(p) * e;
        if (du) {
          (*du)(row, j) += e * x(p);
          (*du)(row, p) += e * x(j);
        }
      }
    }
  }
}

Eigen::VectorXd ResidualMap::measure(const Signal& x) const {
  if (x.size() != signal_length()) throw std::invalid_argument("ResidualMap::measure: wrong signal length");
  if (const auto* p = std::get_if<PolynomialModel>(&model_)) {
    const Eigen::VectorXd re = x.real();
    const std::span<const double> at(re.data(), static_cast<std::size_t>(re.size()));
    Eigen::VectorXd y(static_cast<Eigen::Index>(p->polys.size()));
    for (std::size_t i = 0; i < p->polys.size(); ++i) y(static_cast<Eigen::Index>(i)) = p->polys[i].evaluate(at);
    return y;
  }
  Eigen::VectorXcd u;
  amplitudes(x, u, nullptr);
  return u.cwiseAbs2();
}

Eigen::VectorXd ResidualMap::residual(const Eigen::VectorXd& z) const { return measure(signal(z)) - target_; }

Eigen::MatrixXd ResidualMap::jacobian(const Eigen::VectorXd& z) const {
  if (!gradients_.empty()) {
    if (z.size() != num_unknowns()) throw std::invalid_argument("ResidualMap::jacobian: wrong coordinate count");
    const std::span<const double> at(z.data(), static_cast<std::size_t>(z.size()));
    Eigen::MatrixXd jac(static_cast<Eigen::Index>(gradients_.size()), z.size());
    for (std::size_t i = 0; i < gradients_.size(); ++i)
      for (std::size_t j = 0; j < gradients_[i].size(); ++j)
        jac(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = gradients_[i][j].evaluate(at);
    return jac;
  }
  const Signal x = signal(z);
  Eigen::VectorXcd u;
  Eigen::MatrixXcd du;
  amplitudes(x, u, &du);
  const int n = signal_length();
  // d|u|^2 / dRe x_j = 2 Re(conj(u) du_j), d|u|^2 / dIm x_j = -2 Im(conj(u) du_j)
  const Eigen::MatrixXcd g = u.conjugate().asDiagonal() * du;
  Eigen::MatrixXd jac(u.size(), num_unknowns());
  jac.leftCols(n) = 2.0 * g.real();
  if (unknowns_ == Field::Complex) jac.rightCols(n) = -2.0 * g.imag();
  return jac;
}

JacobianDimension jacobian_dimension(const algebra::Ideal& ideal, const Eigen::VectorXd& point, double rank_tol) {
  const int nv = ideal.num_vars();
  if (point.size() != nv) throw std::invalid_argument("jacobian_dimension: point has wrong dimension");
  if (!(rank_tol > 0.0)) throw std::invalid_argument("jacobian_dimension: rank_tol must be positive");
  JacobianDimension out;
  const auto rows = static_cast<Eigen::Index>(ideal.generators.size());
  if (rows == 0) {
    out.dimension = nv;
    return out;
  }
  const std::span<const double> at(point.data(), static_cast<std::size_t>(point.size()));
  Eigen::MatrixXd jac(rows, nv);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (int j = 0; j < nv; ++j) jac(i, j) = ideal.generators[static_cast<std::size_t>(i)].derivative(j).evaluate(at);

  out.singular_values = Eigen::JacobiSVD<Eigen::MatrixXd>(jac).singularValues();
  const double top = out.singular_values.size() ? out.singular_values(0) : 0.0;
  const double threshold = rank_tol * top;
  for (double s : out.singular_values) {
    if (top > 0.0 && s > threshold) ++out.rank;
    if (top > 0.0 && s > threshold / 100.0 && s < threshold * 100.0) out.ambiguous = true;
  }
  out.dimension = nv - out.rank;
  return out;
}

JacobianDimension jacobian_dimension(const SupportSet& s, const SupportSet& s_prime, const Eigen::VectorXd& point,
                                     double rank_tol) {
  return jacobian_dimension(algebra::incidence_ideal(s, s_prime), point, rank_tol);
}

DescentResult levenberg_marquardt(const ResidualMap& map, Eigen::VectorXd z0, int max_iterations, double lambda0,
                                  double residual_tol) {
  DescentResult out;
  out.z = std::move(z0);
  Eigen::VectorXd r = map.residual(out.z);
  double cost = r.squaredNorm();
  double lambda = lambda0;
  // Keep iterating well below residual_tol so reported residuals are not borderline.
  const double stop = residual_tol * 1e-4;
  for (; out.iterations < max_iterations; ++out.iterations) {
    if (relative(std::sqrt(cost), map.target()) <= stop) break;
    const Eigen::MatrixXd jac = map.jacobian(out.z);
    const Eigen::MatrixXd jtj = jac.transpose() * jac;
    const Eigen::VectorXd grad = jac.transpose() * r;
    const double floor = 1e-12 * std::max(jtj.diagonal().maxCoeff(), 1e-300);
    bool improved = false;
    while (lambda < 1e20) {
      Eigen::MatrixXd damped = jtj;
      damped.diagonal() += lambda * jtj.diagonal().cwiseMax(floor);
      const Eigen::VectorXd step = damped.ldlt().solve(-grad);
      const Eigen::VectorXd trial = out.z + step;
      const Eigen::VectorXd r_trial = map.residual(trial);
      const double c_trial = r_trial.squaredNorm();
      if (std::isfinite(c_trial) && c_trial < cost) {
        out.z = trial;
        r = r_trial;
        cost = c_trial;
        lambda = std::max(lambda / 10.0, 1e-15);
        improved = true;
        break;
      }
      lambda *= 10.0;
    }
    if (!improved) break;
  }
  out.residual = relative(std::sqrt(cost), map.target());
  return out;
}

std::optional<Eigen::VectorXd> variety_point(const algebra::Ideal& ideal, std::uint64_t seed, int restarts,
                                             double residual_tol) {
  const int nv = ideal.num_vars();
  if (nv == 0) throw std::invalid_argument("variety_point: ideal has no variables");
  PolynomialModel model{ideal.generators};
  std::vector<algebra::Term> sphere;
  for (int v = 0; v < nv; ++v) {
    algebra::Monomial m(nv);
    m.set(v, 2);
    sphere.push_back({m, algebra::Rational(1)});
  }
  model.polys.emplace_back(nv, std::move(sphere));
  Eigen::VectorXd target = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(model.polys.size()));
  target(target.size() - 1) = 1.0;
  const ResidualMap map(std::move(model), std::move(target), Field::Real);

  for (int i = 0; i < restarts; ++i) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(i)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal;
    Eigen::VectorXd z(nv);
    for (auto& v : z) v = normal(rng);
    z.normalize();
    const auto d = levenberg_marquardt(map, z, 500, 1e-3, residual_tol);
    if (d.residual < residual_tol) return d.z;
  }
  return std::nullopt;
}

CollisionReport collision_search(const ResidualMap& map, const Signal& x_ref, GroupTag tag,
                                 const CollisionOptions& options) {
  if (options.restarts < 1) throw std::invalid_argument("collision_search: restarts must be >= 1");
  if (x_ref.size() != map.signal_length()) throw std::invalid_argument("collision_search: x_ref has wrong length");

  struct Outcome {
    DescentResult descent;
    bool equivalent = false;
  };
  const auto restarts = static_cast<std::size_t>(options.restarts);
  std::vector<Outcome> outcomes(restarts);
  const double target_norm = map.target().norm();

  parallel_for(
      restarts,
      [&](std::size_t i) {
        std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                          static_cast<std::uint32_t>(i)};
        std::mt19937_64 rng(seq);
        std::normal_distribution<double> normal;
        Eigen::VectorXd z(map.num_unknowns());
        for (auto& v : z) v = normal(rng);
        // Scale the start so its measurements have the target's norm.
        const double m = map.measure(map.signal(z)).norm();
        if (m > 0.0 && target_norm > 0.0) {
          z *= std::pow(target_norm / m, 1.0 / map.degree());
        }
        Outcome& o = outcomes[i];
        o.descent = levenberg_marquardt(map, z, options.max_iterations, options.lambda0, options.residual_tol);
        if (o.descent.residual < options.residual_tol)
          o.equivalent = orbit_equivalent(x_ref, map.signal(o.descent.z), tag, options.equivalence_tol).equivalent;
      },
      options.workers);

  CollisionReport report;
  report.best_residual = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < restarts; ++i) {
    const Outcome& o = outcomes[i];
    report.best_residual = std::min(report.best_residual, o.descent.residual);
    if (o.descent.residual >= options.residual_tol) continue;
    ++report.converged;
    if (o.equivalent) {
      ++report.equivalent;
      continue;
    }
    // Strict comparison keeps the lowest restart index on ties.
    if (!report.found || o.descent.residual < report.residual) {
      report.found = true;
      report.candidate = map.signal(o.descent.z);
      report.residual = o.descent.residual;
      report.restart = static_cast<int>(i);
    }
  }
  return report;
}

double gradcheck(const ResidualMap& map, const Eigen::VectorXd& z0, double h) {
  if (!(h >= 1e-7 && h <= 1e-4)) throw std::invalid_argument("gradcheck: h must lie in [1e-7, 1e-4]");
  if (z0.size() != map.num_unknowns()) throw std::invalid_argument("gradcheck: z0 has wrong dimension");
  const Eigen::MatrixXd analytic = map.jacobian(z0);
  Eigen::MatrixXd numeric(analytic.rows(), analytic.cols());
  for (Eigen::Index j = 0; j < z0.size(); ++j) {
    Eigen::VectorXd plus = z0, minus = z0;
    plus(j) += h;
    minus(j) -= h;
    numeric.col(j) = (map.residual(plus) - map.residual(minus)) / (2.0 * h);
  }
  const double scale = std::max(analytic.norm(), numeric.norm());
  return scale > 0.0 ? (analytic - numeric).norm() / scale : 0.0;
}

}  // namespace phaselab
