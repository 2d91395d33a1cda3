#pragma once

#include <Eigen/Dense>

#include <complex>
#include <compare>
#include <cstddef>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace phaselab {

using Complex = std::complex<double>;
using Signal = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Raised when a computation cannot finish: a budget was exceeded or an
/// iteration did not converge. Bad arguments use std::invalid_argument.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Tolerances {
  double eq_tol = 1e-9;
  double rank_tol = 1e-8;

  void validate() const {
    if (!(eq_tol > 0.0) || !(rank_tol > 0.0))
      throw std::invalid_argument("tolerances must be strictly positive");
  }
};

/// Throws std::invalid_argument on an empty or non-finite signal.
void require_signal(const Signal& x, const char* what = "signal");

/// Builds a complex signal from real entries.
Signal from_real(const std::vector<double>& re);

/// Sorted, duplicate-free subset of [0, N-1].
class SupportSet {
 public:
  SupportSet() = default;
  SupportSet(std::vector<int> indices, int modulus);

  const std::vector<int>& indices() const { return indices_; }
  int modulus() const { return modulus_; }
  std::size_t size() const { return indices_.size(); }
  bool contains(int i) const;

  /// 0/1 signal of length N.
  Signal indicator() const;

  auto operator<=>(const SupportSet&) const = default;
  bool operator==(const SupportSet&) const = default;

  std::string to_string() const;

 private:
  std::vector<int> indices_;
  int modulus_ = 0;
};

/// e^{-2 pi i k / N}, the DFT kernel root raised to the k-th power.
inline Complex unit_root(long long k, long long n) {
  const long long r = ((k % n) + n) % n;
  const double angle = -2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

/// Plain-sum DFT: X[k] = sum_n x[n] w^{nk}, w = e^{-2 pi i / N}. No scaling.
template <typename Derived>
Signal dft(const Eigen::MatrixBase<Derived>& x) {
  const Eigen::Index n = x.size();
  Signal out = Signal::Zero(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Complex acc{0.0, 0.0};
    for (Eigen::Index j = 0; j < n; ++j)
      acc += Complex(x(j)) * unit_root(static_cast<long long>(j) * k, n);
    out(k) = acc;
  }
  return out;
}

/// Inverse of dft, including the 1/N factor.
template <typename Derived>
Signal idft(const Eigen::MatrixBase<Derived>& xhat) {
  const Eigen::Index n = xhat.size();
  Signal out = Signal::Zero(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    Complex acc{0.0, 0.0};
    for (Eigen::Index k = 0; k < n; ++k)
      acc += Complex(xhat(k)) * std::conj(unit_root(static_cast<long long>(j) * k, n));
    out(j) = acc / static_cast<double>(n);
  }
  return out;
}

/// sum_n x[n] w^n by Horner's rule. Any w, on or off the unit circle.
template <typename Derived>
Complex poly_eval(const Eigen::MatrixBase<Derived>& x, Complex w) {
  Complex acc{0.0, 0.0};
  for (Eigen::Index j = x.size(); j-- > 0;) acc = acc * w + Complex(x(j));
  return acc;
}

/// Relative distance ||a - b|| / max(||a||, ||b||), zero when both vanish.
template <typename A, typename B>
double relative_distance(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  const double scale = std::max(a.norm(), b.norm());
  if (scale == 0.0) return 0.0;
  return (a - b).norm() / scale;
}

/// Runs body(i) for i in [0, count) on up to `workers` threads.
/// workers == 0 picks hardware concurrency. Results must be written by index.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                  unsigned workers = 0);

}  // namespace phaselab
