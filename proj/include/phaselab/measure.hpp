#pragma once

#include "phaselab/core.hpp"

#include <numeric>
#include <vector>

namespace phaselab {

enum class Field { Real, Complex };

/// M x N sensing matrix. Real matrices are stored with zero imaginary part.
struct SensingMatrix {
  Eigen::MatrixXcd rows;
  Field field = Field::Complex;

  static SensingMatrix real(const Eigen::MatrixXd& a);
  static SensingMatrix complex(const Eigen::MatrixXcd& a);

  Eigen::Index num_rows() const { return rows.rows(); }
  Eigen::Index num_cols() const { return rows.cols(); }
  Eigen::MatrixXd real_part() const { return rows.real(); }
};

/// Periodic STFT geometry: ambient length N, hop L, window of length W <= N.
/// The window is zero beyond W and every index is reduced mod N.
struct StftConfig {
  Signal window;
  int length = 0;
  int hop = 1;

  int sections() const { return length / std::gcd(length, hop); }  // R
  int alpha() const { return std::gcd(hop, length); }
  void validate() const;
  /// w[m mod N] with zero extension past W.
  Complex window_at(long long m) const;
};

// y[m] = |<row_m, x>|^2. Templated so integer inputs stay exact.
template <typename MatA, typename VecX>
auto phaseless_linear(const Eigen::MatrixBase<MatA>& a, const Eigen::MatrixBase<VecX>& x) {
  if (a.cols() != x.size())
    throw std::invalid_argument("phaseless_linear: matrix has " + std::to_string(a.cols()) +
                                " columns but signal has length " + std::to_string(x.size()));
  return (a * x).cwiseAbs2().eval();
}

Eigen::VectorXd phaseless_linear(const SensingMatrix& a, const Signal& x);

/// a[l] = sum_n x[n] conj(x[(n + l) mod N]) for all N lags.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> periodic_autocorr(
    const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = x.size();
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> a(n);
  for (Eigen::Index lag = 0; lag < n; ++lag) {
    Scalar acc(0);
    for (Eigen::Index j = 0; j < n; ++j) acc += x(j) * Eigen::numext::conj(x((j + lag) % n));
    a(lag) = acc;
  }
  return a;
}

/// Lags 0..floor(N/2) of periodic_autocorr, raw values.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> periodic_autocorr_reduced(
    const Eigen::MatrixBase<Derived>& x) {
  return periodic_autocorr(x).head(x.size() / 2 + 1);
}

/// Truncated lag sums: a~[l] = sum_{n < N - l} x[n] conj(x[n + l]).
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> aperiodic_autocorr(
    const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = x.size();
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> a(n);
  for (Eigen::Index lag = 0; lag < n; ++lag) {
    Scalar acc(0);
    for (Eigen::Index j = 0; j + lag < n; ++j) acc += x(j) * Eigen::numext::conj(x(j + lag));
    a(lag) = acc;
  }
  return a;
}

/// A_x(w) = |xhat(w)|^2 at w = e^{-i theta}, so theta = 2 pi k / N hits DFT bin k.
double fourier_intensity(const Signal& x, double theta);

/// Same quantity from the two-sided autocorrelation sum over lags -(N-1)..N-1.
double fourier_intensity_from_autocorr(const Signal& aperiodic, double theta);

/// Complex N x R array Y[k, r] = sum_n x[n] w[rL - n] e^{-2 pi i n k / N}.
Eigen::MatrixXcd blind_stft(const Signal& x, const Signal& window, const StftConfig& cfg);

/// |blind_stft(x, cfg.window, cfg)| entrywise.
Eigen::MatrixXd stft_phaseless(const Signal& x, const StftConfig& cfg);

/// Stacked F D_r rows (row k + N r) so that |A x| = vec(stft_phaseless).
Eigen::MatrixXcd stft_sensing_matrix(const StftConfig& cfg);

/// All N^2 Gabor vectors g_{l,p}[n] = w[(n + p) mod N] e^{-2 pi i l n / N},
/// ordered by index l * N + p.
std::vector<Signal> gabor_frame(const Signal& w);

/// The Gabor vectors as rows; measurements are |A x| with A x = sum_n g[n] x[n].
Eigen::MatrixXcd gabor_sensing_matrix(const Signal& w);

enum class FrogIndexing {
  Periodic,   ///< x[(n + mL) mod N]
  Aperiodic,  ///< x[n + mL] = 0 when n + mL >= N
};

/// FROG trace y[k, m] = |sum_n x[n] x[n + mL] e^{-2 pi i n k / N}|^2,
/// k in [0, N-1], m in [0, floor(N/L)].
Eigen::MatrixXd frog(const Signal& x, int hop, FrogIndexing indexing = FrogIndexing::Periodic);

/// Keeps DFT bins first..first+band-1 (mod N) and zeroes the rest.
Signal band_limit(const Signal& x, int first_bin, int band);

}  // namespace phaselab
