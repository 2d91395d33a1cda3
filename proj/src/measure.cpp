#include "phaselab/measure.hpp"

namespace phaselab {

SensingMatrix SensingMatrix::real(const Eigen::MatrixXd& a) {
  if (a.size() == 0 || !a.allFinite()) throw std::invalid_argument("sensing matrix must be nonempty and finite");
  return {a.cast<Complex>(), Field::Real};
}

SensingMatrix SensingMatrix::complex(const Eigen::MatrixXcd& a) {
  if (a.size() == 0 || !a.allFinite()) throw std::invalid_argument("sensing matrix must be nonempty and finite");
  return {a, Field::Complex};
}

Eigen::VectorXd phaseless_linear(const SensingMatrix& a, const Signal& x) {
  return phaseless_linear(a.rows, x);
}

void StftConfig::validate() const {
  if (length < 1) throw std::invalid_argument("STFT length N must be >= 1");
  if (hop < 1) throw std::invalid_argument("STFT hop L must be >= 1");
  if (window.size() < 1 || window.size() > length)
    throw std::invalid_argument("STFT window length W must satisfy 1 <= W <= N");
  require_signal(window, "window");
}

Complex StftConfig::window_at(long long m) const {
  const long long r = ((m % length) + length) % length;
  return r < window.size() ? window(static_cast<Eigen::Index>(r)) : Complex{0.0, 0.0};
}

double fourier_intensity(const Signal& x, double theta) {
  return std::norm(poly_eval(x, std::polar(1.0, -theta)));
}

double fourier_intensity_from_autocorr(const Signal& aperiodic, double theta) {
  // On |w| = 1: A(w) = a~[0] + sum_{l>0} (a~[l] w^{-l} + conj(a~[l]) w^l).
  const Complex w = std::polar(1.0, -theta);
  Complex acc = aperiodic(0);
  for (Eigen::Index lag = 1; lag < aperiodic.size(); ++lag) {
    const Complex wl = std::pow(w, static_cast<double>(lag));
    acc += aperiodic(lag) * std::conj(wl) + std::conj(aperiodic(lag)) * wl;
  }
  return acc.real();
}

Eigen::MatrixXcd blind_stft(const Signal& x, const Signal& window, const StftConfig& cfg) {
  StftConfig geometry{window, cfg.length, cfg.hop};
  geometry.validate();
  if (x.size() != cfg.length) throw std::invalid_argument("blind_stft: signal length must equal N");
  const int n = cfg.length;
  const int sections = geometry.sections();
  Eigen::MatrixXcd y(n, sections);
  for (int r = 0; r < sections; ++r) {
    for (int k = 0; k < n; ++k) {
      Complex acc{0.0, 0.0};
      for (int j = 0; j < n; ++j)
        acc += x(j) * geometry.window_at(static_cast<long long>(r) * cfg.hop - j) *
               unit_root(static_cast<long long>(j) * k, n);
      y(k, r) = acc;
    }
  }
  return y;
}

Eigen::MatrixXd stft_phaseless(const Signal& x, const StftConfig& cfg) {
  return blind_stft(x, cfg.window, cfg).cwiseAbs();
}

Eigen::MatrixXcd stft_sensing_matrix(const StftConfig& cfg) {
  cfg.validate();
  const int n = cfg.length;
  const int sections = cfg.sections();
  Eigen::MatrixXcd a(static_cast<Eigen::Index>(n) * sections, n);
  for (int r = 0; r < sections; ++r)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j)
        a(k + static_cast<Eigen::Index>(n) * r, j) =
            cfg.window_at(static_cast<long long>(r) * cfg.hop - j) * unit_root(static_cast<long long>(j) * k, n);
  return a;
}

std::vector<Signal> gabor_frame(const Signal& w) {
  require_signal(w, "Gabor window");
  const Eigen::Index n = w.size();
  std::vector<Signal> frame;
  frame.reserve(static_cast<std::size_t>(n * n));
  for (Eigen::Index l = 0; l < n; ++l) {
    for (Eigen::Index p = 0; p < n; ++p) {
      Signal g(n);
      for (Eigen::Index j = 0; j < n; ++j) g(j) = w((j + p) % n) * unit_root(l * j, n);
      frame.push_back(std::move(g));
    }
  }
  return frame;
}

Eigen::MatrixXcd gabor_sensing_matrix(const Signal& w) {
  const auto frame = gabor_frame(w);
  Eigen::MatrixXcd a(static_cast<Eigen::Index>(frame.size()), w.size());
  for (std::size_t i = 0; i < frame.size(); ++i) a.row(static_cast<Eigen::Index>(i)) = frame[i].transpose();
  return a;
}

Eigen::MatrixXd frog(const Signal& x, int hop, FrogIndexing indexing) {
  require_signal(x);
  if (hop < 1) throw std::invalid_argument("frog: hop L must be >= 1");
  const Eigen::Index n = x.size();
  const Eigen::Index delays = n / hop + 1;
  Eigen::MatrixXd y(n, delays);
  for (Eigen::Index m = 0; m < delays; ++m) {
    Signal product = Signal::Zero(n);
    for (Eigen::Index j = 0; j < n; ++j) {
      Eigen::Index other = j + m * hop;
      if (indexing == FrogIndexing::Periodic)
        other %= n;
      else if (other >= n)
        continue;
      product(j) = x(j) * x(other);
    }
    y.col(m) = dft(product).cwiseAbs2();
  }
  return y;
}

Signal band_limit(const Signal& x, int first_bin, int band) {
  require_signal(x);
  const Eigen::Index n = x.size();
  if (band < 1 || band > n) throw std::invalid_argument("band_limit: band must be in [1, N]");
  Signal spectrum = dft(x);
  Signal kept = Signal::Zero(n);
  for (int b = 0; b < band; ++b) {
    const Eigen::Index k = ((first_bin + b) % n + n) % n;
    kept(k) = spectrum(k);
  }
  return idft(kept);
}

}  // namespace phaselab
