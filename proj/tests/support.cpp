#include "support.hpp"

#include <unsupported/Eigen/FFT>

#include <functional>

namespace phaselab::fixtures {

Signal random_complex(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> normal;
  Signal x(n);
  for (auto& v : x) v = Complex(normal(rng), normal(rng));
  return x;
}

Signal random_real(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> normal;
  Signal x(n);
  for (auto& v : x) v = Complex(normal(rng), 0.0);
  return x;
}

Eigen::MatrixXd random_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols) {
  std::normal_distribution<double> normal;
  Eigen::MatrixXd a(rows, cols);
  for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = normal(rng);
  return a;
}

Signal fft(const Signal& x) {
  if (x.size() == 1) return x;  // kissfft crashes on length 1
  Eigen::FFT<double> engine;
  std::vector<Complex> in(x.data(), x.data() + x.size()), out;
  engine.fwd(out, in);
  return Eigen::Map<Signal>(out.data(), static_cast<Eigen::Index>(out.size()));
}

long long count_standard_monomials(const std::vector<std::vector<int>>& lead, int num_vars, int t) {
  std::vector<int> e(static_cast<std::size_t>(num_vars), 0);
  long long count = 0;
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == num_vars - 1) {
      e[static_cast<std::size_t>(var)] = left;
      for (const auto& m : lead) {
        bool divides = true;
        for (int i = 0; i < num_vars && divides; ++i) divides = m[static_cast<std::size_t>(i)] <= e[static_cast<std::size_t>(i)];
        if (divides) return;
      }
      ++count;
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[static_cast<std::size_t>(var)] = k;
      rec(var + 1, left - k);
    }
  };
  rec(0, t);
  return count;
}

}  // namespace phaselab::fixtures
