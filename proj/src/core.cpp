#include "phaselab/core.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace phaselab {

void require_signal(const Signal& x, const char* what) {
  if (x.size() == 0) throw std::invalid_argument(std::string(what) + " must be nonempty");
  if (!x.allFinite()) throw std::invalid_argument(std::string(what) + " has non-finite entries");
}

Signal from_real(const std::vector<double>& re) {
  Signal x(static_cast<Eigen::Index>(re.size()));
  for (std::size_t i = 0; i < re.size(); ++i) x(static_cast<Eigen::Index>(i)) = re[i];
  return x;
}

SupportSet::SupportSet(std::vector<int> indices, int modulus)
    : indices_(std::move(indices)), modulus_(modulus) {
  if (modulus_ < 1) throw std::invalid_argument("support modulus must be >= 1");
  if (indices_.empty()) throw std::invalid_argument("support set must be nonempty");
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end())
    throw std::invalid_argument("support set has duplicate indices");
  if (indices_.front() < 0 || indices_.back() >= modulus_)
    throw std::invalid_argument("support index out of range [0, N-1]");
}

bool SupportSet::contains(int i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

Signal SupportSet::indicator() const {
  Signal x = Signal::Zero(modulus_);
  for (int i : indices_) x(i) = 1.0;
  return x;
}

std::string SupportSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < indices_.size(); ++i) os << (i ? "," : "") << indices_[i];
  os << "} mod " << modulus_;
  return os.str();
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                  unsigned workers) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace phaselab
