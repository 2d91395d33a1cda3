#include "phaselab/combinat.hpp"

#include "phaselab/measure.hpp"
#include "phaselab/symmetry.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <sstream>

namespace phaselab {

int DiffMultiset::distinct() const {
  return static_cast<int>(std::count_if(counts.begin(), counts.end(), [](int c) { return c > 0; }));
}

int DiffMultiset::total() const {
  int t = 0;
  for (int c : counts) t += c;
  return t;
}

std::string DiffMultiset::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (std::size_t d = 0; d < counts.size(); ++d) {
    if (counts[d] == 0) continue;
    os << (first ? "" : ",") << d << '^' << counts[d];
    first = false;
  }
  os << '}';
  return os.str();
}

DiffMultiset difference_multiset(const SupportSet& s) {
  const int n = s.modulus();
  DiffMultiset m{n, std::vector<int>(static_cast<std::size_t>(n / 2 + 1), 0)};
  const auto& idx = s.indices();
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i; j < idx.size(); ++j) {
      const int d = ((idx[j] - idx[i]) % n + n) % n;
      ++m.counts[static_cast<std::size_t>(std::min(d, n - d))];
    }
  return m;
}

Eigen::VectorXd folded_autocorr(const Eigen::VectorXd& x) {
  const Eigen::Index n = x.size();
  Eigen::VectorXd a = periodic_autocorr_reduced(x);
  if (n % 2 == 0 && n > 0) a(n / 2) /= 2.0;
  return a;
}

SupportSet dihedral_canonical(const SupportSet& s) {
  const auto orbit = dihedral_orbit(s);
  // SupportSet orders by indices first, so begin() is the lexicographic minimum.
  return *orbit.begin();
}

namespace {

// Returns false when the cap stopped the enumeration early.
bool enumerate_classes(int n, int k, std::size_t max_classes, std::vector<SupportSet>& classes) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("dihedral_classes: need 1 <= K <= N");
  std::vector<int> combo(static_cast<std::size_t>(k));
  // Canonical forms contain 0 (shifting the minimum to 0 is lexicographically smaller).
  combo[0] = 0;
  for (int i = 1; i < k; ++i) combo[static_cast<std::size_t>(i)] = i;
  while (true) {
    SupportSet s(combo, n);
    if (dihedral_canonical(s) == s) {
      if (max_classes != 0 && classes.size() >= max_classes) return false;
      classes.push_back(std::move(s));
    }
    // next combination of positions 1..k-1 with combo[0] = 0
    int i = k - 1;
    while (i >= 1 && combo[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 1) break;
    ++combo[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
  }
  return true;
}

}  // namespace

std::vector<SupportSet> dihedral_classes(int n, int k, std::size_t max_classes) {
  std::vector<SupportSet> classes;
  if (!enumerate_classes(n, k, max_classes, classes))
    throw ComputationError("dihedral_classes: class budget of " + std::to_string(max_classes) + " exceeded");
  return classes;
}

CensusReport collision_census(int n, int k, std::size_t max_classes) {
  CensusReport report;
  report.n = n;
  report.k = k;
  std::vector<SupportSet> classes;
  report.partial = !enumerate_classes(n, k, max_classes, classes);
  report.num_classes = classes.size();

  std::vector<DiffMultiset> keys(classes.size());
  parallel_for(classes.size(), [&](std::size_t i) { keys[i] = difference_multiset(classes[i]); });

  std::map<DiffMultiset, std::vector<SupportSet>> by_multiset;
  for (std::size_t i = 0; i < classes.size(); ++i) by_multiset[keys[i]].push_back(classes[i]);

  for (auto& [multiset, members] : by_multiset) {
    if (members.size() < 2) continue;
    report.num_colliding_classes += members.size();
    report.num_colliding_pairs += members.size() * (members.size() - 1) / 2;
    report.groups.push_back({multiset, members});
  }
  report.proportion = report.num_classes == 0
                          ? 0.0
                          : static_cast<double>(report.num_colliding_classes) / static_cast<double>(report.num_classes);
  return report;
}

namespace {

bool all_integral(const Eigen::MatrixXd& a) {
  return a.unaryExpr([](double v) { return std::trunc(v) == v && std::abs(v) < 9.0e15; }).all();
}

int exact_rank(std::vector<std::vector<mpq_class>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int rank = 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows.size(); ++c) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
    const auto& prow = rows[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const mpq_class factor = rows[r][c] / prow[c];
      for (std::size_t j = c; j < cols; ++j) rows[r][j] -= factor * prow[j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int row_rank(const Eigen::MatrixXd& a, std::uint64_t row_mask, bool exact, double rank_tol) {
  std::vector<Eigen::Index> picked;
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    if (row_mask & (std::uint64_t{1} << r)) picked.push_back(r);
  if (picked.empty()) return 0;
  if (exact) {
    std::vector<std::vector<mpq_class>> rows;
    for (auto r : picked) {
      std::vector<mpq_class> row;
      for (Eigen::Index c = 0; c < a.cols(); ++c) row.emplace_back(a(r, c));
      rows.push_back(std::move(row));
    }
    return exact_rank(std::move(rows));
  }
  Eigen::MatrixXd sub(static_cast<Eigen::Index>(picked.size()), a.cols());
  for (std::size_t i = 0; i < picked.size(); ++i) sub.row(static_cast<Eigen::Index>(i)) = a.row(picked[i]);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(sub);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  return static_cast<int>((sv.array() > rank_tol * sv(0)).count());
}

ComplementResult complement_property(const Eigen::MatrixXd& a, const Tolerances& tol, int max_rows) {
  tol.validate();
  if (a.rows() < 1 || a.cols() < 1 || !a.allFinite())
    throw std::invalid_argument("complement_property: matrix must be nonempty and finite");
  if (a.rows() > max_rows || a.rows() > 62)
    throw ComputationError("complement_property: " + std::to_string(a.rows()) + " rows exceed the exhaustion cap of " +
                           std::to_string(max_rows));
  ComplementResult result;
  result.exact = all_integral(a);
  const auto n = static_cast<int>(a.cols());
  const std::uint64_t all = (std::uint64_t{1} << a.rows()) - 1;
  auto spanning = [&](std::uint64_t mask) {
    return std::popcount(mask) >= n && row_rank(a, mask, result.exact, tol.rank_tol) == n;
  };
  // Each {S, S^C} pair once: S never contains the last row.
  for (std::uint64_t mask = 0; mask <= (all >> 1); ++mask) {
    if (spanning(mask) || spanning(all & ~mask)) continue;
    result.holds = false;
    for (Eigen::Index r = 0; r < a.rows(); ++r)
      if (mask & (std::uint64_t{1} << r)) result.witness.push_back(static_cast<int>(r) + 1);
    break;
  }
  return result;
}

}  // namespace phaselab
