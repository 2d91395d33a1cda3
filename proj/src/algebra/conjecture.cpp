#include "phaselab/algebra/conjecture.hpp"

#include "phaselab/algebra/incidence.hpp"
#include "phaselab/combinat.hpp"
#include "phaselab/symmetry.hpp"

namespace phaselab::algebra {
namespace {

bool past(const std::optional<std::chrono::steady_clock::time_point>& deadline) {
  return deadline && std::chrono::steady_clock::now() > *deadline;
}

GroebnerBudget with_deadline(GroebnerBudget b, const SweepBudget& sweep) {
  if (sweep.deadline && (!b.deadline || *sweep.deadline < *b.deadline)) b.deadline = sweep.deadline;
  return b;
}

}  // namespace

SignalConjectureReport check_signal_conjecture(const SupportSet& s, const GroebnerBudget& budget) {
  SignalConjectureReport r;
  r.support = s;
  const int distinct = difference_multiset(s).distinct();
  if (distinct <= static_cast<int>(s.size())) {
    r.skipped = true;
    r.reason = "|S-S| = " + std::to_string(distinct) + " is not larger than |S| = " + std::to_string(s.size());
    return r;
  }
  r.hilbert = hilbert_polynomial(incidence_ideal(s, s), budget);
  r.affine_dim = r.hilbert.affine_dimension();
  r.degree = r.hilbert.degree();
  r.stabilizer = stabilizer_order(s);
  r.expected_degree = 2 * static_cast<std::int64_t>(r.stabilizer);
  r.pass = r.affine_dim == static_cast<int>(s.size()) && r.degree == r.expected_degree;
  return r;
}

SupportConjectureReport check_support_conjecture(int n, int k, const SweepBudget& budget,
                                                 SupportQualifier qualifier) {
  SupportConjectureReport report;
  report.n = n;
  report.k = k;
  const auto classes = dihedral_classes(n, k);
  report.classes = classes.size();

  std::vector<std::pair<SupportSet, int>> qualifying;
  for (const auto& s : classes) {
    const int distinct = difference_multiset(s).distinct();
    const int threshold = qualifier == SupportQualifier::AtLeastK ? k : k + 1;
    if (distinct >= threshold) qualifying.emplace_back(s, distinct);
  }
  report.qualifying_classes = qualifying.size();

  std::vector<std::pair<std::size_t, std::size_t>> todo;
  for (std::size_t i = 0; i < qualifying.size(); ++i)
    for (std::size_t j = i + 1; j < qualifying.size(); ++j)
      if (qualifying[i].second == qualifying[j].second) todo.emplace_back(i, j);
  if (budget.max_items != 0 && todo.size() > budget.max_items) {
    todo.resize(budget.max_items);
    report.partial = true;
  }

  const GroebnerBudget gb = with_deadline(budget.groebner, budget);
  std::vector<std::optional<SupportPairReport>> results(todo.size());
  parallel_for(
      todo.size(),
      [&](std::size_t t) {
        if (past(budget.deadline)) return;
        SupportPairReport r;
        r.first = qualifying[todo[t].first].first;
        r.second = qualifying[todo[t].second].first;
        try {
          r.hilbert = hilbert_polynomial(incidence_ideal(r.first, r.second), gb);
          r.affine_dim = r.hilbert.affine_dimension();
          r.degree = r.hilbert.degree();
          r.pass = r.affine_dim < k;
        } catch (const ComputationError& e) {
          r.error = e.what();
        }
        results[t] = std::move(r);
      },
      budget.workers);

  for (auto& r : results) {
    if (!r || !r->error.empty()) {
      report.partial = true;
      if (!r) continue;
    }
    if (r->error.empty()) report.all_pass = report.all_pass && r->pass;
    report.pairs.push_back(std::move(*r));
  }
  return report;
}

SignalSweepReport check_signal_sweep(int n, int k, const SweepBudget& budget) {
  SignalSweepReport report;
  report.n = n;
  report.k = k;
  auto classes = dihedral_classes(n, k);
  std::vector<SupportSet> todo;
  for (auto& s : classes) {
    if (difference_multiset(s).distinct() > k)
      todo.push_back(std::move(s));
    else
      ++report.skipped;
  }
  if (budget.max_items != 0 && todo.size() > budget.max_items) {
    todo.resize(budget.max_items);
    report.partial = true;
  }
  const GroebnerBudget gb = with_deadline(budget.groebner, budget);
  std::vector<std::optional<SignalConjectureReport>> results(todo.size());
  parallel_for(
      todo.size(),
      [&](std::size_t t) {
        if (past(budget.deadline)) return;
        try {
          results[t] = check_signal_conjecture(todo[t], gb);
        } catch (const ComputationError&) {
        }
      },
      budget.workers);
  for (auto& r : results) {
    if (!r) {
      report.partial = true;
      continue;
    }
    report.all_pass = report.all_pass && r->pass;
    report.sets.push_back(std::move(*r));
  }
  return report;
}

}  // namespace phaselab::algebra
