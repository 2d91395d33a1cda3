#include "phaselab/algebra/groebner.hpp"

#include "phaselab/core.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

namespace phaselab::algebra {
namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

const Polynomial* find_reducer(const Monomial& m, const std::vector<const Polynomial*>& basis) {
  for (const auto* g : basis)
    if (g->lead_monomial().divides(m)) return g;
  return nullptr;
}

Polynomial reduce(const Polynomial& f, const std::vector<const Polynomial*>& basis) {
  Polynomial p = f;
  std::vector<Term> remainder;
  while (!p.is_zero()) {
    const Term& lt = p.lead();
    if (const Polynomial* g = find_reducer(lt.monomial, basis)) {
      p = p.minus_multiple(lt.coeff / g->lead().coeff, lt.monomial / g->lead_monomial(), *g);
    } else {
      remainder.push_back(lt);
      p = p - Polynomial(p.num_vars(), {lt});
    }
  }
  return Polynomial(f.num_vars(), std::move(remainder));
}

class Buchberger {
 public:
  Buchberger(const GroebnerBudget& budget, GroebnerStats& stats) : budget_(budget), stats_(stats) {}

  void insert(Polynomial h) {
    polys_.push_back(std::move(h));
    const std::size_t hi = polys_.size() - 1;
    const Monomial& lh = polys_[hi].lead_monomial();

    std::deque<Pair> candidates;
    for (std::size_t g : active_) candidates.push_back({g, hi, lh.lcm(polys_[g].lead_monomial())});
    std::vector<Pair> kept;
    while (!candidates.empty()) {
      Pair p = std::move(candidates.front());
      candidates.pop_front();
      const bool coprime = lh.coprime(polys_[p.i].lead_monomial());
      auto divides_p = [&](const Pair& q) { return q.lcm.divides(p.lcm); };
      if (coprime || (std::none_of(candidates.begin(), candidates.end(), divides_p) &&
                      std::none_of(kept.begin(), kept.end(), divides_p)))
        kept.push_back(std::move(p));
    }
    std::erase_if(kept, [&](const Pair& p) { return lh.coprime(polys_[p.i].lead_monomial()); });

    std::erase_if(pairs_, [&](const Pair& p) {
      if (!lh.divides(p.lcm)) return false;
      const Monomial a = polys_[p.i].lead_monomial().lcm(lh);
      const Monomial b = polys_[p.j].lead_monomial().lcm(lh);
      return !(a == p.lcm) && !(b == p.lcm);
    });
    pairs_.insert(pairs_.end(), kept.begin(), kept.end());

    std::erase_if(active_, [&](std::size_t g) { return lh.divides(polys_[g].lead_monomial()); });
    active_.push_back(hi);
  }

  void add_generator(const Polynomial& f) {
    Polynomial h = reduce(f, active_basis());
    if (!h.is_zero()) insert(h.monic());
  }

  void run() {
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [](const Pair& a, const Pair& b) {
        const auto c = degrevlex(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return std::tie(a.j, a.i) < std::tie(b.j, b.i);
      });
      Pair p = std::move(*best);
      pairs_.erase(best);
      ++stats_.pairs_considered;
      stats_.max_degree_seen = std::max(stats_.max_degree_seen, p.lcm.degree());
      check_budget(p);

      Polynomial h = reduce(s_polynomial(polys_[p.i], polys_[p.j]), active_basis());
      ++stats_.pairs_reduced;
      if (h.is_zero()) {
        ++stats_.zero_reductions;
        continue;
      }
      insert(h.monic());
    }
  }

  std::vector<Polynomial> reduced_basis() const {
    std::vector<Polynomial> basis;
    for (std::size_t g : active_) basis.push_back(polys_[g]);
    std::sort(basis.begin(), basis.end(), [](const Polynomial& a, const Polynomial& b) {
      return degrevlex(a.lead_monomial(), b.lead_monomial()) < 0;
    });
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::vector<const Polynomial*> others;
      for (std::size_t m = 0; m < basis.size(); ++m)
        if (m != k) others.push_back(&basis[m]);
      basis[k] = reduce(basis[k], others).monic();
    }
    return basis;
  }

 private:
  std::vector<const Polynomial*> active_basis() const {
    std::vector<const Polynomial*> out;
    out.reserve(active_.size());
    for (std::size_t g : active_) out.push_back(&polys_[g]);
    return out;
  }

  void check_budget(const Pair& p) const {
    if (stats_.pairs_considered > budget_.max_pairs)
      throw ComputationError("groebner: pair budget of " + std::to_string(budget_.max_pairs) + " exceeded");
    if (p.lcm.degree() > budget_.max_degree)
      throw ComputationError("groebner: S-pair degree " + std::to_string(p.lcm.degree()) + " exceeds cap " +
                             std::to_string(budget_.max_degree));
    if (budget_.deadline && std::chrono::steady_clock::now() > *budget_.deadline)
      throw ComputationError("groebner: time budget exceeded");
  }

  const GroebnerBudget& budget_;
  GroebnerStats& stats_;
  std::deque<Polynomial> polys_;  // stable addresses
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = f.lead_monomial().lcm(g.lead_monomial());
  const Polynomial a = f.times({l / f.lead_monomial(), Rational(1) / f.lead().coeff});
  return a.minus_multiple(Rational(1) / g.lead().coeff, l / g.lead_monomial(), g);
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& g) {
  std::vector<const Polynomial*> basis;
  for (const auto& p : g)
    if (!p.is_zero()) basis.push_back(&p);
  return reduce(f, basis);
}

Ideal groebner(const Ideal& ideal, const GroebnerBudget& budget, GroebnerStats* stats) {
  if (ideal.num_vars() < 1 || ideal.num_vars() > kMaxVariables)
    throw std::invalid_argument("groebner: variable count must be in [1, " + std::to_string(kMaxVariables) + "]");
  GroebnerStats local;
  GroebnerStats& st = stats ? *stats : local;
  Buchberger engine(budget, st);
  for (const auto& f : ideal.generators)
    if (!f.is_zero()) engine.add_generator(f);
  engine.run();
  return {ideal.variables, engine.reduced_basis()};
}

bool is_groebner_basis(const std::vector<Polynomial>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
  return true;
}

bool is_reduced_basis(const std::vector<Polynomial>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].is_zero() || basis[i].lead().coeff != 1) return false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : basis[j].terms())
        if (basis[i].lead_monomial().divides(t.monomial)) return false;
    }
  }
  return true;
}

}  // namespace phaselab::algebra
