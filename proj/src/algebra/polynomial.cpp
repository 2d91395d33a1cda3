#include "phaselab/algebra/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace phaselab::algebra {

Monomial::Monomial(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 0 || num_vars > kMaxVariables)
    throw std::invalid_argument("Monomial: at most " + std::to_string(kMaxVariables) + " variables");
}

Monomial::Monomial(std::initializer_list<int> exponents) : Monomial(static_cast<int>(exponents.size())) {
  int i = 0;
  for (int e : exponents) set(i++, e);
}

void Monomial::set(int i, int e) {
  if (i < 0 || i >= num_vars_) throw std::out_of_range("Monomial: variable index");
  if (e < 0 || e > std::numeric_limits<std::uint8_t>::max()) throw std::overflow_error("Monomial: exponent out of range");
  auto& slot = exps_[static_cast<std::size_t>(i)];
  degree_ += e - slot;
  slot = static_cast<std::uint8_t>(e);
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (int i = 0; i < num_vars_; ++i)
    if (exps_[static_cast<std::size_t>(i)] > other.exps_[static_cast<std::size_t>(i)]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (int i = 0; i < num_vars_; ++i)
    if (exps_[static_cast<std::size_t>(i)] != 0 && other.exps_[static_cast<std::size_t>(i)] != 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out(num_vars_);
  for (int i = 0; i < num_vars_; ++i) out.set(i, (*this)[i] + other[i]);
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial out(num_vars_);
  for (int i = 0; i < num_vars_; ++i) out.set(i, (*this)[i] - other[i]);
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out(num_vars_);
  for (int i = 0; i < num_vars_; ++i) out.set(i, std::max((*this)[i], other[i]));
  return out;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial out(num_vars_);
  for (int i = 0; i < num_vars_; ++i) out.set(i, std::min((*this)[i], other[i]));
  return out;
}

std::strong_ordering degrevlex(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (int i = a.num_vars() - 1; i >= 0; --i)
    if (a[i] != b[i]) return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

Polynomial::Polynomial(int num_vars, std::vector<Term> terms) : num_vars_(num_vars) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return degrevlex(a.monomial, b.monomial) > 0; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().monomial == t.monomial)
      terms_.back().coeff += t.coeff;
    else
      terms_.push_back(std::move(t));
    if (terms_.back().coeff == 0) terms_.pop_back();
  }
}

Polynomial Polynomial::variable(int num_vars, int index) {
  Monomial m(num_vars);
  m.set(index, 1);
  Polynomial p(num_vars);
  p.terms_.push_back({m, Rational(1)});
  return p;
}

Polynomial Polynomial::constant(int num_vars, const Rational& c) {
  Polynomial p(num_vars);
  if (c != 0) p.terms_.push_back({Monomial(num_vars), c});
  return p;
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.monomial.degree() == terms_.front().monomial.degree(); });
}

namespace {

template <typename Combine>
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, Combine other_sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    if (i == a.size()) {
      out.push_back({b[j].monomial, other_sign(b[j].coeff)});
      ++j;
      continue;
    }
    const auto cmp = degrevlex(a[i].monomial, b[j].monomial);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({b[j].monomial, other_sign(b[j].coeff)});
      ++j;
    } else {
      Rational c = a[i].coeff + other_sign(b[j].coeff);
      if (c != 0) out.push_back({a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial p(num_vars_);
  p.terms_ = merge(terms_, other.terms_, [](const Rational& c) { return c; });
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial p(num_vars_);
  p.terms_ = merge(terms_, other.terms_, [](const Rational& c) { return Rational(-c); });
  return p;
}

Polynomial Polynomial::operator-() const { return scaled(Rational(-1)); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  Polynomial acc(num_vars_);
  for (const auto& t : terms_) acc = acc + other.times(t);
  return acc;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial p(num_vars_);
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.monomial, t.coeff * c});
  return p;
}

Polynomial Polynomial::times(const Term& t) const {
  Polynomial p(num_vars_);
  if (t.coeff == 0) return p;
  p.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the degrevlex order.
  for (const auto& s : terms_) p.terms_.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
  return p;
}

Polynomial Polynomial::minus_multiple(const Rational& c, const Monomial& m, const Polynomial& g) const {
  Polynomial p(num_vars_);
  const Rational neg = -c;
  std::vector<Term> shifted;
  shifted.reserve(g.terms_.size());
  for (const auto& s : g.terms_) shifted.push_back({s.monomial * m, s.coeff * neg});
  p.terms_ = merge(terms_, shifted, [](const Rational& v) { return v; });
  return p;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(Rational(1) / terms_.front().coeff);
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& values) const {
  if (static_cast<int>(values.size()) != num_vars_) throw std::invalid_argument("substitute: one value per variable");
  const int target_vars = values.empty() ? 0 : values.front().num_vars();
  Polynomial acc(target_vars);
  for (const auto& t : terms_) {
    Polynomial term = constant(target_vars, t.coeff);
    for (int v = 0; v < num_vars_; ++v)
      for (int e = 0; e < t.monomial[v]; ++e) term = term * values[static_cast<std::size_t>(v)];
    acc = acc + term;
  }
  return acc;
}

Polynomial Polynomial::derivative(int var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const int e = t.monomial[var];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(var, e - 1);
    out.push_back({m, t.coeff * e});
  }
  return Polynomial(num_vars_, std::move(out));
}

double Polynomial::evaluate(std::span<const double> point) const {
  if (static_cast<int>(point.size()) != num_vars_) throw std::invalid_argument("evaluate: point dimension");
  double acc = 0.0;
  for (const auto& t : terms_) {
    double v = t.coeff.get_d();
    for (int i = 0; i < num_vars_; ++i)
      for (int e = 0; e < t.monomial[i]; ++e) v *= point[static_cast<std::size_t>(i)];
    acc += v;
  }
  return acc;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].monomial == other.terms_[i].monomial) || terms_[i].coeff != other.terms_[i].coeff) return false;
  return true;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    c = abs(c);
    const bool unit = c == 1;
    if (!unit || t.monomial.degree() == 0) os << c.get_str();
    bool first_factor = unit;
    for (int v = 0; v < num_vars_; ++v) {
      const int e = t.monomial[v];
      if (e == 0) continue;
      if (!first_factor) os << '*';
      os << names.at(static_cast<std::size_t>(v));
      if (e > 1) os << '^' << e;
      first_factor = false;
    }
    first = false;
  }
  return os.str();
}

bool Ideal::is_homogeneous() const {
  return std::all_of(generators.begin(), generators.end(), [](const Polynomial& p) { return p.is_homogeneous(); });
}

std::string Ideal::to_string() const {
  std::string out = "<";
  for (std::size_t i = 0; i < generators.size(); ++i)
    out += (i ? ", " : "") + generators[i].to_string(variables);
  return out + ">";
}

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names) {
  const int nv = static_cast<int>(names.size());
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("parse_polynomial: empty input");

  std::vector<Term> terms;
  std::size_t pos = 0;
  auto read_int = [&]() {
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("parse_polynomial: expected a number at '" + s.substr(start) + "'");
    return s.substr(start, pos - start);
  };
  while (pos < s.size()) {
    Rational sign(1);
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
    } else if (!terms.empty()) {
      throw std::invalid_argument("parse_polynomial: expected '+' or '-' at '" + s.substr(pos) + "'");
    }
    Term term{Monomial(nv), sign};
    while (true) {
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        Rational value(read_int());
        if (pos < s.size() && s[pos] == '/') {
          ++pos;
          value /= Rational(read_int());
        }
        term.coeff *= value;
      } else {
        std::size_t best = 0;
        int var = -1;
        for (int v = 0; v < nv; ++v) {
          const auto& name = names[static_cast<std::size_t>(v)];
          if (name.size() > best && s.compare(pos, name.size(), name) == 0) {
            best = name.size();
            var = v;
          }
        }
        if (var < 0) throw std::invalid_argument("parse_polynomial: unknown token at '" + s.substr(pos) + "'");
        pos += best;
        int e = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          e = std::stoi(read_int());
        }
        term.monomial.set(var, term.monomial[var] + e);
      }
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    terms.push_back(std::move(term));
  }
  return Polynomial(nv, std::move(terms));
}

}  // namespace phaselab::algebra
