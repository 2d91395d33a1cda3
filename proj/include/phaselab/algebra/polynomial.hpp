#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace phaselab::algebra {

using Rational = mpq_class;

inline constexpr int kMaxVariables = 16;

/// Exponent vector over at most kMaxVariables variables, with cached degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int num_vars);
  Monomial(std::initializer_list<int> exponents);

  int num_vars() const { return num_vars_; }
  int degree() const { return degree_; }
  int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
  void set(int i, int e);

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// this / other; requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;

  bool operator==(const Monomial& other) const = default;

 private:
  std::array<std::uint8_t, kMaxVariables> exps_{};
  int num_vars_ = 0;
  int degree_ = 0;
};

/// Degree reverse lexicographic order with variable 0 the largest.
std::strong_ordering degrevlex(const Monomial& a, const Monomial& b);

struct Term {
  Monomial monomial;
  Rational coeff;
};

/// Sparse polynomial over Q; terms sorted strictly decreasing in degrevlex,
/// no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int num_vars) : num_vars_(num_vars) {}
  /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
  Polynomial(int num_vars, std::vector<Term> terms);

  static Polynomial variable(int num_vars, int index);
  static Polynomial constant(int num_vars, const Rational& c);

  int num_vars() const { return num_vars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  const Term& lead() const { return terms_.front(); }
  const Monomial& lead_monomial() const { return terms_.front().monomial; }
  int total_degree() const;
  bool is_homogeneous() const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial scaled(const Rational& c) const;
  Polynomial times(const Term& t) const;
  /// this - c * m * g, computed in one merge.
  Polynomial minus_multiple(const Rational& c, const Monomial& m, const Polynomial& g) const;
  Polynomial monic() const;

  /// Substitutes polynomials for every variable (values.size() == num_vars()).
  Polynomial substitute(const std::vector<Polynomial>& values) const;
  Polynomial derivative(int var) const;
  double evaluate(std::span<const double> point) const;

  bool operator==(const Polynomial& other) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::vector<Term> terms_;
  int num_vars_ = 0;
};

/// Polynomials over a shared, named variable set.
struct Ideal {
  std::vector<std::string> variables;
  std::vector<Polynomial> generators;

  int num_vars() const { return static_cast<int>(variables.size()); }
  bool is_homogeneous() const;
  std::string to_string() const;
};

/// Parses expressions like "x0^2 + 3/2*x1*y5 - 7" over the given names.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names);

}  // namespace phaselab::algebra
