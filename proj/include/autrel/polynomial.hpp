#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "autrel/rational.hpp"

namespace autrel {

/// Exponent vector x1^a1 * ... * xn^an. Ordered lexicographically (x1 most significant).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<std::uint32_t> exps) : exps_(exps) {}

  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::span<const std::uint32_t> exponents() const noexcept { return exps_; }

  std::uint64_t total_degree() const noexcept;
  bool is_one() const noexcept;
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other) == true for `other / *this` semantics: returns this / divisor.
  Monomial operator/(const Monomial& divisor) const;
  Monomial with_exponent(std::size_t i, std::uint32_t e) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exps_ <=> b.exps_; }

 private:
  std::vector<std::uint32_t> exps_;
};

Monomial lcm(const Monomial& a, const Monomial& b);

/// Sparse polynomial over Q in a fixed number of variables. No stored zero coefficients.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial term(const Monomial& m, const Rational& c);

  std::size_t nvars() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Constant coefficient (0 when absent).
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;

  /// Lex-largest term. Requires !is_zero().
  const TermMap::value_type& lex_leading() const { return *terms_.rbegin(); }

  /// -1 for the zero polynomial.
  long total_degree() const noexcept;
  std::uint32_t degree_in(std::size_t var) const noexcept;
  bool involves(std::size_t var) const noexcept { return degree_in(var) > 0; }

  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Multiplies by a monomial times a scalar.
  Polynomial mul_term(const Monomial& m, const Rational& c) const;

  /// Embeds into a ring with more variables: variable i goes to slot offset + i.
  Polynomial embed(std::size_t new_nvars, std::size_t offset = 0) const;
  /// Applies a variable permutation: variable i becomes variable perm[i].
  Polynomial permute(std::span<const std::size_t> perm) const;

 private:
  void check_same_ring(const Polynomial& other) const;

  std::size_t nvars_;
  TermMap terms_;
};

Polynomial pow(const Polynomial& p, unsigned k);

/// Formal partial derivative with respect to variable `var` (0-based).
Polynomial partial(const Polynomial& p, std::size_t var);

/// Substitutes images[i] for x_{i+1}. images.size() must equal p.nvars();
/// all images share one ring, which is the ring of the result.
Polynomial compose(const Polynomial& p, std::span<const Polynomial> images);

/// det(d rows[i] / d x_j).
Polynomial jacobian(std::span<const Polynomial> rows);

/// Quotient a / b when b divides a exactly.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

/// Divides by the gcd of the numerators and multiplies by the lcm of the denominators;
/// the result has coprime integer coefficients and a positive lex-leading coefficient.
Polynomial primitive_part(const Polynomial& p);

Polynomial parse_poly(std::string_view text, std::size_t nvars);
std::string format_poly(const Polynomial& p);

/// Positive rational weights defining a weighted homogeneous degree.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<Rational> weights);
  WeightVector(std::initializer_list<long> weights);

  static WeightVector standard(std::size_t nvars);

  std::size_t size() const noexcept { return weights_.size(); }
  const Rational& operator[](std::size_t i) const { return weights_[i]; }
  const std::vector<Rational>& values() const noexcept { return weights_; }
  bool is_standard() const;
  bool is_integral() const;
  Rational sum() const;
  Rational degree_of(const Monomial& m) const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<Rational> weights_;
};

WeightVector parse_weights(std::string_view text);
std::string format_weights(const WeightVector& w);

/// A weighted degree value: a rational, or minus infinity (degree of the zero polynomial).
class WDegree {
 public:
  WDegree() = default;  // minus infinity
  WDegree(Rational value) : value_(std::move(value)) {}
  WDegree(long value) : value_(Rational(value)) {}

  static WDegree minus_infinity() { return WDegree(); }

  bool is_minus_infinity() const noexcept { return !value_.has_value(); }
  const Rational& value() const;

  friend bool operator==(const WDegree& a, const WDegree& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const WDegree& a, const WDegree& b);
  friend WDegree operator+(const WDegree& a, const WDegree& b);
  friend WDegree operator-(const WDegree& a, const Rational& b);

 private:
  std::optional<Rational> value_;
};

std::string to_string(const WDegree& d);

WDegree wdeg(const Polynomial& p, const WeightVector& w);
Polynomial leading_term(const Polynomial& p, const WeightVector& w);
/// Sum of the terms of p of weighted degree exactly `degree`.
Polynomial homogeneous_component(const Polynomial& p, const WeightVector& w, const Rational& degree);
bool is_homogeneous(const Polynomial& p, const WeightVector& w);

}  // namespace autrel
