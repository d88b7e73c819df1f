#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hankelcf/field.hpp"

namespace hankelcf {

/// Dense univariate polynomial, canonical form (no trailing zero coefficient).
/// The zero polynomial has an empty coefficient list and degree -1.
class Polynomial {
 public:
  explicit Polynomial(const FieldSpec& spec) : spec_(spec) {}
  Polynomial(const FieldSpec& spec, std::vector<FieldElement> coeffs);
  static Polynomial constant(const FieldElement& c);
  static Polynomial x_power(const FieldSpec& spec, std::size_t e);
  static Polynomial from_ints(const FieldSpec& spec, std::initializer_list<long> coeffs);
  static Polynomial from_ints(const FieldSpec& spec, const std::vector<long>& coeffs);

  const FieldSpec& spec() const { return spec_; }
  const std::vector<FieldElement>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  /// Least exponent with a nonzero coefficient; nullopt for the zero polynomial.
  std::optional<std::size_t> valuation() const;
  FieldElement coeff(std::size_t i) const;
  FieldElement constant_term() const { return coeff(0); }
  FieldElement leading_coeff() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const FieldElement& c) const;

  /// Exact division by x^m; throws DomainError when x^m does not divide.
  Polynomial div_by_power(std::size_t m) const;
  Polynomial times_x_power(std::size_t m) const;
  Polynomial truncated(std::size_t n) const;  // mod x^n
  Polynomial substituted_x_power(std::size_t d) const;  // p(x^d)

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  std::string str() const;

 private:
  FieldSpec spec_;
  std::vector<FieldElement> c_;
  void canonicalize();
};

/// Parses the CLI expression grammar: a signed sum of terms
/// `c`, `x`, `c*x^e`, `x^e` with integer or `a/b` coefficients.
/// Whitespace-insensitive; `*` may be omitted. Round-trips with str().
Polynomial parse_poly(std::string_view text, const FieldSpec& spec);

/// Truncated power-series helpers (operands read as series mod x^n).
Polynomial mul_mod(const Polynomial& a, const Polynomial& b, std::size_t n);
/// Inverse of a series with unit constant term, mod x^n.
Polynomial inverse_mod(const Polynomial& a, std::size_t n);

}  // namespace hankelcf
