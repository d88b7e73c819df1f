#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "hankelcf/poly.hpp"

namespace hankelcf {

namespace detail {
class SeriesSource;
}

/// A formal power series under the prefix-pull contract: prefix(n) returns
/// the exact first n coefficients, and prefix(n) is a prefix of prefix(m)
/// for n <= m. Handles memoize computed prefixes; concurrent reads on one
/// handle are serialized internally. Distinct handles are independent.
class SeriesHandle {
 public:
  static SeriesHandle explicit_prefix(const FieldSpec& spec, std::vector<FieldElement> coeffs);
  static SeriesHandle from_polynomial(const Polynomial& p);
  /// num/den with den(0) != 0.
  static SeriesHandle rational_fn(const Polynomial& num, const Polynomial& den);
  /// The power series F with A + B F + C F^2 = 0 and F(0) = f0, solved by
  /// undetermined coefficients; needs B(0) + 2 C(0) f0 != 0.
  static SeriesHandle quadratic_root(const Polynomial& A, const Polynomial& B,
                                     const Polynomial& C, const FieldElement& f0);
  static SeriesHandle sqrt_of(const SeriesHandle& inner);
  /// base^r with base(0) = 1, r = s/q in lowest terms with q coprime to the
  /// characteristic. Computed over Q and reduced coefficientwise.
  static SeriesHandle binomial_power(const mpq_class& r, const SeriesHandle& base,
                                     const FieldSpec& target);
  static SeriesHandle add(const SeriesHandle& a, const SeriesHandle& b);
  static SeriesHandle mul(const SeriesHandle& a, const SeriesHandle& b);
  static SeriesHandle compose_x_power(const SeriesHandle& s, std::size_t d);  // s(x^d)
  /// s / x^m; the first m coefficients must be zero.
  static SeriesHandle shift_div(const SeriesHandle& s, std::size_t m);
  static SeriesHandle scale(const FieldElement& c, const SeriesHandle& s);
  /// gen(n) must return the exact first n coefficients.
  static SeriesHandle from_generator(const FieldSpec& spec,
                                     std::function<std::vector<FieldElement>(std::size_t)> gen);

  const FieldSpec& spec() const;
  std::vector<FieldElement> prefix(std::size_t n) const;
  FieldElement coeff(std::size_t i) const;
  Polynomial prefix_poly(std::size_t n) const;  // prefix as a polynomial mod x^n

  /// (num, den) when this handle is exactly a rational function; lets the
  /// expansion decide termination instead of guessing from a finite prefix.
  std::optional<std::pair<Polynomial, Polynomial>> exact_rational() const;
  /// Largest queryable prefix, when the source is depth-limited.
  std::optional<std::size_t> depth_limit() const;

 private:
  explicit SeriesHandle(std::shared_ptr<detail::SeriesSource> src) : src_(std::move(src)) {}
  std::shared_ptr<detail::SeriesSource> src_;
};

/// Prefix of the quadratic-root series as a plain coefficient vector
/// (the same bootstrap the algorithms use step by step).
std::vector<FieldElement> solve_quadratic_prefix(const Polynomial& A, const Polynomial& B,
                                                 const Polynomial& C, const FieldElement& f0,
                                                 std::size_t n);

}  // namespace hankelcf
