#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "hankelcf/errors.hpp"

namespace hankelcf {

/// Coefficient domain: the rationals, or a prime field F_p with p < 2^31.
class FieldSpec {
 public:
  FieldSpec() = default;  // rationals
  static FieldSpec rationals() { return FieldSpec{}; }
  static FieldSpec prime_field(std::uint32_t p);
  static FieldSpec parse(std::string_view text);  // "Q", "F2", "F5", ...

  bool is_rationals() const { return p_ == 0; }
  bool is_prime_field() const { return p_ != 0; }
  std::uint32_t characteristic() const { return p_; }  // 0 for the rationals
  std::uint32_t prime() const;
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint32_t p_ = 0;  // 0 = rationals
};

/// An exact field element: a residue in [0, p) or a reduced rational.
/// Values are immutable; all operations are pure.
class FieldElement {
 public:
  FieldElement() : v_(mpq_class(0)) {}  // rational zero

  static FieldElement zero(const FieldSpec& f);
  static FieldElement one(const FieldSpec& f);
  static FieldElement from_int(const FieldSpec& f, long v);
  static FieldElement from_mpz(const FieldSpec& f, const mpz_class& v);
  static FieldElement residue(const FieldSpec& f, std::uint64_t r);
  static FieldElement rational(mpq_class q);
  static FieldElement rational(const mpz_class& num, const mpz_class& den);
  static FieldElement parse(std::string_view text, const FieldSpec& f);

  FieldSpec spec() const;
  bool is_zero() const;
  bool is_one() const;
  std::uint32_t residue() const;
  const mpq_class& rational() const;
  /// Canonical lift: residue as an integer in [0, p), or the rational itself
  /// (error if not an integer).
  mpz_class lift() const;

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  FieldElement inverse() const;
  FieldElement pow(long e) const;  // negative exponents via inverse

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  std::string str() const;

 private:
  struct Residue {
    std::uint32_t p;
    std::uint32_t r;
    friend bool operator==(const Residue&, const Residue&) = default;
  };
  explicit FieldElement(Residue r) : v_(r) {}
  explicit FieldElement(mpq_class q) : v_(std::move(q)) {}

  std::variant<Residue, mpq_class> v_;
};

bool is_prime_u32(std::uint32_t n);
std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p);
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);
/// Square root in F_p for odd prime p; nullopt when a is a non-residue.
std::optional<std::uint32_t> sqrt_mod(std::uint32_t a, std::uint32_t p);

/// Reduction Q -> F_p. Errors when p divides the denominator (p-adic pole).
FieldElement reduce_mod_p(const FieldElement& a, const FieldSpec& target);

/// Smallest n >= 1 with a^n = 1; requires a != 0 in a prime field.
std::uint64_t multiplicative_order(const FieldElement& a);

}  // namespace hankelcf
