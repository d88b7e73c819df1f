#include "hankelcf/poly.hpp"

#include <algorithm>
#include <cctype>

namespace hankelcf {

Polynomial::Polynomial(const FieldSpec& spec, std::vector<FieldElement> coeffs)
    : spec_(spec), c_(std::move(coeffs)) {
  for (const auto& c : c_) {
    if (c.spec() != spec_) throw DomainError("coefficient field mismatch");
  }
  canonicalize();
}

void Polynomial::canonicalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::constant(const FieldElement& c) {
  Polynomial p(c.spec());
  if (!c.is_zero()) p.c_.push_back(c);
  return p;
}

Polynomial Polynomial::x_power(const FieldSpec& spec, std::size_t e) {
  Polynomial p(spec);
  p.c_.assign(e + 1, FieldElement::zero(spec));
  p.c_[e] = FieldElement::one(spec);
  return p;
}

Polynomial Polynomial::from_ints(const FieldSpec& spec, std::initializer_list<long> coeffs) {
  return from_ints(spec, std::vector<long>(coeffs));
}

Polynomial Polynomial::from_ints(const FieldSpec& spec, const std::vector<long>& coeffs) {
  std::vector<FieldElement> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.push_back(FieldElement::from_int(spec, v));
  return Polynomial(spec, std::move(c));
}

std::optional<std::size_t> Polynomial::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) return i;
  }
  return std::nullopt;
}

FieldElement Polynomial::coeff(std::size_t i) const {
  if (i < c_.size()) return c_[i];
  return FieldElement::zero(spec_);
}

FieldElement Polynomial::leading_coeff() const {
  if (c_.empty()) return FieldElement::zero(spec_);
  return c_.back();
}

Polynomial Polynomial::operator-() const {
  Polynomial r(spec_);
  r.c_.reserve(c_.size());
  for (const auto& c : c_) r.c_.push_back(-c);
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (a.spec_ != b.spec_) throw DomainError("polynomial field mismatch");
  Polynomial r(a.spec_);
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), FieldElement::zero(a.spec_));
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) + b.coeff(i);
  r.canonicalize();
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.spec_ != b.spec_) throw DomainError("polynomial field mismatch");
  Polynomial r(a.spec_);
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, FieldElement::zero(a.spec_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
    }
  }
  r.canonicalize();
  return r;
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
  Polynomial r(spec_);
  if (c.is_zero()) return r;
  r.c_.reserve(c_.size());
  for (const auto& x : c_) r.c_.push_back(x * c);
  r.canonicalize();
  return r;
}

Polynomial Polynomial::div_by_power(std::size_t m) const {
  if (is_zero()) return *this;
  auto v = valuation();
  if (!v || *v < m) {
    throw DomainError("x^" + std::to_string(m) + " does not divide " + str());
  }
  Polynomial r(spec_);
  r.c_.assign(c_.begin() + static_cast<std::ptrdiff_t>(m), c_.end());
  return r;
}

Polynomial Polynomial::times_x_power(std::size_t m) const {
  if (is_zero()) return *this;
  Polynomial r(spec_);
  r.c_.assign(m, FieldElement::zero(spec_));
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Polynomial Polynomial::truncated(std::size_t n) const {
  if (c_.size() <= n) return *this;
  Polynomial r(spec_);
  r.c_.assign(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(n));
  r.canonicalize();
  return r;
}

Polynomial Polynomial::substituted_x_power(std::size_t d) const {
  if (d == 0) throw DomainError("substituted_x_power needs d >= 1");
  Polynomial r(spec_);
  if (is_zero()) return r;
  r.c_.assign((c_.size() - 1) * d + 1, FieldElement::zero(spec_));
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * d] = c_[i];
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.spec_ == b.spec_ && a.c_ == b.c_;
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    std::string cs = c_[i].str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (out.empty()) {
      if (neg) out += "-", cs = cs.substr(1);
    } else {
      out += neg ? "-" : "+";
      if (neg) cs = cs.substr(1);
    }
    if (i == 0) {
      out += cs;
    } else {
      if (cs != "1") out += cs + "*";
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

namespace {

struct PolyParser {
  std::string_view text;
  std::size_t pos = 0;
  const FieldSpec& spec;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& why) {
    throw ParseError("poly parse error at position " + std::to_string(pos) + ": " + why);
  }

  std::string read_uint() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected a number");
    return std::string(text.substr(start, pos - start));
  }

  // coefficient: uint or uint/uint (sign handled by the caller)
  FieldElement read_coeff() {
    std::string num = read_uint();
    skip_ws();
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      std::string den = read_uint();
      FieldElement q = FieldElement::rational(mpz_class(num), mpz_class(den));
      if (spec.is_rationals()) return q;
      try {
        return reduce_mod_p(q, spec);
      } catch (const DomainError& e) {
        fail(e.what());
      }
    }
    return FieldElement::from_mpz(spec, mpz_class(num));
  }

  std::size_t read_exponent() {
    std::string e = read_uint();
    if (e.size() > 6) fail("exponent too large");
    return static_cast<std::size_t>(std::stoul(e));
  }

  // term: c | x | c[*]x[^e] | x^e
  void read_term(std::vector<FieldElement>& acc, bool negate) {
    FieldElement c = FieldElement::one(spec);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = read_coeff();
      have_coeff = true;
    }
    std::size_t e = 0;
    skip_ws();
    if (pos < text.size() && text[pos] == '*') {
      ++pos;
      skip_ws();
      if (pos >= text.size() || (text[pos] != 'x' && text[pos] != 'X')) fail("expected x after *");
    }
    skip_ws();
    if (pos < text.size() && (text[pos] == 'x' || text[pos] == 'X')) {
      ++pos;
      e = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        e = read_exponent();
      }
    } else if (!have_coeff) {
      fail("expected a term");
    }
    if (negate) c = -c;
    if (acc.size() < e + 1) acc.resize(e + 1, FieldElement::zero(spec));
    acc[e] = acc[e] + c;
  }

  Polynomial run() {
    std::vector<FieldElement> acc;
    bool negate = false;
    if (peek() == '+') ++pos;
    else if (peek() == '-') {
      ++pos;
      negate = true;
    }
    read_term(acc, negate);
    while (!at_end()) {
      char s = peek();
      if (s == '+') negate = false;
      else if (s == '-') negate = true;
      else fail("expected + or -");
      ++pos;
      read_term(acc, negate);
    }
    return Polynomial(spec, std::move(acc));
  }
};

}  // namespace

Polynomial parse_poly(std::string_view text, const FieldSpec& spec) {
  PolyParser p{text, 0, spec};
  if (p.at_end()) throw ParseError("empty polynomial");
  return p.run();
}

Polynomial mul_mod(const Polynomial& a, const Polynomial& b, std::size_t n) {
  if (a.spec() != b.spec()) throw DomainError("polynomial field mismatch");
  std::vector<FieldElement> r(n, FieldElement::zero(a.spec()));
  std::size_t da = std::min<std::size_t>(a.coeffs().size(), n);
  for (std::size_t i = 0; i < da; ++i) {
    if (a.coeffs()[i].is_zero()) continue;
    std::size_t db = std::min(b.coeffs().size(), n - i);
    for (std::size_t j = 0; j < db; ++j) {
      r[i + j] = r[i + j] + a.coeffs()[i] * b.coeffs()[j];
    }
  }
  return Polynomial(a.spec(), std::move(r));
}

Polynomial inverse_mod(const Polynomial& a, std::size_t n) {
  FieldElement a0 = a.constant_term();
  if (a0.is_zero()) throw DomainError("series inverse of a non-unit");
  FieldElement inv0 = a0.inverse();
  std::vector<FieldElement> w(n, FieldElement::zero(a.spec()));
  if (n == 0) return Polynomial(a.spec());
  w[0] = inv0;
  for (std::size_t m = 1; m < n; ++m) {
    // sum_{i=1..m} a_i w_{m-i} + a_0 w_m = 0
    FieldElement s = FieldElement::zero(a.spec());
    std::size_t top = std::min(m, a.coeffs().size() == 0 ? 0 : a.coeffs().size() - 1);
    for (std::size_t i = 1; i <= top; ++i) {
      if (!a.coeffs()[i].is_zero()) s = s + a.coeffs()[i] * w[m - i];
    }
    w[m] = -(s * inv0);
  }
  return Polynomial(a.spec(), std::move(w));
}

}  // namespace hankelcf
