#include "hankelcf/field.hpp"

#include <charconv>

namespace hankelcf {

namespace {

constexpr std::uint32_t kMaxModulus = 1u << 31;

}  // namespace

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t b = base % p;
  std::uint64_t r = 1 % p;
  while (exp) {
    if (exp & 1) r = r * b % p;
    b = b * b % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw DomainError("inverse of zero in F_" + std::to_string(p));
  return pow_mod(a, p - 2, p);
}

std::optional<std::uint32_t> sqrt_mod(std::uint32_t a, std::uint32_t p) {
  a %= p;
  if (a == 0) return 0;
  if (p == 2) return a;
  if (pow_mod(a, (p - 1) / 2, p) != 1) return std::nullopt;
  if (p % 4 == 3) return pow_mod(a, (p + 1) / 4, p);
  // Tonelli-Shanks
  std::uint32_t q = p - 1;
  std::uint32_t s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::uint32_t z = 2;
  while (pow_mod(z, (p - 1) / 2, p) == 1) ++z;
  std::uint64_t m = s;
  std::uint64_t c = pow_mod(z, q, p);
  std::uint64_t t = pow_mod(a, q, p);
  std::uint64_t r = pow_mod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t t2 = t;
    std::uint64_t i = 0;
    while (t2 != 1) {
      t2 = t2 * t2 % p;
      ++i;
      if (i == m) return std::nullopt;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = b * b % p;
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

FieldSpec FieldSpec::prime_field(std::uint32_t p) {
  if (p >= kMaxModulus) throw DomainError("modulus must be < 2^31");
  if (!is_prime_u32(p)) throw DomainError("modulus " + std::to_string(p) + " is not prime");
  FieldSpec f;
  f.p_ = p;
  return f;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q" || text == "q") return rationals();
  if (text.size() >= 2 && (text[0] == 'F' || text[0] == 'f')) {
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), p);
    if (ec == std::errc() && ptr == text.data() + text.size()) {
      try {
        return prime_field(p);
      } catch (const DomainError& e) {
        throw ParseError(std::string("bad field spec '") + std::string(text) + "': " + e.what());
      }
    }
  }
  throw ParseError("bad field spec '" + std::string(text) + "' (expected Q or Fp)");
}

std::uint32_t FieldSpec::prime() const {
  if (p_ == 0) throw DomainError("not a prime field");
  return p_;
}

std::string FieldSpec::name() const {
  return p_ == 0 ? "Q" : "F" + std::to_string(p_);
}

FieldElement FieldElement::zero(const FieldSpec& f) {
  if (f.is_rationals()) return FieldElement(mpq_class(0));
  return FieldElement(Residue{f.prime(), 0});
}

FieldElement FieldElement::one(const FieldSpec& f) {
  if (f.is_rationals()) return FieldElement(mpq_class(1));
  return FieldElement(Residue{f.prime(), 1u % f.prime()});
}

FieldElement FieldElement::from_int(const FieldSpec& f, long v) {
  if (f.is_rationals()) return FieldElement(mpq_class(v));
  std::uint32_t p = f.prime();
  long r = v % static_cast<long>(p);
  if (r < 0) r += p;
  return FieldElement(Residue{p, static_cast<std::uint32_t>(r)});
}

FieldElement FieldElement::from_mpz(const FieldSpec& f, const mpz_class& v) {
  if (f.is_rationals()) return FieldElement(mpq_class(v));
  std::uint32_t p = f.prime();
  mpz_class r = v % p;
  if (r < 0) r += p;
  return FieldElement(Residue{p, static_cast<std::uint32_t>(r.get_ui())});
}

FieldElement FieldElement::residue(const FieldSpec& f, std::uint64_t r) {
  std::uint32_t p = f.prime();
  return FieldElement(Residue{p, static_cast<std::uint32_t>(r % p)});
}

FieldElement FieldElement::rational(mpq_class q) {
  q.canonicalize();
  return FieldElement(std::move(q));
}

FieldElement FieldElement::rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return FieldElement(std::move(q));
}

FieldElement FieldElement::parse(std::string_view text, const FieldSpec& f) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty scalar");
  auto slash = s.find('/');
  try {
    mpz_class num(slash == std::string::npos ? s : s.substr(0, slash), 10);
    mpz_class den(slash == std::string::npos ? std::string("1") : s.substr(slash + 1), 10);
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    FieldElement q = rational(num, den);
    if (f.is_rationals()) return q;
    return reduce_mod_p(q, f);
  } catch (const std::invalid_argument&) {
    throw ParseError("bad scalar '" + s + "'");
  }
}

FieldSpec FieldElement::spec() const {
  if (std::holds_alternative<Residue>(v_)) {
    return FieldSpec::prime_field(std::get<Residue>(v_).p);
  }
  return FieldSpec::rationals();
}

bool FieldElement::is_zero() const {
  if (auto* r = std::get_if<Residue>(&v_)) return r->r == 0;
  return std::get<mpq_class>(v_) == 0;
}

bool FieldElement::is_one() const {
  if (auto* r = std::get_if<Residue>(&v_)) return r->r == 1u % r->p;
  return std::get<mpq_class>(v_) == 1;
}

std::uint32_t FieldElement::residue() const {
  if (auto* r = std::get_if<Residue>(&v_)) return r->r;
  throw DomainError("residue() on a rational element");
}

const mpq_class& FieldElement::rational() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return *q;
  throw DomainError("rational() on a prime-field element");
}

mpz_class FieldElement::lift() const {
  if (auto* r = std::get_if<Residue>(&v_)) return mpz_class(r->r);
  const mpq_class& q = std::get<mpq_class>(v_);
  if (q.get_den() != 1) throw DomainError("lift() on a non-integral rational");
  return q.get_num();
}

namespace {
void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.spec() != b.spec()) {
    throw DomainError("mixed fields: " + a.spec().name() + " vs " + b.spec().name());
  }
}
}  // namespace

FieldElement FieldElement::operator-() const {
  if (auto* r = std::get_if<Residue>(&v_)) {
    return FieldElement(Residue{r->p, r->r == 0 ? 0 : r->p - r->r});
  }
  return FieldElement(mpq_class(-std::get<mpq_class>(v_)));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  if (auto* ra = std::get_if<FieldElement::Residue>(&a.v_)) {
    const auto& rb = std::get<FieldElement::Residue>(b.v_);
    std::uint64_t s = static_cast<std::uint64_t>(ra->r) + rb.r;
    if (s >= ra->p) s -= ra->p;
    return FieldElement(FieldElement::Residue{ra->p, static_cast<std::uint32_t>(s)});
  }
  return FieldElement(mpq_class(std::get<mpq_class>(a.v_) + std::get<mpq_class>(b.v_)));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  if (auto* ra = std::get_if<FieldElement::Residue>(&a.v_)) {
    const auto& rb = std::get<FieldElement::Residue>(b.v_);
    std::uint64_t m = static_cast<std::uint64_t>(ra->r) * rb.r % ra->p;
    return FieldElement(FieldElement::Residue{ra->p, static_cast<std::uint32_t>(m)});
  }
  return FieldElement(mpq_class(std::get<mpq_class>(a.v_) * std::get<mpq_class>(b.v_)));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DomainError("division by zero in " + spec().name());
  if (auto* r = std::get_if<Residue>(&v_)) {
    return FieldElement(Residue{r->p, inv_mod(r->r, r->p)});
  }
  return FieldElement(mpq_class(1 / std::get<mpq_class>(v_)));
}

FieldElement FieldElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement base = *this;
  FieldElement acc = one(spec());
  unsigned long n = static_cast<unsigned long>(e);
  while (n) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

bool operator==(const FieldElement& a, const FieldElement& b) { return a.v_ == b.v_; }

std::string FieldElement::str() const {
  if (auto* r = std::get_if<Residue>(&v_)) return std::to_string(r->r);
  return std::get<mpq_class>(v_).get_str();
}

FieldElement reduce_mod_p(const FieldElement& a, const FieldSpec& target) {
  std::uint32_t p = target.prime();
  if (a.spec().is_prime_field()) {
    if (a.spec().prime() != p) throw DomainError("reduce_mod_p: element already in another field");
    return a;
  }
  const mpq_class& q = a.rational();
  mpz_class den = q.get_den();
  if (mpz_divisible_ui_p(den.get_mpz_t(), p)) {
    throw DomainError("reduce_mod_p: " + std::to_string(p) + " divides denominator of " + a.str());
  }
  FieldElement n = FieldElement::from_mpz(target, q.get_num());
  FieldElement d = FieldElement::from_mpz(target, den);
  return n * d.inverse();
}

std::uint64_t multiplicative_order(const FieldElement& a) {
  if (!a.spec().is_prime_field()) throw DomainError("multiplicative_order needs a prime field");
  if (a.is_zero()) throw DomainError("multiplicative_order of zero");
  std::uint32_t p = a.spec().prime();
  std::uint64_t order = p - 1;
  // divide out each prime factor of p-1 while the power stays 1
  std::uint64_t n = p - 1;
  auto strip = [&](std::uint64_t q) {
    while (order % q == 0 && pow_mod(a.residue(), order / q, p) == 1) order /= q;
  };
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    while (n % q == 0) n /= q;
    strip(q);
  }
  if (n > 1) strip(n);
  return order;
}

}  // namespace hankelcf
