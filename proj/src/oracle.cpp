#include "hankelcf/oracle.hpp"

namespace hankelcf {

namespace {

FieldElement det_mod_p(std::vector<std::uint64_t> m, std::size_t n, const FieldSpec& spec) {
  const std::uint64_t p = spec.prime();
  auto at = [&](std::size_t i, std::size_t j) -> std::uint64_t& { return m[i * n + j]; };
  std::uint64_t det = 1 % p;
  bool negate = false;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && at(piv, col) == 0) ++piv;
    if (piv == n) return FieldElement::zero(spec);
    if (piv != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(at(piv, j), at(col, j));
      negate = !negate;
    }
    det = det * at(col, col) % p;
    std::uint64_t inv = inv_mod(static_cast<std::uint32_t>(at(col, col)), spec.prime());
    for (std::size_t i = col + 1; i < n; ++i) {
      if (at(i, col) == 0) continue;
      std::uint64_t f = at(i, col) * inv % p;
      for (std::size_t j = col; j < n; ++j) {
        at(i, j) = (at(i, j) + (p - f) * at(col, j)) % p;
      }
    }
  }
  FieldElement d = FieldElement::residue(spec, det);
  return negate ? -d : d;
}

// Fraction-free Bareiss; entries stay integral, the final entry is the det.
mpz_class det_bareiss(std::vector<mpz_class> m, std::size_t n) {
  auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return m[i * n + j]; };
  mpz_class prev(1);
  bool negate = false;
  for (std::size_t col = 0; col + 1 < n; ++col) {
    std::size_t piv = col;
    while (piv < n && at(piv, col) == 0) ++piv;
    if (piv == n) return mpz_class(0);
    if (piv != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(at(piv, j), at(col, j));
      negate = !negate;
    }
    for (std::size_t i = col + 1; i < n; ++i) {
      for (std::size_t j = col + 1; j < n; ++j) {
        mpz_class num = at(i, j) * at(col, col) - at(i, col) * at(col, j);
        internal_check(mpz_divisible_p(num.get_mpz_t(), prev.get_mpz_t()) != 0,
                       "Bareiss: non-exact division");
        at(i, j) = num / prev;
      }
      at(i, col) = 0;
    }
    prev = at(col, col);
  }
  mpz_class det = at(n - 1, n - 1);
  return negate ? mpz_class(-det) : det;
}

FieldElement det_rational(const std::vector<FieldElement>& entries, std::size_t n,
                          const FieldSpec& spec) {
  // scale each row to integers, Bareiss, divide the scale back out
  std::vector<mpz_class> m(n * n);
  mpz_class scale(1);
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class row_lcm(1);
    for (std::size_t j = 0; j < n; ++j) {
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(),
              entries[i * n + j].rational().get_den().get_mpz_t());
    }
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class& q = entries[i * n + j].rational();
      m[i * n + j] = q.get_num() * (row_lcm / q.get_den());
    }
    scale *= row_lcm;
  }
  mpz_class det = det_bareiss(std::move(m), n);
  return FieldElement::rational(det, scale);
}

}  // namespace

FieldElement hankel_det(const std::vector<FieldElement>& coeffs, const FieldSpec& spec,
                        std::size_t n, std::size_t k) {
  if (n == 0) return FieldElement::one(spec);
  if (coeffs.size() < k + 2 * n - 1) throw DomainError("hankel_det: series depth insufficient");
  if (spec.is_prime_field()) {
    std::vector<std::uint64_t> m(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m[i * n + j] = coeffs[k + i + j].residue();
    }
    return det_mod_p(std::move(m), n, spec);
  }
  std::vector<FieldElement> m(n * n, FieldElement::zero(spec));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = coeffs[k + i + j];
  }
  return det_rational(m, n, spec);
}

FieldElement hankel_det(const SeriesHandle& s, std::size_t n, std::size_t k) {
  if (n == 0) return FieldElement::one(s.spec());
  return hankel_det(s.prefix(k + 2 * n - 1), s.spec(), n, k);
}

std::vector<FieldElement> hankel_sequence_bruteforce(const std::vector<FieldElement>& coeffs,
                                                     const FieldSpec& spec, std::size_t n_max) {
  std::vector<FieldElement> out;
  out.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) out.push_back(hankel_det(coeffs, spec, n, 0));
  return out;
}

std::vector<FieldElement> hankel_sequence_bruteforce(const SeriesHandle& s, std::size_t n_max) {
  std::vector<FieldElement> coeffs = n_max == 0 ? std::vector<FieldElement>{}
                                                : s.prefix(2 * n_max - 1);
  return hankel_sequence_bruteforce(coeffs, s.spec(), n_max);
}

}  // namespace hankelcf
