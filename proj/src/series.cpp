#include "hankelcf/series.hpp"

#include <mutex>

namespace hankelcf {

namespace detail {

class SeriesSource {
 public:
  explicit SeriesSource(const FieldSpec& spec) : spec_(spec) {}
  virtual ~SeriesSource() = default;

  const FieldSpec& spec() const { return spec_; }

  std::vector<FieldElement> prefix(std::size_t n) {
    std::lock_guard<std::mutex> lock(mu_);
    if (memo_.size() < n) extend(n);
    internal_check(memo_.size() >= n, "series source produced too few coefficients");
    return std::vector<FieldElement>(memo_.begin(), memo_.begin() + static_cast<std::ptrdiff_t>(n));
  }

  virtual std::optional<std::pair<Polynomial, Polynomial>> exact_rational() const {
    return std::nullopt;
  }

  virtual std::optional<std::size_t> depth_limit() const { return std::nullopt; }

 protected:
  // Fills memo_ with at least n coefficients.
  virtual void extend(std::size_t n) = 0;
  FieldSpec spec_;
  std::vector<FieldElement> memo_;

 private:
  std::mutex mu_;
};

namespace {

class ExplicitSource final : public SeriesSource {
 public:
  ExplicitSource(const FieldSpec& spec, std::vector<FieldElement> coeffs)
      : SeriesSource(spec), declared_(coeffs.size()) {
    for (const auto& c : coeffs) {
      if (c.spec() != spec) throw DomainError("explicit coefficient field mismatch");
    }
    memo_ = std::move(coeffs);
  }

  std::optional<std::size_t> depth_limit() const override { return declared_; }

 protected:
  void extend(std::size_t n) override {
    if (n > declared_) {
      throw DomainError("explicit series: " + std::to_string(n) +
                        " coefficients requested, only " + std::to_string(declared_) +
                        " declared exact");
    }
  }

 private:
  std::size_t declared_;
};

class GeneratorSource final : public SeriesSource {
 public:
  GeneratorSource(const FieldSpec& spec, std::function<std::vector<FieldElement>(std::size_t)> gen)
      : SeriesSource(spec), gen_(std::move(gen)) {}

 protected:
  void extend(std::size_t n) override {
    auto v = gen_(n);
    internal_check(v.size() >= n, "generator returned too few coefficients");
    if (memo_.size() < v.size()) memo_ = std::move(v);
  }

 private:
  std::function<std::vector<FieldElement>(std::size_t)> gen_;
};

class RationalSource final : public SeriesSource {
 public:
  RationalSource(Polynomial num, Polynomial den)
      : SeriesSource(num.spec()), num_(std::move(num)), den_(std::move(den)) {
    if (num_.spec() != den_.spec()) throw DomainError("rational series field mismatch");
    if (den_.constant_term().is_zero()) throw DomainError("rational series with den(0) = 0");
  }

  std::optional<std::pair<Polynomial, Polynomial>> exact_rational() const override {
    return std::make_pair(num_, den_);
  }

 protected:
  void extend(std::size_t n) override {
    Polynomial inv = inverse_mod(den_, n);
    Polynomial p = mul_mod(num_, inv, n);
    memo_.assign(n, FieldElement::zero(spec_));
    for (std::size_t i = 0; i < n; ++i) memo_[i] = p.coeff(i);
  }

 private:
  Polynomial num_, den_;
};

class QuadraticRootSource final : public SeriesSource {
 public:
  QuadraticRootSource(Polynomial A, Polynomial B, Polynomial C, FieldElement f0)
      : SeriesSource(A.spec()),
        A_(std::move(A)),
        B_(std::move(B)),
        C_(std::move(C)),
        f0_(std::move(f0)) {
    if (B_.spec() != spec_ || C_.spec() != spec_ || f0_.spec() != spec_) {
      throw DomainError("quadratic root field mismatch");
    }
    FieldElement c0 = A_.constant_term() + B_.constant_term() * f0_ +
                      C_.constant_term() * f0_ * f0_;
    if (!c0.is_zero()) {
      throw DomainError("invalid branch: f0 = " + f0_.str() +
                        " does not satisfy the constant equation");
    }
    lead_ = B_.constant_term() + FieldElement::from_int(spec_, 2) * C_.constant_term() * f0_;
    if (lead_.is_zero()) {
      throw DomainError("unsolvable branch: B(0) + 2 C(0) f0 = 0");
    }
  }

 protected:
  void extend(std::size_t n) override {
    std::size_t have = memo_.size();
    if (have == 0) {
      memo_.push_back(f0_);
      sq_.push_back(f0_ * f0_);
      have = 1;
    }
    FieldElement inv_lead = lead_.inverse();
    for (std::size_t m = have; m < n; ++m) {
      // coefficient of x^m in A + B F + C F^2, with f_m unknown:
      //   A_m + B_0 f_m + sum_{i>=1} B_i f_{m-i}
      //       + C_0 (2 f_0 f_m + T_m) + sum_{i>=1} C_i S_{m-i} = 0
      // where S_k = (F^2)_k and T_m = S_m - 2 f_0 f_m.
      FieldElement s = A_.coeff(m);
      std::size_t btop = std::min<std::size_t>(m, std::max(B_.degree(), 0));
      for (std::size_t i = 1; i <= btop; ++i) {
        if (!B_.coeff(i).is_zero()) s = s + B_.coeff(i) * memo_[m - i];
      }
      FieldElement t = FieldElement::zero(spec_);
      for (std::size_t a = 1; 2 * a <= m; ++a) {
        std::size_t b = m - a;
        if (a == b) {
          t = t + memo_[a] * memo_[a];
        } else if (b < m) {
          t = t + FieldElement::from_int(spec_, 2) * memo_[a] * memo_[b];
        }
      }
      if (!C_.constant_term().is_zero()) s = s + C_.constant_term() * t;
      std::size_t ctop = std::min<std::size_t>(m, std::max(C_.degree(), 0));
      for (std::size_t i = 1; i <= ctop; ++i) {
        if (!C_.coeff(i).is_zero()) s = s + C_.coeff(i) * sq_[m - i];
      }
      FieldElement fm = -(s * inv_lead);
      memo_.push_back(fm);
      sq_.push_back(t + FieldElement::from_int(spec_, 2) * f0_ * fm);
    }
  }

 private:
  Polynomial A_, B_, C_;
  FieldElement f0_;
  FieldElement lead_ = FieldElement();
  std::vector<FieldElement> sq_;  // coefficients of F^2, kept in step with memo_
};

class SqrtSource final : public SeriesSource {
 public:
  SqrtSource(const FieldSpec& spec, SeriesHandle inner)
      : SeriesSource(spec), inner_(std::move(inner)) {}

 protected:
  void extend(std::size_t n) override {
    if (spec_.characteristic() == 2) {
      // Frobenius inverse: coefficient of x^i is the inner coefficient at 2i.
      auto in = inner_.prefix(2 * n);
      for (std::size_t i = 0; i < 2 * n; ++i) {
        if (i % 2 == 1 && !in[i].is_zero()) {
          throw DomainError("sqrt in characteristic 2: odd-exponent support at x^" +
                            std::to_string(i));
        }
      }
      memo_.clear();
      for (std::size_t i = 0; i < n; ++i) memo_.push_back(in[2 * i]);
      return;
    }
    auto in = inner_.prefix(n);
    std::size_t have = memo_.size();
    if (have == 0) {
      memo_.push_back(sqrt_constant(in.empty() ? FieldElement::zero(spec_) : in[0]));
      have = 1;
    }
    FieldElement two = FieldElement::from_int(spec_, 2);
    FieldElement inv2r0 = (two * memo_[0]).inverse();
    for (std::size_t m = have; m < n; ++m) {
      FieldElement t = FieldElement::zero(spec_);
      for (std::size_t a = 1; 2 * a <= m; ++a) {
        std::size_t b = m - a;
        if (a == b) t = t + memo_[a] * memo_[a];
        else t = t + two * memo_[a] * memo_[b];
      }
      memo_.push_back((in[m] - t) * inv2r0);
    }
  }

 private:
  FieldElement sqrt_constant(const FieldElement& c) {
    if (spec_.is_prime_field()) {
      auto r = sqrt_mod(c.residue(), spec_.prime());
      if (!r || *r == 0) {
        throw DomainError("sqrt: constant term " + c.str() + " has no invertible square root");
      }
      return FieldElement::residue(spec_, *r);
    }
    const mpq_class& q = c.rational();
    if (q <= 0) throw DomainError("sqrt: constant term must be a positive square");
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class rn, rd;
    if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), 2) ||
        !mpz_root(rd.get_mpz_t(), den.get_mpz_t(), 2)) {
      throw DomainError("sqrt: constant term " + c.str() + " is not a square in Q");
    }
    return FieldElement::rational(rn, rd);
  }

  SeriesHandle inner_;
};

class BinomialPowerSource final : public SeriesSource {
 public:
  BinomialPowerSource(const FieldSpec& target, mpq_class r, SeriesHandle base)
      : SeriesSource(target), r_(std::move(r)), base_(std::move(base)) {
    r_.canonicalize();
    if (target.is_prime_field()) {
      if (mpz_divisible_ui_p(r_.get_den().get_mpz_t(), target.prime())) {
        throw DomainError("binomial_power: exponent denominator not coprime to p");
      }
    }
  }

 protected:
  void extend(std::size_t n) override {
    // p_0 = 1;  n b_0 p_n = r sum_i (i+1) b_{i+1} p_{n-1-i} - sum_{i>=1} i b_i p_{n-i}
    // from base * P' = r * base' * P, computed over Q then reduced.
    auto raw = base_.prefix(n);
    std::vector<mpq_class> b(n);
    for (std::size_t i = 0; i < n; ++i) b[i] = lift_to_q(raw[i]);
    if (n > 0 && b[0] != 1) throw DomainError("binomial_power: base constant term must be 1");
    std::size_t have = qcoeffs_.size();
    if (have == 0 && n > 0) {
      qcoeffs_.push_back(mpq_class(1));
      have = 1;
    }
    for (std::size_t m = have; m < n; ++m) {
      mpq_class s(0);
      for (std::size_t i = 0; i + 1 <= m; ++i) {
        if (b[i + 1] != 0) s += r_ * mpq_class(static_cast<long>(i + 1)) * b[i + 1] * qcoeffs_[m - 1 - i];
      }
      for (std::size_t i = 1; i < m; ++i) {
        if (b[i] != 0) s -= mpq_class(static_cast<long>(m - i)) * b[i] * qcoeffs_[m - i];
      }
      s /= mpq_class(static_cast<long>(m));
      s.canonicalize();
      qcoeffs_.push_back(s);
    }
    memo_.clear();
    for (std::size_t i = 0; i < n; ++i) {
      FieldElement q = FieldElement::rational(qcoeffs_[i]);
      if (spec_.is_rationals()) {
        memo_.push_back(q);
      } else {
        try {
          memo_.push_back(reduce_mod_p(q, spec_));
        } catch (const DomainError&) {
          throw DomainError("binomial_power: p-adic pole at coefficient " + std::to_string(i));
        }
      }
    }
  }

 private:
  mpq_class lift_to_q(const FieldElement& c) const {
    if (c.spec().is_rationals()) return c.rational();
    return mpq_class(c.residue());
  }

  mpq_class r_;
  SeriesHandle base_;
  std::vector<mpq_class> qcoeffs_;
};

enum class BinOp { Add, Mul };

class BinarySource final : public SeriesSource {
 public:
  BinarySource(BinOp op, SeriesHandle a, SeriesHandle b)
      : SeriesSource(a.spec()), op_(op), a_(std::move(a)), b_(std::move(b)) {
    if (a_.spec() != b_.spec()) throw DomainError("series combinator field mismatch");
  }

 protected:
  void extend(std::size_t n) override {
    auto pa = a_.prefix(n);
    auto pb = b_.prefix(n);
    memo_.assign(n, FieldElement::zero(spec_));
    if (op_ == BinOp::Add) {
      for (std::size_t i = 0; i < n; ++i) memo_[i] = pa[i] + pb[i];
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        if (pa[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < n; ++j) {
          if (!pb[j].is_zero()) memo_[i + j] = memo_[i + j] + pa[i] * pb[j];
        }
      }
    }
  }

 private:
  BinOp op_;
  SeriesHandle a_, b_;
};

class ComposeXPowerSource final : public SeriesSource {
 public:
  ComposeXPowerSource(SeriesHandle s, std::size_t d)
      : SeriesSource(s.spec()), s_(std::move(s)), d_(d) {
    if (d_ == 0) throw DomainError("compose_x_power needs d >= 1");
  }

 protected:
  void extend(std::size_t n) override {
    auto in = s_.prefix(n / d_ + 1);
    memo_.assign(n, FieldElement::zero(spec_));
    for (std::size_t i = 0; i * d_ < n; ++i) memo_[i * d_] = in[i];
  }

 private:
  SeriesHandle s_;
  std::size_t d_;
};

class ShiftDivSource final : public SeriesSource {
 public:
  ShiftDivSource(SeriesHandle s, std::size_t m) : SeriesSource(s.spec()), s_(std::move(s)), m_(m) {}

 protected:
  void extend(std::size_t n) override {
    auto in = s_.prefix(n + m_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (!in[i].is_zero()) {
        throw DomainError("shift_div: coefficient at x^" + std::to_string(i) + " is nonzero");
      }
    }
    memo_.assign(in.begin() + static_cast<std::ptrdiff_t>(m_), in.end());
  }

 private:
  SeriesHandle s_;
  std::size_t m_;
};

class ScaleSource final : public SeriesSource {
 public:
  ScaleSource(FieldElement c, SeriesHandle s)
      : SeriesSource(s.spec()), c_(std::move(c)), s_(std::move(s)) {
    if (c_.spec() != spec_) throw DomainError("scale field mismatch");
  }

 protected:
  void extend(std::size_t n) override {
    auto in = s_.prefix(n);
    memo_.assign(n, FieldElement::zero(spec_));
    for (std::size_t i = 0; i < n; ++i) memo_[i] = c_ * in[i];
  }

 private:
  FieldElement c_;
  SeriesHandle s_;
};

}  // namespace

}  // namespace detail

using detail::SeriesSource;

SeriesHandle SeriesHandle::explicit_prefix(const FieldSpec& spec,
                                           std::vector<FieldElement> coeffs) {
  return SeriesHandle(std::make_shared<detail::ExplicitSource>(spec, std::move(coeffs)));
}

SeriesHandle SeriesHandle::from_polynomial(const Polynomial& p) {
  return rational_fn(p, Polynomial::constant(FieldElement::one(p.spec())));
}

SeriesHandle SeriesHandle::rational_fn(const Polynomial& num, const Polynomial& den) {
  return SeriesHandle(std::make_shared<detail::RationalSource>(num, den));
}

SeriesHandle SeriesHandle::quadratic_root(const Polynomial& A, const Polynomial& B,
                                          const Polynomial& C, const FieldElement& f0) {
  return SeriesHandle(std::make_shared<detail::QuadraticRootSource>(A, B, C, f0));
}

SeriesHandle SeriesHandle::sqrt_of(const SeriesHandle& inner) {
  return SeriesHandle(std::make_shared<detail::SqrtSource>(inner.spec(), inner));
}

SeriesHandle SeriesHandle::binomial_power(const mpq_class& r, const SeriesHandle& base,
                                          const FieldSpec& target) {
  return SeriesHandle(std::make_shared<detail::BinomialPowerSource>(target, r, base));
}

SeriesHandle SeriesHandle::add(const SeriesHandle& a, const SeriesHandle& b) {
  return SeriesHandle(std::make_shared<detail::BinarySource>(detail::BinOp::Add, a, b));
}

SeriesHandle SeriesHandle::mul(const SeriesHandle& a, const SeriesHandle& b) {
  return SeriesHandle(std::make_shared<detail::BinarySource>(detail::BinOp::Mul, a, b));
}

SeriesHandle SeriesHandle::compose_x_power(const SeriesHandle& s, std::size_t d) {
  return SeriesHandle(std::make_shared<detail::ComposeXPowerSource>(s, d));
}

SeriesHandle SeriesHandle::shift_div(const SeriesHandle& s, std::size_t m) {
  return SeriesHandle(std::make_shared<detail::ShiftDivSource>(s, m));
}

SeriesHandle SeriesHandle::scale(const FieldElement& c, const SeriesHandle& s) {
  return SeriesHandle(std::make_shared<detail::ScaleSource>(c, s));
}

SeriesHandle SeriesHandle::from_generator(
    const FieldSpec& spec, std::function<std::vector<FieldElement>(std::size_t)> gen) {
  return SeriesHandle(std::make_shared<detail::GeneratorSource>(spec, std::move(gen)));
}

const FieldSpec& SeriesHandle::spec() const { return src_->spec(); }

std::vector<FieldElement> SeriesHandle::prefix(std::size_t n) const { return src_->prefix(n); }

FieldElement SeriesHandle::coeff(std::size_t i) const { return src_->prefix(i + 1)[i]; }

Polynomial SeriesHandle::prefix_poly(std::size_t n) const {
  return Polynomial(spec(), prefix(n));
}

std::optional<std::pair<Polynomial, Polynomial>> SeriesHandle::exact_rational() const {
  return src_->exact_rational();
}

std::optional<std::size_t> SeriesHandle::depth_limit() const { return src_->depth_limit(); }

std::vector<FieldElement> solve_quadratic_prefix(const Polynomial& A, const Polynomial& B,
                                                 const Polynomial& C, const FieldElement& f0,
                                                 std::size_t n) {
  detail::QuadraticRootSource src(A, B, C, f0);
  return src.prefix(n);
}

}  // namespace hankelcf
