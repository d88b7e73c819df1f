#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "hankelcf/series.hpp"

namespace hankelcf {

/// One level of a super delta-fraction: numerator v x^{k...}, denominator
/// 1 + u(x) x with deg(u) <= k + delta - 2 (the quotient's own k).
struct PartialQuotient {
  FieldElement v;
  std::size_t k = 0;
  Polynomial u;

  friend bool operator==(const PartialQuotient&, const PartialQuotient&) = default;
};

struct Terminated {
  friend bool operator==(const Terminated&, const Terminated&) = default;
};
struct TruncatedAtDepth {
  std::size_t depth = 0;  // number of exactly determined leading coefficients
  friend bool operator==(const TruncatedAtDepth&, const TruncatedAtDepth&) = default;
};
struct PeriodicTail {
  std::size_t m = 0;  // preperiod quotient count
  std::size_t t = 0;  // period length; quotients[m..m+t) repeat forever
  friend bool operator==(const PeriodicTail&, const PeriodicTail&) = default;
};
using FractionTail = std::variant<Terminated, TruncatedAtDepth, PeriodicTail>;

/// A super delta-fraction; delta = 2 is the Hankel continued fraction.
struct HFraction {
  int delta = 2;
  std::vector<PartialQuotient> quotients;
  FractionTail tail = Terminated{};

  bool terminated() const { return std::holds_alternative<Terminated>(tail); }
  bool periodic() const { return std::holds_alternative<PeriodicTail>(tail); }
  bool truncated() const { return std::holds_alternative<TruncatedAtDepth>(tail); }

  /// Quotient j with the periodic tail unrolled; j must be in range for
  /// terminated/truncated fractions.
  const PartialQuotient& quotient_at(std::size_t j) const;
  /// Number of leading series coefficients this fraction pins down
  /// (SIZE_MAX for terminated and periodic tails).
  std::size_t determined_depth() const;

  friend bool operator==(const HFraction&, const HFraction&) = default;
};

struct ExpandOptions {
  std::size_t max_quotients = 256;
  std::size_t depth = 512;  // series coefficients consumed at most
};

/// Super delta-fraction expansion of a series (Stieltjes-style peeling).
/// Exact-rational sources are expanded in closed form and always reach a
/// Terminated tail; other sources stop honestly at TruncatedAtDepth.
HFraction expand_super_delta(const SeriesHandle& f, int delta, const ExpandOptions& opts = {});

/// Expansion of num/den with exact polynomial arithmetic.
HFraction expand_rational(const Polynomial& num, const Polynomial& den, int delta,
                          std::size_t max_quotients = 256);

/// First n coefficients of the series the fraction defines.
std::vector<FieldElement> eval_hfrac(const HFraction& h, std::size_t n);
SeriesHandle hfrac_series(const HFraction& h, std::size_t depth_hint = 0);

/// Hankel determinants H_0..H_n_max from a delta = 2 fraction: ladder indices
/// s_j = k_0 + ... + k_{j-1} + j carry (-1)^eps * prod v_i^{s_j - s_i}, all
/// other indices are zero. Terminated fractions have zeros past the ladder.
std::vector<FieldElement> hankel_from_hfrac(const HFraction& h, std::size_t n_max);

/// Ladder s_0..s_j while it stays <= n_cap (periodic tails unrolled).
std::vector<std::size_t> hankel_ladder(const HFraction& h, std::size_t n_cap);

/// Both sides of the Lemma on one peeled level: F = x^k / (1 + u x - x^{k+2} G)
/// gives H_n(F) = (-1)^{k(k+1)/2} H_{n-k-1}(G). Returns (lhs, rhs) for
/// n = 0..n_max, computed through the brute-force oracle.
std::vector<std::pair<FieldElement, FieldElement>> lemma22_reduce(std::size_t k,
                                                                  const Polynomial& u,
                                                                  const SeriesHandle& g,
                                                                  std::size_t n_max);

/// J-fraction via the Stieltjes algorithm. Succeeds while Hankel determinants
/// stay nonzero; otherwise reports the first vanishing index.
struct JFracResult {
  std::vector<FieldElement> u;  // u_1, u_2, ...
  std::vector<FieldElement> v;  // v_0, v_1, ...
  bool complete = false;        // rational tail reached (remainder 0)
  std::optional<std::size_t> failed_hankel_index;  // n with H_n = 0 blocking existence
};
JFracResult jfrac_expand(const SeriesHandle& f, std::size_t max_depth);

/// Plain-text rendering in the paper's K-notation, e.g.
/// "1/(1+x) + (x^2/1 + x^4/1 +)*".
std::string render_hfrac(const HFraction& h);

}  // namespace hankelcf
