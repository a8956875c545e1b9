#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gideal/ideal_classes.hpp"
#include "gideal/monomial_ideal.hpp"

namespace gideal {

/// Default number of I-adic Hilbert function terms computed before giving up
/// on the h-polynomial.
inline constexpr std::int64_t kDefaultTermBudget = 16;

/// (h_0 + h_1 z + ... + h_s z^s) / (1 - z)^n. Trailing zeros are trimmed.
class HilbertSeries {
 public:
  HilbertSeries(std::size_t n, std::vector<std::int64_t> h);

  std::size_t nvars() const { return n_; }
  const std::vector<std::int64_t>& h() const { return h_; }
  /// Degree of the numerator; -1 for the zero series.
  std::int64_t degree() const { return static_cast<std::int64_t>(h_.size()) - 1; }
  /// e(I) = sum of h_i.
  std::int64_t multiplicity() const;
  /// h_0 = length(R/I).
  std::int64_t colength() const { return h_.empty() ? 0 : h_.front(); }
  /// First `terms` coefficients of the power series expansion.
  std::vector<std::int64_t> expand(std::int64_t terms) const;

  HilbertSeries operator+(const HilbertSeries& o) const;
  HilbertSeries operator-(const HilbertSeries& o) const;
  bool operator==(const HilbertSeries&) const = default;

 private:
  std::size_t n_;
  std::vector<std::int64_t> h_;
};

/// HF_I(k) = length(I^k / I^{k+1}) for k = 0..terms-1, by explicit powers.
std::vector<std::int64_t> hf_filtration(const MonomialIdeal& ideal, std::int64_t terms);

/// The h-polynomial, accepted once the numerator of the truncated series has
/// vanished over a window of n + 2 extra coefficients. Throws
/// PreconditionError for infinite colength and Error when `budget` terms do
/// not suffice.
HilbertSeries h_polynomial(const MonomialIdeal& ideal, std::int64_t budget = kDefaultTermBudget);

/// HS_I = sum_i HS_{L_i} + HS_{M^d} - sum_i HS_{M^{d_i}} over the factors of I.
HilbertSeries hs_via_factorization(const MonomialIdeal& ideal, const CFactorization& factors,
                                   std::int64_t budget = kDefaultTermBudget);
HilbertSeries hs_via_factorization(const MonomialIdeal& ideal, std::int64_t budget = kDefaultTermBudget);

struct Multiplicity {
  std::int64_t e = 0;
  /// sum_i e(L_i) + d^n - sum_i d_i^n, when I is in C.
  std::optional<std::int64_t> from_factors;
};
/// e(I) from the h-polynomial; for ideals in C also from the factor formula,
/// and the two are required to agree.
Multiplicity multiplicity_e(const MonomialIdeal& ideal, std::int64_t budget = kDefaultTermBudget);

/// deg h_I <= n - 1. Throws PreconditionError unless I is a monomial G* ideal.
bool h_degree_check(const MonomialIdeal& ideal, std::int64_t budget = kDefaultTermBudget);

}  // namespace gideal
