#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace gideal {

/// Strictly increasing sequence 0 = a_0 < a_1 < ... < a_d encoding the ideal
/// L(P, a) = sum_i P^{d-i} l^{a_i} for a line P and a linear form l not in P.
class Staircase {
 public:
  /// The staircase (0), i.e. the unit ideal.
  Staircase() : a_{0} {}
  /// Throws PreconditionError unless a_0 = 0 and the sequence strictly increases.
  explicit Staircase(std::vector<std::int64_t> a);

  /// d, the order of L(P, a).
  std::int64_t length() const { return static_cast<std::int64_t>(a_.size()) - 1; }
  std::int64_t operator[](std::size_t i) const { return a_[i]; }
  const std::vector<std::int64_t>& values() const { return a_; }
  std::int64_t back() const { return a_.back(); }

  bool operator==(const Staircase&) const = default;
  auto operator<=>(const Staircase&) const = default;

 private:
  std::vector<std::int64_t> a_;
};

/// (ab)_j = min{a_r + b_s : r + s = j}.
Staircase minplus_product(const Staircase& a, const Staircase& b);
/// k-fold min-plus power, k >= 1.
Staircase minplus_power(const Staircase& a, std::int64_t k);

/// The staircase of the integral closure: a'_j = min_k ceil((a^(k))_{kj} / k),
/// with k ranging over 1..d.
Staircase closure_seq(const Staircase& a);
/// The same closure read off the lower convex hull of {(i, a_i)}: a'_j is
/// the ceiling of the hull at abscissa j.
Staircase hull_closure_oracle(const Staircase& a);
bool is_closed(const Staircase& a);

/// J(d, t): a_i = ceil(i t / d). Requires 1 <= d <= t.
Staircase jdt_seq(std::int64_t d, std::int64_t t);

/// (0, 1, ..., c): the staircase of M^c.
Staircase maximal_power_seq(std::int64_t c);

struct SimplePair {
  std::int64_t d = 0;
  std::int64_t t = 0;
  bool operator==(const SimplePair&) const = default;
};

/// (d, t) with d < t, gcd(d, t) = 1 and a == jdt_seq(d, t), if one exists.
std::optional<SimplePair> recognize_simple(const Staircase& a);

struct SimpleFactor {
  std::int64_t d = 0;
  std::int64_t t = 0;
  std::int64_t multiplicity = 0;
  bool operator==(const SimpleFactor&) const = default;
};

/// a = (0, 1, ..., m_power) * prod_k jdt_seq(d_k, t_k)^(mult_k).
/// Factors are listed by increasing slope t/d, each pair once.
struct SimpleFactorization {
  std::int64_t m_power = 0;
  std::vector<SimpleFactor> factors;
  bool operator==(const SimpleFactorization&) const = default;
};

/// Decomposes a closed staircase along the primitive edges of its lower hull.
/// Throws PreconditionError if `a` is not closed.
SimpleFactorization factor_simple(const Staircase& a);
/// Min-plus product of all factors of `f`.
Staircase reconstruct(const SimpleFactorization& f);

/// Exponents alpha_j with Q_j(L(P, a)) = P^{alpha_j} for an ideal of order d
/// = length(a): alpha_j = d - max{i : a_i - i <= j}. Trailing zeros dropped.
std::vector<std::int64_t> prime_exponents(const Staircase& a);
/// Inverse of prime_exponents for d = alpha_0:
/// a_s = s + min{j : alpha_j <= d - s}. Expects a weakly decreasing sequence.
Staircase staircase_from_exponents(const std::vector<std::int64_t>& alpha);

}  // namespace gideal
