#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gideal/gform.hpp"
#include "gideal/monomial_ideal.hpp"

namespace gideal {

/// Outcome of a membership test. `reason` names the failed condition (and the
/// degree or prime where it failed) when `holds` is false.
struct Verdict {
  bool holds = false;
  std::string reason;

  explicit operator bool() const { return holds; }
  static Verdict yes() { return {true, {}}; }
  static Verdict no(std::string why) { return {false, std::move(why)}; }
};

/// Increasing chain Q_0 ⊆ Q_1 ⊆ ... of saturated ideals with dim R/Q_j = 1,
/// followed by the unit ideal from index size() on.
class QFamily {
 public:
  /// Validates the chain; throws PreconditionError if it is not one.
  QFamily(std::size_t n, std::vector<MonomialIdeal> members);

  std::size_t nvars() const { return n_; }
  /// Number of proper members s.
  std::size_t size() const { return members_.size(); }
  const std::vector<MonomialIdeal>& members() const { return members_; }
  /// Q_j, the unit ideal for j >= size().
  MonomialIdeal at(std::size_t j) const;
  /// reg(Q_0), or 0 when every member is the unit ideal.
  std::int64_t d0() const { return d0_; }

  bool operator==(const QFamily& o) const { return n_ == o.n_ && members_ == o.members_; }

 private:
  std::size_t n_;
  std::vector<MonomialIdeal> members_;
  std::int64_t d0_ = 0;
};

/// Contracted from a quadratic transform: (sat I_<j>)_j = I_j for every j.
Verdict is_contracted(const MonomialIdeal& ideal);

struct QFamilyOutcome {
  std::optional<QFamily> family;
  /// First index whose member is neither the unit ideal nor one-dimensional.
  std::size_t failed_at = 0;
  std::string reason;
};
/// Q_j = (I_<d+j>)^sat, d = o(I). Throws PreconditionError for infinite colength.
QFamilyOutcome q_family(const MonomialIdeal& ideal);

/// sum over j of (Q_j)_{d0 + k + j}, an ideal of order d0 + k.
MonomialIdeal ideal_of_family(const QFamily& family, std::int64_t k);

Verdict is_in_C(const MonomialIdeal& ideal);
Verdict is_in_D(const MonomialIdeal& ideal);
/// mu(I) == binom(o(I) + n - 1, n - 1). Throws for infinite colength.
bool mu_class_check(const MonomialIdeal& ideal);

/// I ≡ J: with o(I) >= o(J), I = J * M^{o(I) - o(J)}. Both must be in C.
bool equiv(const MonomialIdeal& a, const MonomialIdeal& b);

struct CFactor {
  CoordinatePrime prime;
  QFamily family;
  MonomialIdeal ideal;
  std::int64_t order = 0;
};

/// I * M^s = (prod of factor ideals) * M^r.
struct CFactorization {
  std::vector<CFactor> factors;
  std::int64_t s = 0;
  std::int64_t r = 0;
};

/// One factor per minimal prime of Q_0(I); the balance identity and the
/// saturation identity for the Q-families are verified exactly.
/// Throws PreconditionError if I is not in C.
CFactorization factor_C(const MonomialIdeal& ideal);

/// Integral closure of an ideal of C, checked to lie in D and to commute
/// with multiplication by M.
MonomialIdeal closure_in_class(const MonomialIdeal& ideal);

struct GOutcome {
  std::optional<GForm> form;
  std::string reason;
};
/// Goto-class test; on success the GForm uses labels "P<k>" for the prime
/// omitting x_k (1-based). Throws PreconditionError if I is not in C.
GOutcome is_in_G(const MonomialIdeal& ideal);

}  // namespace gideal
