#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gideal/monomial_ideal.hpp"
#include "gideal/staircase.hpp"

namespace gideal {

/// An element of the Goto class described prime by prime: the order d of the
/// ideal and, for each line P (an opaque label), the staircase of its factor
/// L(P, a). No components means M^d.
///
/// Labels are only bound to coordinates at realization time, so products,
/// closures and simple factorizations work for any number of primes.
class GForm {
 public:
  GForm() = default;
  /// Components whose staircase carries no prime exponents (M-powers,
  /// including the trivial staircase (0)) are dropped.
  GForm(std::int64_t order, std::map<std::string, Staircase> components);

  std::int64_t order() const { return order_; }
  const std::map<std::string, Staircase>& components() const { return components_; }

  bool operator==(const GForm&) const = default;

 private:
  std::int64_t order_ = 0;
  std::map<std::string, Staircase> components_;
};

using PrimeAssignment = std::map<std::string, CoordinatePrime>;

/// Binds labels "P<k>" to the prime omitting x_k (1-based) and any other
/// labels to the remaining coordinates in order. Throws if there are more
/// primes than variables.
PrimeAssignment default_assignment(const GForm& g, std::size_t n);

/// The monomial ideal sum_s P^{d-s} x^{a_s}, x the variable P omits.
MonomialIdeal staircase_ideal(CoordinatePrime p, const Staircase& a, std::size_t n);

/// The unique monomial ideal of order g.order() whose Q-family is
/// Q_j = intersection over primes of P_i^{alpha_ij}. Throws PreconditionError
/// for a non-injective assignment, too many primes, or an order below the
/// regularity of Q_0.
MonomialIdeal gform_to_monomial(const GForm& g, const PrimeAssignment& assignment, std::size_t n);

/// Orders add; shared primes combine by min-plus product.
GForm gform_product(const GForm& a, const GForm& b);

/// Closure of every staircase; the order is unchanged.
GForm gform_closure(const GForm& g);
bool gform_is_closed(const GForm& g);

/// g is equivalent to M^{m_exponent} * prod over primes of the listed J_P(d,t)
/// (m_exponent may be negative: then g * M^{-m_exponent} equals the product).
struct GFormSimpleFactorization {
  std::int64_t m_exponent = 0;
  std::map<std::string, SimpleFactorization> per_prime;
  bool operator==(const GFormSimpleFactorization&) const = default;
};

/// Throws PreconditionError unless g is closed.
GFormSimpleFactorization gform_simple_factorization(const GForm& g);

/// Product of the simple factors J_P(d,t) only (order sum of the d's).
GForm simple_factor_product(const GFormSimpleFactorization& f);

/// Same prime exponent sequences at every prime: the ideals agree up to a
/// power of M.
bool gforms_equivalent(const GForm& a, const GForm& b);

}  // namespace gideal
